#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unichar/common.hpp"

namespace unichar {

constexpr int kMaxDegree = 4;

// Element of F_{p^f} in the polynomial basis: c[0] + c[1]x + ... reduced mod
// the field's modulus. Always stored reduced mod p with c[i] = 0 for i >= f,
// so equality is plain coefficient equality.
struct FqElem {
  std::array<std::uint8_t, kMaxDegree> c{};

  bool operator==(const FqElem&) const = default;
  bool is_zero() const { return c == std::array<std::uint8_t, kMaxDegree>{}; }
};

// F_{p^f} for a small prime p and f <= 4, with a fixed monic irreducible
// modulus. The fields used by the verification suites are tiny (q <= 625), so
// elements stay dense coefficient vectors; the FieldSpec carries the modulus
// and precomputed trace/inverse data.
//
// Element order: elements are ranked by index(x) = sum c[i] p^i, i.e.
// coefficient-lexicographic with the constant coefficient least significant.
// Every "canonical least" tie-break in this library refers to this order.
class FieldSpec {
public:
  // modulus: coefficient list of a monic irreducible polynomial of degree f,
  // ascending degree (modulus.back() == 1). Irreducibility is checked by
  // trial division.
  FieldSpec(int p, int f, std::vector<int> modulus);

  // Field with the built-in Conway modulus; p in {2,3,5}, f in 1..4.
  static FieldSpec conway(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }

  FqElem zero() const { return FqElem{}; }
  FqElem one() const { return from_int(1); }
  FqElem from_int(long n) const;
  FqElem from_coeffs(const std::vector<int>& coeffs) const;
  FqElem gen() const;  // the class of x; equals from_int(p) conceptually

  long index(const FqElem& a) const;
  FqElem element(long idx) const;
  std::vector<FqElem> elements() const;          // all q, index order
  std::vector<FqElem> nonzero_elements() const;  // q-1, index order

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;  // throws MathError on zero
  FqElem div(const FqElem& a, const FqElem& b) const { return mul(a, inv(b)); }
  FqElem pow(const FqElem& a, long e) const;
  FqElem mul_int(long n, const FqElem& a) const;  // n*a, n an integer

  // Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^{f-1}}, as an element of Z_p.
  int trace(const FqElem& a) const;

  // Exponent e in Z_p with phi_a(x) = zeta_p^e for the fixed additive
  // character phi = zeta_p^{Tr(.)}; e = Tr(a*x).
  int phi_exponent(const FqElem& a, const FqElem& x) const {
    return trace(mul(a, x));
  }
  bool in_ker_phi(const FqElem& x) const { return trace(x) == 0; }

  // T_a = {t^p - a^{p-1} t : t in F_q}, sorted in index order. T_0 = F_q; for
  // a != 0 this is an additive subgroup of index p.
  std::vector<FqElem> t_a_set(const FqElem& a) const;

  // The canonical (least-index) b with b*T_a = ker phi. Requires a != 0.
  FqElem find_a_phi(const FqElem& a) const;

  // A fixed generator of the cyclic group F_q^x (least-index primitive
  // element).
  FqElem primitive_element() const;

  // Trace-dual basis of the polynomial basis {1, x, ..., x^{f-1}}: d[k] with
  // Tr(d[k] * x^j) = delta_{kj}. Used to recover a coefficient b from the
  // values Tr(b * x^j).
  const std::vector<FqElem>& dual_basis() const { return dual_basis_; }
  FqElem from_trace_values(const std::vector<int>& traces) const;

  // Serialization: "p^f:c0,c1,...".
  std::string to_string(const FqElem& a) const;
  // Short form used in words and tables: an integer for prime-subfield
  // values, else "c0,c1,...".
  std::string to_short_string(const FqElem& a) const;
  FqElem parse(const std::string& s) const;  // accepts both forms

  const std::vector<int>& modulus() const { return modulus_; }
  bool same(const FieldSpec& other) const {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
  }

private:
  int p_;
  int f_;
  long q_;
  std::vector<int> modulus_;
  std::vector<FqElem> frobenius_of_basis_;  // x^{j*p} reduced, j < f
  std::vector<FqElem> dual_basis_;

  FqElem reduce_poly(std::vector<int> poly) const;
  void check_irreducible() const;
  void build_dual_basis();
};

}  // namespace unichar
