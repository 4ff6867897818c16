#include "unichar/fq.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace unichar {

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
  // splitmix64 over the seed and a FNV hash of the tag
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : tag) h = (h ^ ch) * 1099511628211ull;
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Conway polynomials for the shipped fields, ascending-degree coefficients.
const std::map<std::pair<int, int>, std::vector<int>> kConway = {
    {{2, 1}, {1, 1}},          {{2, 2}, {1, 1, 1}},
    {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
    {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},
    {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
    {{5, 1}, {3, 1}},          {{5, 2}, {2, 4, 1}},
    {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
};

// Polynomial arithmetic over Z_p on int vectors (ascending degree).
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  // m monic
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > dm) {
    int lead = a.back();
    int da = static_cast<int>(a.size()) - 1;
    if (lead != 0) {
      for (int i = 0; i <= dm; ++i) {
        int& x = a[da - dm + i];
        x = ((x - lead * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace

FieldSpec::FieldSpec(int p, int f, std::vector<int> modulus)
    : p_(p), f_(f), modulus_(std::move(modulus)) {
  if (p < 2 || f < 1 || f > kMaxDegree)
    throw MathError("unsupported field parameters");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw MathError("p is not prime");
  if (static_cast<int>(modulus_.size()) != f + 1 || modulus_.back() != 1)
    throw MathError("modulus must be monic of degree f");
  for (int& c : modulus_) c = ((c % p) + p) % p;
  if (modulus_.back() != 1) throw MathError("modulus not monic mod p");
  q_ = ipow(p_, f_);
  check_irreducible();

  // Frobenius images x^{j p} of the basis, for the trace map.
  frobenius_of_basis_.resize(f_);
  for (int j = 0; j < f_; ++j) {
    std::vector<int> poly{1};
    std::vector<int> xj(j + 1, 0);
    xj[j] = 1;
    for (int k = 0; k < p_; ++k) poly = poly_mod(poly_mul(poly, xj, p_), modulus_, p_);
    frobenius_of_basis_[j] = reduce_poly(poly);
  }
  build_dual_basis();
}

FieldSpec FieldSpec::conway(int p, int f) {
  auto it = kConway.find({p, f});
  if (it == kConway.end())
    throw MathError("no built-in Conway modulus for p=" + std::to_string(p) +
                    ", f=" + std::to_string(f));
  return FieldSpec(p, f, it->second);
}

void FieldSpec::check_irreducible() const {
  if (f_ == 1) return;
  // Trial division by every monic polynomial of degree 1 .. f/2.
  for (int d = 1; 2 * d <= f_; ++d) {
    long count = ipow(p_, d);
    for (long idx = 0; idx < count; ++idx) {
      std::vector<int> trial(d + 1, 0);
      long v = idx;
      for (int i = 0; i < d; ++i) {
        trial[i] = static_cast<int>(v % p_);
        v /= p_;
      }
      trial[d] = 1;
      if (poly_mod(modulus_, trial, p_).empty())
        throw MathError("modulus is reducible");
    }
  }
}

FqElem FieldSpec::reduce_poly(std::vector<int> poly) const {
  for (int& c : poly) c = ((c % p_) + p_) % p_;
  poly = poly_mod(poly, modulus_, p_);
  FqElem r;
  for (size_t i = 0; i < poly.size(); ++i) r.c[i] = static_cast<std::uint8_t>(poly[i]);
  return r;
}

FqElem FieldSpec::from_int(long n) const {
  FqElem r;
  r.c[0] = static_cast<std::uint8_t>(((n % p_) + p_) % p_);
  return r;
}

FqElem FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > f_)
    throw MathError("too many coefficients for this field");
  FqElem r;
  for (size_t i = 0; i < coeffs.size(); ++i)
    r.c[i] = static_cast<std::uint8_t>(((coeffs[i] % p_) + p_) % p_);
  return r;
}

FqElem FieldSpec::gen() const {
  if (f_ == 1) return from_int(0);
  FqElem r;
  r.c[1] = 1;
  return r;
}

long FieldSpec::index(const FqElem& a) const {
  long idx = 0;
  for (int i = f_ - 1; i >= 0; --i) idx = idx * p_ + a.c[i];
  return idx;
}

FqElem FieldSpec::element(long idx) const {
  FqElem r;
  for (int i = 0; i < f_; ++i) {
    r.c[i] = static_cast<std::uint8_t>(idx % p_);
    idx /= p_;
  }
  return r;
}

std::vector<FqElem> FieldSpec::elements() const {
  std::vector<FqElem> v(q_);
  for (long i = 0; i < q_; ++i) v[i] = element(i);
  return v;
}

std::vector<FqElem> FieldSpec::nonzero_elements() const {
  std::vector<FqElem> v(q_ - 1);
  for (long i = 1; i < q_; ++i) v[i - 1] = element(i);
  return v;
}

FqElem FieldSpec::add(const FqElem& a, const FqElem& b) const {
  FqElem r;
  for (int i = 0; i < f_; ++i) {
    int s = a.c[i] + b.c[i];
    r.c[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FqElem FieldSpec::sub(const FqElem& a, const FqElem& b) const {
  FqElem r;
  for (int i = 0; i < f_; ++i) {
    int s = a.c[i] - b.c[i];
    r.c[i] = static_cast<std::uint8_t>(s < 0 ? s + p_ : s);
  }
  return r;
}

FqElem FieldSpec::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FieldSpec::mul(const FqElem& a, const FqElem& b) const {
  // allocation-free schoolbook product with modulus reduction; f <= 4
  int acc[2 * kMaxDegree - 1] = {0};
  for (int i = 0; i < f_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < f_; ++j) acc[i + j] += a.c[i] * b.c[j];
  }
  for (int d = 2 * f_ - 2; d >= f_; --d) {
    int lead = acc[d] % p_;
    if (lead != 0) {
      for (int i = 0; i < f_; ++i) {
        int& x = acc[d - f_ + i];
        x = ((x - lead * modulus_[i]) % p_ + p_) % p_;
      }
    }
    acc[d] = 0;
  }
  FqElem r;
  for (int i = 0; i < f_; ++i)
    r.c[i] = static_cast<std::uint8_t>(((acc[i] % p_) + p_) % p_);
  return r;
}

FqElem FieldSpec::pow(const FqElem& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  FqElem r = one();
  FqElem base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FqElem FieldSpec::inv(const FqElem& a) const {
  if (a.is_zero()) throw MathError("inversion of zero");
  return pow(a, q_ - 2);
}

FqElem FieldSpec::mul_int(long n, const FqElem& a) const {
  return mul(from_int(n), a);
}

int FieldSpec::trace(const FqElem& a) const {
  // Tr is F_p-linear; Tr(x^j) is the constant term pattern of the
  // accumulated Frobenius orbit. Compute directly: sum of a^{p^i}.
  FqElem s = a;
  FqElem acc = a;
  for (int i = 1; i < f_; ++i) {
    // apply Frobenius to acc via linearity on the basis
    FqElem next;
    for (int j = 0; j < f_; ++j) {
      if (acc.c[j] == 0) continue;
      for (int k = 0; k < f_; ++k) {
        int v = next.c[k] + acc.c[j] * frobenius_of_basis_[j].c[k];
        next.c[k] = static_cast<std::uint8_t>(v % p_);
      }
    }
    acc = next;
    s = add(s, acc);
  }
  for (int i = 1; i < f_; ++i)
    if (s.c[i] != 0) throw MathError("trace did not land in the prime field");
  return s.c[0];
}

void FieldSpec::build_dual_basis() {
  // Solve Tr(d_k x^j) = delta_{kj} by Gaussian elimination on the f x f
  // trace form matrix M[j][i] = Tr(x^j x^i).
  std::vector<std::vector<int>> m(f_, std::vector<int>(f_));
  for (int j = 0; j < f_; ++j)
    for (int i = 0; i < f_; ++i) {
      FqElem xj = element(ipow(p_, j));
      FqElem xi = element(ipow(p_, i));
      m[j][i] = trace(mul(xj, xi));
    }
  dual_basis_.resize(f_);
  for (int k = 0; k < f_; ++k) {
    // solve M * d = e_k over Z_p
    std::vector<std::vector<int>> a = m;
    std::vector<int> rhs(f_, 0);
    rhs[k] = 1;
    for (int col = 0, row = 0; col < f_ && row < f_; ++col) {
      int piv = -1;
      for (int r = row; r < f_; ++r)
        if (a[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[row]);
      std::swap(rhs[piv], rhs[row]);
      // normalize
      int invlead = 1;
      while ((invlead * a[row][col]) % p_ != 1) ++invlead;
      for (int c2 = 0; c2 < f_; ++c2) a[row][c2] = (a[row][c2] * invlead) % p_;
      rhs[row] = (rhs[row] * invlead) % p_;
      for (int r = 0; r < f_; ++r) {
        if (r == row || a[r][col] == 0) continue;
        int fct = a[r][col];
        for (int c2 = 0; c2 < f_; ++c2)
          a[r][c2] = ((a[r][c2] - fct * a[row][c2]) % p_ + p_) % p_;
        rhs[r] = ((rhs[r] - fct * rhs[row]) % p_ + p_) % p_;
      }
      ++row;
    }
    FqElem d;
    for (int i = 0; i < f_; ++i) d.c[i] = static_cast<std::uint8_t>(rhs[i]);
    dual_basis_[k] = d;
    for (int j = 0; j < f_; ++j) {
      FqElem xj = element(ipow(p_, j));
      if (trace(mul(d, xj)) != (j == k ? 1 : 0))
        throw MathError("dual basis construction failed (degenerate trace form)");
    }
  }
}

FqElem FieldSpec::from_trace_values(const std::vector<int>& traces) const {
  if (static_cast<int>(traces.size()) != f_)
    throw MathError("need one trace value per basis element");
  FqElem b = zero();
  for (int j = 0; j < f_; ++j)
    b = add(b, mul_int(traces[j], dual_basis_[j]));
  return b;
}

std::vector<FqElem> FieldSpec::t_a_set(const FqElem& a) const {
  std::vector<bool> seen(q_, false);
  FqElem ap = pow(a, p_ - 1);
  for (long i = 0; i < q_; ++i) {
    FqElem t = element(i);
    FqElem v = sub(pow(t, p_), mul(ap, t));
    seen[index(v)] = true;
  }
  std::vector<FqElem> out;
  for (long i = 0; i < q_; ++i)
    if (seen[i]) out.push_back(element(i));
  return out;
}

FqElem FieldSpec::find_a_phi(const FqElem& a) const {
  if (a.is_zero())
    throw MathError("find_a_phi: T_0 = F_q has no index-p multiple");
  std::vector<FqElem> ta = t_a_set(a);
  std::vector<bool> ker(q_, false);
  for (long i = 0; i < q_; ++i) ker[i] = in_ker_phi(element(i));
  for (long bi = 1; bi < q_; ++bi) {
    FqElem b = element(bi);
    bool ok = true;
    std::vector<bool> img(q_, false);
    for (const FqElem& t : ta) img[index(mul(b, t))] = true;
    for (long i = 0; i < q_ && ok; ++i) ok = (img[i] == ker[i]);
    if (ok) return b;
  }
  throw MathError("find_a_phi: no multiplier found (should be impossible)");
}

FqElem FieldSpec::primitive_element() const {
  for (long i = 1; i < q_; ++i) {
    FqElem g = element(i);
    long order = 1;
    FqElem acc = g;
    while (!(acc == one())) {
      acc = mul(acc, g);
      ++order;
    }
    if (order == q_ - 1) return g;
  }
  throw MathError("no primitive element (not a field?)");
}

std::string FieldSpec::to_string(const FqElem& a) const {
  std::ostringstream os;
  os << p_ << "^" << f_ << ":";
  for (int i = 0; i < f_; ++i) {
    if (i) os << ",";
    os << static_cast<int>(a.c[i]);
  }
  return os.str();
}

std::string FieldSpec::to_short_string(const FqElem& a) const {
  bool prime_sub = true;
  for (int i = 1; i < f_; ++i) prime_sub &= (a.c[i] == 0);
  std::ostringstream os;
  if (prime_sub) {
    os << static_cast<int>(a.c[0]);
  } else {
    for (int i = 0; i < f_; ++i) {
      if (i) os << ",";
      os << static_cast<int>(a.c[i]);
    }
  }
  return os.str();
}

FqElem FieldSpec::parse(const std::string& s) const {
  std::string body = s;
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    std::string head = s.substr(0, colon);
    std::ostringstream expect;
    expect << p_ << "^" << f_;
    if (head != expect.str())
      throw MathError("field mismatch in element string '" + s + "'");
    body = s.substr(colon + 1);
  }
  std::vector<int> coeffs;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw MathError("malformed element string '" + s + "'");
    coeffs.push_back(std::stoi(tok));
  }
  if (coeffs.empty()) throw MathError("malformed element string '" + s + "'");
  if (coeffs.size() == 1) return from_int(coeffs[0]);
  return from_coeffs(coeffs);
}

}  // namespace unichar
