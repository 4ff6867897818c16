#include "unichar/cyclotomic.hpp"

#include <sstream>

namespace unichar {

CycInt CycInt::integer(int p, BigInt n) {
  CycInt r(p);
  r.c_[0] = std::move(n);
  return r;
}

CycInt CycInt::zeta_pow(int p, long e) {
  CycInt r(p);
  long em = ((e % p) + p) % p;
  if (em < p - 1) {
    r.c_[em] = 1;
  } else {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (auto& x : r.c_) x = -1;
  }
  return r;
}

CycInt CycInt::add(const CycInt& o) const {
  check_same(o);
  CycInt r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CycInt CycInt::sub(const CycInt& o) const {
  check_same(o);
  CycInt r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CycInt CycInt::neg() const {
  CycInt r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.c_[i] = -c_[i];
  return r;
}

CycInt CycInt::scale(const BigInt& n) const {
  CycInt r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.c_[i] = c_[i] * n;
  return r;
}

CycInt CycInt::mul(const CycInt& o) const {
  check_same(o);
  // accumulate on exponents mod p, then eliminate zeta^{p-1}
  std::vector<BigInt> acc(p_);
  for (int i = 0; i < p_ - 1; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < p_ - 1; ++j) {
      if (o.c_[j] == 0) continue;
      acc[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  CycInt r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.c_[i] = acc[i] - acc[p_ - 1];
  return r;
}

CycInt CycInt::conj() const {
  std::vector<BigInt> acc(p_);
  for (int i = 0; i < p_ - 1; ++i) acc[(p_ - i) % p_] = c_[i];
  CycInt r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.c_[i] = acc[i] - acc[p_ - 1];
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (int i = 1; i < p_ - 1; ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigInt CycInt::rational_value() const {
  if (!is_rational()) throw MathError("cyclotomic value is not rational");
  return c_[0];
}

std::optional<BigInt> CycInt::as_integer_multiple(const CycInt& a,
                                                  const BigInt& n) {
  if (n < 1) throw MathError("as_integer_multiple requires n >= 1");
  if (!a.is_rational()) return std::nullopt;
  if (a.c_[0] % n != 0) return std::nullopt;
  return a.c_[0] / n;
}

BigInt CycInt::norm_squared() const {
  CycInt n = mul(conj());
  if (!n.is_rational()) throw MathError("norm is not rational (bug)");
  return n.c_[0];
}

std::string CycInt::to_json() const {
  std::ostringstream os;
  os << "{\"p\": " << p_ << ", \"coeffs\": [";
  for (int i = 0; i < p_ - 1; ++i) {
    if (i) os << ", ";
    os << c_[i];
  }
  os << "]}";
  return os.str();
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < p_ - 1; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0)
      os << c_[i];
    else if (c_[i] == 1)
      os << "z^" << i;
    else
      os << c_[i] << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace unichar
