#include "modpic/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace modpic {

Poly::Poly(const FieldDesc& f, std::vector<FieldElem> coeffs, std::string var)
    : f_(f), c_(std::move(coeffs)), var_(std::move(var)) {
  for (const auto& c : c_)
    if (!(c.field() == f_)) throw std::domain_error("Poly: coefficient field mismatch");
  strip();
}

void Poly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::zero(const FieldDesc& f, std::string var) { return Poly(f, {}, std::move(var)); }

Poly Poly::constant(const FieldElem& c, std::string var) {
  return Poly(c.field(), {c}, std::move(var));
}

Poly Poly::x(const FieldDesc& f, std::string var) {
  return Poly(f, {FieldElem::zero(f), FieldElem::one(f)}, std::move(var));
}

Poly Poly::from_ints(const FieldDesc& f, const std::vector<long long>& c, std::string var) {
  std::vector<FieldElem> v;
  v.reserve(c.size());
  for (long long n : c) v.push_back(FieldElem::from_int(f, Int(n)));
  return Poly(f, std::move(v), std::move(var));
}

const FieldElem& Poly::operator[](std::size_t i) const {
  if (i >= c_.size()) throw std::out_of_range("Poly::operator[]");
  return c_[i];
}

FieldElem Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : FieldElem::zero(f_);
}

const FieldElem& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), FieldElem::zero(f_));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(f_, std::move(r), var_);
}

Poly Poly::operator-() const {
  std::vector<FieldElem> r(c_);
  for (auto& c : r) c = -c;
  return Poly(f_, std::move(r), var_);
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return zero(f_, var_);
  std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, FieldElem::zero(f_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return Poly(f_, std::move(r), var_);
}

Poly Poly::operator*(const FieldElem& s) const {
  std::vector<FieldElem> r(c_);
  for (auto& c : r) c = c * s;
  return Poly(f_, std::move(r), var_);
}

Poly Poly::shifted(std::size_t n) const {
  if (is_zero()) return *this;
  std::vector<FieldElem> r(n, FieldElem::zero(f_));
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(f_, std::move(r), var_);
}

void Poly::divmod(const Poly& a, const Poly& d, Poly& q, Poly& r) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  FieldElem inv = d.leading().inverse();
  std::vector<FieldElem> rem(a.c_);
  int dd = d.degree();
  int da = a.degree();
  std::vector<FieldElem> quo(da >= dd ? da - dd + 1 : 0, FieldElem::zero(a.f_));
  for (int i = da; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    FieldElem c = rem[i] * inv;
    quo[i - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - c * d.c_[j];
  }
  q = Poly(a.f_, std::move(quo), a.var_);
  r = Poly(a.f_, std::move(rem), a.var_);
}

Poly Poly::operator/(const Poly& d) const {
  Poly q, r;
  divmod(*this, d, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::operator%(const Poly& d) const {
  Poly q, r;
  divmod(*this, d, q, r);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(f_, var_);
  std::vector<FieldElem> r;
  r.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.push_back(c_[i] * FieldElem::from_int(f_, Int(i)));
  return Poly(f_, std::move(r), var_);
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(f_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(FieldElem::one(f_), var_);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly Poly::ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  const FieldDesc& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = constant(FieldElem::one(f), a.var()), s1 = zero(f, a.var());
  Poly t0 = zero(f, a.var()), t1 = constant(FieldElem::one(f), a.var());
  while (!r1.is_zero()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  FieldElem inv = r0.leading().inverse();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

Poly Poly::pow_mod(const Poly& base, const Int& e, const Poly& mod) {
  Poly r = constant(FieldElem::one(base.field()), base.var());
  Poly b = base % mod;
  Int n = e;
  while (n > 0) {
    if ((n & 1) != 0) r = (r * b) % mod;
    b = (b * b) % mod;
    n >>= 1;
  }
  return r;
}

Poly Poly::compose(const Poly& b) const {
  Poly acc = zero(f_, b.var());
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * b + constant(c_[i], b.var());
  return acc;
}

Poly Poly::reversed(std::size_t n) const {
  if (static_cast<int>(n) < degree()) throw std::domain_error("reversed: n < degree");
  std::vector<FieldElem> r(n + 1, FieldElem::zero(f_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return Poly(f_, std::move(r), var_);
}

bool Poly::operator==(const Poly& o) const {
  if (!(f_ == o.f_) || c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

int Poly::cmp(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
  for (std::size_t i = c_.size(); i-- > 0;) {
    int c = c_[i].cmp(o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = c_[i].str();
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Bareiss fraction-free elimination; entries in F[t], divisions exact.
Poly det_bareiss_poly(std::vector<std::vector<Poly>> m, const FieldDesc& f) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(FieldElem::one(f));
  Poly prev = Poly::constant(FieldElem::one(f));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly::zero(f);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

}  // namespace

Poly resultant_bipoly(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  // trim leading (highest Y) zero coefficients
  auto trim = [](std::vector<Poly> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  };
  std::vector<Poly> A = trim(a), B = trim(b);
  if (A.empty() || B.empty()) throw std::domain_error("resultant of zero polynomial");
  const FieldDesc f = A[0].field();
  const std::size_t da = A.size() - 1, db = B.size() - 1;
  if (da == 0) return A[0].pow(static_cast<unsigned>(db));
  if (db == 0) return B[0].pow(static_cast<unsigned>(da));
  const std::size_t n = da + db;
  std::vector<std::vector<Poly>> syl(n, std::vector<Poly>(n, Poly::zero(f)));
  // db rows of A's coefficients, then da rows of B's (descending-degree layout)
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) syl[r][r + i] = A[da - i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) syl[db + r][r + i] = B[db - i];
  return det_bareiss_poly(std::move(syl), f);
}

FieldElem resultant(const Poly& a, const Poly& b) {
  std::vector<Poly> A, B;
  for (int i = 0; i <= a.degree(); ++i) A.push_back(Poly::constant(a[i], a.var()));
  for (int i = 0; i <= b.degree(); ++i) B.push_back(Poly::constant(b[i], b.var()));
  Poly r = resultant_bipoly(A, B);
  return r.is_zero() ? FieldElem::zero(a.field()) : r[0];
}

}  // namespace modpic
