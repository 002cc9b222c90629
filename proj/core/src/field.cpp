#include "modpic/field.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "modpic/errors.hpp"

namespace modpic {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed defining polynomials of F_{p^k} over F_p, constant term first.
// Degree-k entry has k+1 coefficients with leading 1.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>&
poly_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> t = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return t;
}

}  // namespace

std::uint64_t FieldDesc::order() const {
  if (p == 0) return 0;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  return q;
}

std::string FieldDesc::str() const {
  if (p == 0) return "Q";
  std::ostringstream os;
  os << "F" << order();
  return os.str();
}

FieldDesc make_field(std::uint32_t p, std::uint32_t k) {
  if (p == 0) {
    if (k != 1) throw ParseError("rational field has extension degree 1");
    return FieldDesc{0, 1};
  }
  if (!is_prime_u32(p)) throw ParseError("characteristic must be 0 or prime");
  if (k < 1 || k > 4) throw ParseError("extension degree limited to k <= 4");
  if (k > 1 && !has_defining_poly(p, k))
    throw ParseError("no defining polynomial shipped for F_{" + std::to_string(p) + "^" +
                     std::to_string(k) + "}");
  return FieldDesc{p, k};
}

FieldDesc rational_field() { return FieldDesc{0, 1}; }

bool has_defining_poly(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return true;
  return poly_table().count({p, k}) > 0;
}

const std::vector<std::uint32_t>& defining_poly(std::uint32_t p, std::uint32_t k) {
  static const std::vector<std::uint32_t> empty;
  if (k == 1) return empty;
  auto it = poly_table().find({p, k});
  if (it == poly_table().end())
    throw ParseError("no defining polynomial for F_{" + std::to_string(p) + "^" +
                     std::to_string(k) + "}");
  return it->second;
}

FieldElem::FieldElem() : f_{0, 1}, q_(0) {}

FieldElem FieldElem::zero(const FieldDesc& f) {
  FieldElem e;
  e.f_ = f;
  e.q_ = 0;
  return e;
}

FieldElem FieldElem::one(const FieldDesc& f) {
  FieldElem e = zero(f);
  if (f.p == 0)
    e.q_ = 1;
  else
    e.c_[0] = 1;
  return e;
}

FieldElem FieldElem::from_int(const FieldDesc& f, const Int& n) {
  if (f.p == 0) return from_rat(Rat(n));
  Int r = n % f.p;
  if (r < 0) r += f.p;
  FieldElem e = zero(f);
  e.c_[0] = static_cast<std::uint32_t>(r);
  return e;
}

FieldElem FieldElem::from_rat(const Rat& r) {
  FieldElem e;
  e.f_ = rational_field();
  e.q_ = r;
  return e;
}

FieldElem FieldElem::from_coeffs(const FieldDesc& f, const std::vector<std::uint32_t>& c) {
  if (f.p == 0) throw std::domain_error("from_coeffs: rational field");
  if (c.size() > f.k) throw std::domain_error("from_coeffs: too many coefficients");
  FieldElem e = zero(f);
  for (std::size_t i = 0; i < c.size(); ++i) e.c_[i] = c[i] % f.p;
  return e;
}

FieldElem FieldElem::from_code(const FieldDesc& f, std::uint64_t code) {
  if (f.p == 0) throw std::domain_error("from_code: rational field");
  FieldElem e = zero(f);
  for (std::uint32_t i = 0; i < f.k; ++i) {
    e.c_[i] = static_cast<std::uint32_t>(code % f.p);
    code /= f.p;
  }
  if (code != 0) throw std::domain_error("from_code: code out of range");
  return e;
}

bool FieldElem::is_zero() const {
  if (f_.p == 0) return q_ == 0;
  for (std::uint32_t i = 0; i < f_.k; ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (f_.p == 0) return q_ == 1;
  if (c_[0] != 1) return false;
  for (std::uint32_t i = 1; i < f_.k; ++i)
    if (c_[i] != 0) return false;
  return true;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!(f_ == o.f_)) throw std::domain_error("field mismatch");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  FieldElem r = *this;
  if (f_.p == 0) {
    r.q_ += o.q_;
    return r;
  }
  for (std::uint32_t i = 0; i < f_.k; ++i) r.c_[i] = (c_[i] + o.c_[i]) % f_.p;
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  if (f_.p == 0) {
    r.q_ = -q_;
    return r;
  }
  for (std::uint32_t i = 0; i < f_.k; ++i) r.c_[i] = (f_.p - c_[i]) % f_.p;
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  if (f_.p == 0) {
    FieldElem r = *this;
    r.q_ *= o.q_;
    return r;
  }
  const std::uint64_t p = f_.p;
  const std::uint32_t k = f_.k;
  // schoolbook product, then reduce by the defining polynomial
  std::array<std::uint64_t, 7> prod{};
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p;
  if (k > 1) {
    const auto& m = defining_poly(f_.p, k);  // monic degree k
    for (int d = 2 * static_cast<int>(k) - 2; d >= static_cast<int>(k); --d) {
      std::uint64_t lead = prod[d];
      if (lead == 0) continue;
      prod[d] = 0;
      for (std::uint32_t j = 0; j < k; ++j) {
        std::uint64_t sub = (lead * m[j]) % p;
        std::uint64_t idx = d - k + j;
        prod[idx] = (prod[idx] + p - sub) % p;
      }
    }
  }
  FieldElem r = zero(f_);
  for (std::uint32_t i = 0; i < k; ++i) r.c_[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (f_.p == 0) {
    FieldElem r = *this;
    r.q_ = 1 / q_;
    return r;
  }
  // Fermat: a^(q-2)
  return pow(Int(f_.order()) - 2);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(const Int& e) const {
  if (f_.p == 0) {
    if (e < 0) return inverse().pow(-e);
    Rat r = 1;
    Int n = e;
    Rat b = q_;
    while (n > 0) {
      if ((n & 1) != 0) r *= b;
      b *= b;
      n >>= 1;
    }
    FieldElem out = *this;
    out.q_ = r;
    return out;
  }
  Int n = e;
  if (n < 0) {
    Int qm1 = Int(f_.order()) - 1;
    n %= qm1;
    if (n < 0) n += qm1;
  }
  FieldElem r = one(f_);
  FieldElem b = *this;
  while (n > 0) {
    if ((n & 1) != 0) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!(f_ == o.f_)) return false;
  if (f_.p == 0) return q_ == o.q_;
  for (std::uint32_t i = 0; i < f_.k; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

int FieldElem::cmp(const FieldElem& o) const {
  check_same(o);
  if (f_.p == 0) {
    if (q_ < o.q_) return -1;
    if (q_ > o.q_) return 1;
    return 0;
  }
  std::uint64_t a = code(), b = o.code();
  return a < b ? -1 : (a > b ? 1 : 0);
}

std::uint64_t FieldElem::code() const {
  if (f_.p == 0) throw std::domain_error("code: rational field");
  std::uint64_t v = 0;
  for (std::uint32_t i = f_.k; i-- > 0;) v = v * f_.p + c_[i];
  return v;
}

std::uint32_t FieldElem::coeff(std::uint32_t i) const {
  if (f_.p == 0) throw std::domain_error("coeff: rational field");
  return i < f_.k ? c_[i] : 0;
}

const Rat& FieldElem::rat() const {
  if (f_.p != 0) throw std::domain_error("rat: finite field");
  return q_;
}

Int FieldElem::mult_order() const {
  if (f_.p == 0) throw std::domain_error("mult_order: rational field");
  if (is_zero()) throw std::domain_error("mult_order of zero");
  Int n = Int(f_.order()) - 1;
  Int o = n;
  // strip prime factors while the power stays 1
  Int m = n;
  for (Int d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      m /= d;
      while (o % d == 0 && pow(o / d).is_one()) o /= d;
    }
  }
  if (m > 1)
    while (o % m == 0 && pow(o / m).is_one()) o /= m;
  return o;
}

std::string FieldElem::str() const {
  if (f_.p == 0) {
    std::ostringstream os;
    os << q_;
    return os.str();
  }
  if (f_.k == 1) return std::to_string(c_[0]);
  return std::to_string(code());
}

std::vector<FieldElem> enumerate_field(const FieldDesc& f) {
  if (f.p == 0) throw std::domain_error("enumerate_field: rational field");
  std::vector<FieldElem> out;
  std::uint64_t q = f.order();
  out.reserve(q);
  for (std::uint64_t c = 0; c < q; ++c) out.push_back(FieldElem::from_code(f, c));
  return out;
}

FieldElem primitive_element(const FieldDesc& f) {
  Int qm1 = Int(f.order()) - 1;
  for (std::uint64_t c = 1; c < f.order(); ++c) {
    FieldElem e = FieldElem::from_code(f, c);
    if (e.mult_order() == qm1) return e;
  }
  throw std::logic_error("no primitive element found");
}

}  // namespace modpic
