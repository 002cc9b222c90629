#include "modpic/localunits.hpp"

#include <stdexcept>

#include "modpic/errors.hpp"
#include "modpic/version.hpp"

namespace modpic {

LocalUnitEngine::LocalUnitEngine(const ResidueField& rf, unsigned level)
    : rf_(rf), level_(level) {
  if (rf_.is_rational()) throw std::domain_error("LocalUnitEngine: characteristic p only");
  if (level < 1) throw std::domain_error("LocalUnitEngine: level must be >= 1");
  q_ = rf_.order();
  size_ = 1;
  for (unsigned i = 1; i < level_; ++i) {
    if (size_ > kMaxEnumeratedGroup / q_)
      throw BoundsError("local unit group exceeds the enumeration cap");
    size_ *= q_;
  }
  kmul_.resize(q_ * q_);
  kadd_.resize(q_ * q_);
  for (std::uint64_t a = 0; a < q_; ++a) {
    Poly pa = rf_.from_code(a);
    for (std::uint64_t b = 0; b <= a; ++b) {
      Poly pb = rf_.from_code(b);
      std::uint32_t m = static_cast<std::uint32_t>(rf_.code(rf_.mul(pa, pb)));
      std::uint32_t s = static_cast<std::uint32_t>(rf_.code(rf_.add(pa, pb)));
      kmul_[a * q_ + b] = kmul_[b * q_ + a] = m;
      kadd_[a * q_ + b] = kadd_[b * q_ + a] = s;
    }
  }
}

std::vector<std::uint32_t> LocalUnitEngine::digits(std::size_t code) const {
  std::vector<std::uint32_t> d(level_ > 0 ? level_ - 1 : 0);
  for (unsigned i = 0; i + 1 < level_; ++i) {
    d[i] = static_cast<std::uint32_t>(code % q_);
    code /= q_;
  }
  return d;
}

std::size_t LocalUnitEngine::encode(const std::vector<std::uint32_t>& d) const {
  std::size_t code = 0;
  for (unsigned i = level_ - 1; i-- > 0;) code = code * q_ + d[i];
  return code;
}

std::size_t LocalUnitEngine::mul(std::size_t a, std::size_t b) const {
  // (1 + A)(1 + B) = 1 + A + B + A*B truncated below u^level
  std::vector<std::uint32_t> da = digits(a), db = digits(b), dc(level_ - 1, 0);
  for (unsigned k = 0; k + 1 < level_; ++k) {
    std::uint32_t acc = kadd_[da[k] * q_ + db[k]];
    // convolution of the u^(i+1) coefficients: (i+1)+(j+1) = k+1
    for (unsigned i = 0; i + 1 <= k; ++i) {
      unsigned j = k - 1 - i;
      acc = kadd_[acc * q_ + kmul_[da[i] * q_ + db[j]]];
    }
    dc[k] = acc;
  }
  return encode(dc);
}

std::size_t LocalUnitEngine::power(std::size_t a, Int e) const {
  if (e < 0) return power(inv(a), -e);
  std::size_t r = identity(), b = a;
  while (e > 0) {
    if ((e & 1) != 0) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::size_t LocalUnitEngine::inv(std::size_t a) const {
  // exponent of the group is p^m with p^m >= level
  unsigned m = p_power_exponent(rf_.base().p, level_);
  Int e = boost::multiprecision::pow(Int(rf_.base().p), m);
  return power(a, e - 1);
}

std::size_t LocalUnitEngine::from_series(const TruncSeries& s) const {
  if (s.precision() < level_)
    throw std::domain_error("series precision below the engine level");
  if (!rf_.is_one(s.coeff(0)))
    throw std::domain_error("not a 1-unit");
  std::vector<std::uint32_t> d(level_ - 1, 0);
  for (unsigned i = 1; i < level_; ++i)
    d[i - 1] = static_cast<std::uint32_t>(rf_.code(s.coeff(i)));
  return encode(d);
}

TruncSeries LocalUnitEngine::to_series(std::size_t code) const {
  TruncSeries s = TruncSeries::one(rf_, level_);
  std::vector<std::uint32_t> d = digits(code);
  for (unsigned i = 1; i < level_; ++i) s.set_coeff(i, rf_.from_code(d[i - 1]));
  return s;
}

const EnumeratedGroup& LocalUnitEngine::group() const {
  if (!group_) {
    group_ = std::make_shared<EnumeratedGroup>(
        size_, [this](std::size_t a, std::size_t b) { return mul(a, b); }, identity());
  }
  return *group_;
}

LocalUnitStructure local_unit_structure(const Place& p, unsigned level) {
  LocalUnitStructure out;
  ResidueField rf = p.residue_field();
  if (rf.is_rational()) {
    out.char_p = false;
    out.dimension = level - 1;
    return out;
  }
  LocalUnitEngine engine(rf, level);
  out.char_p = true;
  out.order = Int(engine.size());
  out.group = engine.group().structure();
  return out;
}

TruncSeries truncated_log(const TruncSeries& s) {
  if (!s.rf().is_rational())
    throw std::domain_error("truncated_log: characteristic p rejected");
  return series_log(s);
}

TruncSeries truncated_exp(const TruncSeries& w) {
  if (!w.rf().is_rational())
    throw std::domain_error("truncated_exp: characteristic p rejected");
  return series_exp(w);
}

unsigned p_power_exponent(std::uint32_t p, unsigned n) {
  if (p == 0) throw std::domain_error("p_power_exponent: characteristic 0 rejected");
  if (n < 1) throw std::domain_error("p_power_exponent: level must be >= 1");
  unsigned m = 0;
  std::uint64_t pm = 1;
  while (pm < n) {
    pm *= p;
    ++m;
  }
  return m;
}

TruncSeries nth_root_in_quotient(const TruncSeries& s, const Int& n) {
  if (n < 1) throw std::domain_error("nth_root_in_quotient: n must be >= 1");
  if (n == 1) return s;
  const ResidueField& rf = s.rf();
  if (rf.is_rational()) {
    TruncSeries w = series_log(s);
    TruncSeries scaled = w;
    FieldElem invn = FieldElem::from_rat(Rat(1) / Rat(n));
    for (std::size_t i = 0; i < w.precision(); ++i)
      scaled.set_coeff(i, w.coeff(i) * invn);
    return series_exp(scaled);
  }
  const std::uint32_t p = rf.base().p;
  if (n % p == 0)
    throw std::domain_error("no n-th root in general when p divides n");
  unsigned m = p_power_exponent(p, static_cast<unsigned>(s.precision()));
  Int expo = boost::multiprecision::pow(Int(p), m);
  Int e = inv_mod(n % expo, expo);
  return s.pow(e);
}

}  // namespace modpic
