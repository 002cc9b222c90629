#include "modpic/series.hpp"

#include <sstream>
#include <stdexcept>

namespace modpic {

ResidueField::ResidueField() : base_(rational_field()), mod_(Poly::x(base_)) {}

ResidueField::ResidueField(const FieldDesc& base, Poly modulus)
    : base_(base), mod_(std::move(modulus)) {
  if (mod_.degree() < 1) throw std::domain_error("residue field modulus must be nonconstant");
  if (!mod_.leading().is_one()) mod_ = mod_.monic();
}

ResidueField ResidueField::of_base(const FieldDesc& f) {
  return ResidueField(f, Poly::x(f));
}

std::uint64_t ResidueField::order() const {
  if (base_.p == 0) return 0;
  std::uint64_t q = base_.order(), r = 1;
  for (unsigned i = 0; i < degree(); ++i) r *= q;
  return r;
}

Poly ResidueField::inv(const Poly& a) const {
  if (a.is_zero()) throw std::domain_error("residue field: inverse of zero");
  if (degree() == 1) return from_base(a[0].inverse());
  Poly s, t;
  Poly g = Poly::ext_gcd(a, mod_, s, t);
  if (g.degree() != 0) throw std::domain_error("residue field: non-invertible element");
  return reduce(s * g[0].inverse());
}

Poly ResidueField::pow(const Poly& a, Int e) const {
  if (e < 0) return pow(inv(a), -e);
  return Poly::pow_mod(a, e, mod_);
}

std::uint64_t ResidueField::code(const Poly& a) const {
  if (base_.p == 0) throw std::domain_error("code: rational residue field");
  const std::uint64_t q = base_.order();
  std::uint64_t v = 0;
  for (unsigned i = degree(); i-- > 0;) v = v * q + (i <= static_cast<unsigned>(a.degree()) ? a.coeff(i).code() : 0);
  return v;
}

Poly ResidueField::from_code(std::uint64_t c) const {
  if (base_.p == 0) throw std::domain_error("from_code: rational residue field");
  const std::uint64_t q = base_.order();
  std::vector<FieldElem> cs;
  for (unsigned i = 0; i < degree(); ++i) {
    cs.push_back(FieldElem::from_code(base_, c % q));
    c /= q;
  }
  return Poly(base_, std::move(cs), mod_.var());
}

Int ResidueField::unit_order(const Poly& a) const {
  if (a.is_zero()) throw std::domain_error("unit_order of zero");
  Int n = Int(order()) - 1;
  Int o = n;
  Int m = n;
  for (Int d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      m /= d;
      while (o % d == 0 && is_one(pow(a, o / d))) o /= d;
    }
  }
  if (m > 1)
    while (o % m == 0 && is_one(pow(a, o / m))) o /= m;
  return o;
}

Poly ResidueField::primitive_unit() const {
  Int qm1 = Int(order()) - 1;
  for (std::uint64_t c = 1; c < order(); ++c) {
    Poly a = from_code(c);
    if (unit_order(a) == qm1) return a;
  }
  throw std::logic_error("no primitive unit found");
}

// ---------------------------------------------------------------------------

TruncSeries::TruncSeries(const ResidueField& rf, std::size_t prec)
    : rf_(rf), c_(prec, rf.zero()), prec_(prec) {}

TruncSeries TruncSeries::constant(const ResidueField& rf, std::size_t prec, const Poly& c) {
  TruncSeries s(rf, prec);
  if (prec > 0) s.c_[0] = rf.reduce(c);
  return s;
}

TruncSeries TruncSeries::one(const ResidueField& rf, std::size_t prec) {
  return constant(rf, prec, rf.one());
}

TruncSeries TruncSeries::uniformizer(const ResidueField& rf, std::size_t prec) {
  TruncSeries s(rf, prec);
  if (prec > 1) s.c_[1] = rf.one();
  return s;
}

const Poly& TruncSeries::coeff(std::size_t i) const {
  if (i >= prec_) throw std::out_of_range("TruncSeries::coeff");
  return c_[i];
}

void TruncSeries::set_coeff(std::size_t i, const Poly& c) {
  if (i >= prec_) throw std::out_of_range("TruncSeries::set_coeff");
  c_[i] = rf_.reduce(c);
}

bool TruncSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::size_t TruncSeries::valuation() const {
  for (std::size_t i = 0; i < prec_; ++i)
    if (!c_[i].is_zero()) return i;
  return prec_;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  std::size_t n = std::min(prec_, o.prec_);
  TruncSeries r(rf_, n);
  for (std::size_t i = 0; i < n; ++i) r.c_[i] = rf_.add(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c = rf_.neg(c);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  std::size_t n = std::min(prec_, o.prec_);
  TruncSeries r(rf_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] = rf_.add(r.c_[i + j], rf_.mul(c_[i], o.c_[j]));
    }
  }
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (prec_ == 0) return *this;
  if (c_[0].is_zero()) throw std::domain_error("series inverse: constant term is zero");
  TruncSeries r(rf_, prec_);
  Poly inv0 = rf_.inv(c_[0]);
  r.c_[0] = inv0;
  for (std::size_t i = 1; i < prec_; ++i) {
    Poly acc = rf_.zero();
    for (std::size_t j = 1; j <= i; ++j) acc = rf_.add(acc, rf_.mul(c_[j], r.c_[i - j]));
    r.c_[i] = rf_.neg(rf_.mul(inv0, acc));
  }
  return r;
}

TruncSeries TruncSeries::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncSeries r = one(rf_, prec_);
  TruncSeries b = *this;
  while (e > 0) {
    if ((e & 1) != 0) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

TruncSeries TruncSeries::truncated(std::size_t prec) const {
  TruncSeries r(rf_, prec);
  for (std::size_t i = 0; i < std::min(prec, prec_); ++i) r.c_[i] = c_[i];
  return r;
}

TruncSeries TruncSeries::shifted(std::size_t n) const {
  TruncSeries r(rf_, prec_);
  for (std::size_t i = 0; i + n < prec_; ++i) r.c_[i + n] = c_[i];
  return r;
}

TruncSeries TruncSeries::unshifted(std::size_t n) const {
  for (std::size_t i = 0; i < std::min(n, prec_); ++i)
    if (!c_[i].is_zero()) throw std::domain_error("unshift below the valuation");
  TruncSeries r(rf_, prec_ >= n ? prec_ - n : 0);
  for (std::size_t i = 0; i < r.prec_; ++i) r.c_[i] = c_[i + n];
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  if (prec_ != o.prec_) return false;
  for (std::size_t i = 0; i < prec_; ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

std::string TruncSeries::str(const std::string& uvar) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < prec_; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << "(" << c_[i].str() << ")";
    } else {
      if (!rf_.is_one(c_[i])) os << "(" << c_[i].str() << ")*";
      os << uvar;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(" << uvar << "^" << prec_ << ")";
  return os.str();
}

TruncSeries series_log(const TruncSeries& s) {
  const ResidueField& rf = s.rf();
  if (!rf.is_rational())
    throw std::domain_error("series_log requires characteristic 0");
  if (s.precision() == 0) return s;
  if (!rf.is_one(s.coeff(0)))
    throw std::domain_error("series_log: series must have constant term 1");
  std::size_t n = s.precision();
  TruncSeries m = s - TruncSeries::one(rf, n);
  TruncSeries acc(rf, n);
  TruncSeries pw = m;
  for (std::size_t j = 1; j < n; ++j) {
    // (-1)^(j+1) m^j / j
    Rat sign = (j % 2 == 1) ? Rat(1, j) : Rat(-1, static_cast<long long>(j));
    TruncSeries term = pw;
    for (std::size_t i = 0; i < n; ++i)
      term.set_coeff(i, term.coeff(i) * FieldElem::from_rat(sign));
    acc = acc + term;
    pw = pw * m;
  }
  return acc;
}

TruncSeries series_exp(const TruncSeries& w) {
  const ResidueField& rf = w.rf();
  if (!rf.is_rational())
    throw std::domain_error("series_exp requires characteristic 0");
  std::size_t n = w.precision();
  if (n == 0) return w;
  if (!w.coeff(0).is_zero())
    throw std::domain_error("series_exp: argument must have positive valuation");
  TruncSeries acc = TruncSeries::one(rf, n);
  TruncSeries pw = w;
  Rat fact = 1;
  for (std::size_t j = 1; j < n; ++j) {
    fact /= Rat(static_cast<long long>(j));
    TruncSeries term = pw;
    for (std::size_t i = 0; i < n; ++i)
      term.set_coeff(i, term.coeff(i) * FieldElem::from_rat(fact));
    acc = acc + term;
    pw = pw * w;
  }
  return acc;
}

TruncSeries series_poly_root(const std::vector<TruncSeries>& phi, const Poly& y0) {
  if (phi.empty()) throw std::domain_error("series_poly_root: empty polynomial");
  const ResidueField& rf = phi[0].rf();
  const std::size_t n = phi[0].precision();

  auto eval = [&](const std::vector<TruncSeries>& cs, const TruncSeries& y) {
    TruncSeries acc(rf, n);
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * y + cs[i];
    return acc;
  };
  std::vector<TruncSeries> dphi;
  for (std::size_t i = 1; i < phi.size(); ++i) {
    TruncSeries t = phi[i];
    Poly scale = rf.from_base(FieldElem::from_int(rf.base(), Int(i)));
    TruncSeries scaled(rf, n);
    for (std::size_t j = 0; j < n; ++j) scaled.set_coeff(j, rf.mul(t.coeff(j), scale));
    dphi.push_back(scaled);
  }

  TruncSeries y = TruncSeries::constant(rf, n, y0);
  {
    TruncSeries f0 = eval(phi, y);
    if (!f0.coeff(0).is_zero())
      throw std::domain_error("series_poly_root: y0 is not a root modulo u");
    TruncSeries d0 = eval(dphi, y);
    if (d0.coeff(0).is_zero())
      throw std::domain_error("series_poly_root: derivative not a unit at y0");
  }
  // Newton; precision doubles each step
  std::size_t have = 1;
  while (have < n) {
    TruncSeries f = eval(phi, y);
    TruncSeries d = eval(dphi, y);
    y = y - f * d.inverse();
    have *= 2;
  }
  return y;
}

}  // namespace modpic
