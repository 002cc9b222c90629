#include "modpic/modulus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "modpic/errors.hpp"
#include "modpic/factor.hpp"

namespace modpic {

Modulus::Modulus(const Curve& c, std::vector<std::pair<Place, unsigned>> comps)
    : curve_(c), comps_(std::move(comps)) {
  for (const auto& [p, n] : comps_) {
    if (!(p.curve() == c)) throw std::domain_error("modulus component on a different curve");
    if (n < 1) throw ParseError("modulus multiplicities must be >= 1");
  }
  std::sort(comps_.begin(), comps_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < comps_.size(); ++i)
    if (comps_[i].first == comps_[i + 1].first)
      throw ParseError("modulus places must be pairwise distinct");
}

bool Modulus::contains(const Place& p) const { return multiplicity(p) > 0; }

unsigned Modulus::multiplicity(const Place& p) const {
  for (const auto& [q, n] : comps_)
    if (q == p) return n;
  return 0;
}

Modulus Modulus::reduced() const {
  std::vector<std::pair<Place, unsigned>> r;
  r.reserve(comps_.size());
  for (const auto& [p, n] : comps_) r.emplace_back(p, 1u);
  return Modulus(curve_, std::move(r));
}

bool Modulus::is_reduced() const {
  for (const auto& [p, n] : comps_)
    if (n > 1) return false;
  return true;
}

long long Modulus::degree() const {
  long long d = 0;
  for (const auto& [p, n] : comps_) d += static_cast<long long>(n) * p.degree();
  return d;
}

bool Modulus::operator==(const Modulus& o) const {
  return curve_ == o.curve_ && comps_ == o.comps_;
}

std::string Modulus::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) os << " + ";
    if (comps_[i].second != 1) os << comps_[i].second << "*";
    os << "[" << comps_[i].first.str() << "]";
  }
  return os.str();
}

ZeroCycle::ZeroCycle(const Curve& c, std::vector<std::pair<Place, Int>> support)
    : curve_(c), supp_(std::move(support)) {
  for (const auto& [p, m] : supp_)
    if (!(p.curve() == c)) throw std::domain_error("cycle support on a different curve");
  normalize();
}

void ZeroCycle::normalize() {
  std::sort(supp_.begin(), supp_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Place, Int>> merged;
  for (auto& [p, m] : supp_) {
    if (!merged.empty() && merged.back().first == p)
      merged.back().second += m;
    else
      merged.emplace_back(p, m);
  }
  supp_.clear();
  for (auto& [p, m] : merged)
    if (m != 0) supp_.emplace_back(p, m);
}

Int ZeroCycle::degree() const {
  Int d = 0;
  for (const auto& [p, m] : supp_) d += m * Int(p.degree());
  return d;
}

Int ZeroCycle::coefficient(const Place& p) const {
  for (const auto& [q, m] : supp_)
    if (q == p) return m;
  return 0;
}

ZeroCycle ZeroCycle::operator+(const ZeroCycle& o) const {
  if (!(curve_ == o.curve_)) throw std::domain_error("cycle curves differ");
  std::vector<std::pair<Place, Int>> s = supp_;
  s.insert(s.end(), o.supp_.begin(), o.supp_.end());
  return ZeroCycle(curve_, std::move(s));
}

ZeroCycle ZeroCycle::operator-(const ZeroCycle& o) const { return *this + (o * Int(-1)); }

ZeroCycle ZeroCycle::operator*(const Int& n) const {
  std::vector<std::pair<Place, Int>> s;
  if (n != 0)
    for (const auto& [p, m] : supp_) s.emplace_back(p, m * n);
  return ZeroCycle(curve_, std::move(s));
}

bool ZeroCycle::operator==(const ZeroCycle& o) const {
  return curve_ == o.curve_ && supp_ == o.supp_;
}

bool ZeroCycle::meets(const Modulus& d) const {
  for (const auto& [p, m] : supp_)
    if (d.contains(p)) return true;
  return false;
}

std::string ZeroCycle::str() const {
  if (supp_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : supp_) {
    if (!first) os << (m > 0 ? " + " : " - ");
    else if (m < 0) os << "-";
    first = false;
    Int a = abs_int(m);
    if (a != 1) os << a << "*";
    os << "[" << p.str() << "]";
  }
  return os.str();
}

bool in_modulus_group(const RationalFunction& f, const Modulus& d) {
  if (f.is_zero()) throw std::domain_error("in_modulus_group: zero function");
  if (f.is_one()) return true;
  RationalFunction fm1 = f - RationalFunction::one(f.curve());
  for (const auto& [p, n] : d.components()) {
    if (valuation(fm1, p) < static_cast<long long>(n)) return false;
  }
  return true;
}

ZeroCycle divisor_of(const RationalFunction& f) {
  if (f.is_zero()) throw std::domain_error("divisor of the zero function");
  const Curve& c = f.curve();
  std::vector<std::pair<Place, Int>> supp;
  if (c.kind() == CurveKind::P1) {
    if (c.field().p == 0) {
      // over Q only rational places are modeled; reject anything else
      auto handle = [&](const Poly& poly, int sign) {
        if (poly.degree() <= 0) return;
        auto rts = roots_with_multiplicity(poly);
        unsigned total = 0;
        for (const auto& [a, m] : rts) {
          supp.emplace_back(Place::p1_rational(c, a), Int(sign) * Int(m));
          total += m;
        }
        if (static_cast<int>(total) != poly.degree())
          throw SupportError("divisor has places outside the rational-place model over Q");
      };
      handle(f.num(), 1);
      handle(f.den(), -1);
    } else {
      Factorization fn = poly_factor(f.num());
      for (const auto& [q, m] : fn.factors)
        supp.emplace_back(Place::p1_finite(c, q), Int(m));
      Factorization fd = poly_factor(f.den());
      for (const auto& [q, m] : fd.factors)
        supp.emplace_back(Place::p1_finite(c, q), Int(-static_cast<long long>(m)));
    }
    long long at_inf = static_cast<long long>(f.den().degree()) - f.num().degree();
    if (at_inf != 0) supp.emplace_back(Place::p1_infinity(c), Int(at_inf));
    return ZeroCycle(c, std::move(supp));
  }
  // elliptic: audit every rational place
  Int total = 0;
  for (const Place& p : elliptic_places(c)) {
    long long v = valuation(f, p);
    if (v != 0) {
      supp.emplace_back(p, Int(v));
      total += v;
    }
  }
  if (total != 0)
    throw SupportError("divisor not supported on rational points of the elliptic curve");
  return ZeroCycle(c, std::move(supp));
}

namespace {

// minimal polynomial data of the cover: M(Y) = A(Y) - t B(Y) as a bivariate
// polynomial (coefficients in F[t], ascending Y-degree), plus its Y-degree
// and leading coefficient
struct CoverData {
  std::vector<Poly> m;  // coefficients in t
  unsigned deg;         // [k(s) : k(t)] = max(deg A, deg B)
  Poly lead;            // a_n - t b_n
};

CoverData cover_data(const RationalFunction& phi, const Curve& target) {
  const FieldDesc& fd = target.field();
  const Poly& a = phi.num();
  const Poly& b = phi.den();
  if (phi.is_constant()) throw std::domain_error("cover must be nonconstant");
  unsigned n = static_cast<unsigned>(std::max(a.degree(), b.degree()));
  Poly tvar = Poly::x(fd, "t");
  CoverData cd;
  cd.deg = n;
  cd.m.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    Poly ai = Poly::constant(a.coeff(i), "t");
    Poly bi = Poly::constant(b.coeff(i), "t");
    cd.m.push_back(ai - tvar * bi);
  }
  cd.lead = cd.m[n];
  return cd;
}

// resultant of M(Y) against a constant-in-t polynomial h(Y)
Poly norm_of_poly(const CoverData& cd, const Poly& h, const FieldDesc& fd) {
  if (h.degree() <= 0) {
    FieldElem c = h.is_zero() ? FieldElem::zero(fd) : h[0];
    return Poly::constant(c, "t").pow(cd.deg);
  }
  std::vector<Poly> hb;
  for (int i = 0; i <= h.degree(); ++i)
    hb.push_back(Poly::constant(h.coeff(static_cast<std::size_t>(i)), "t"));
  return resultant_bipoly(cd.m, hb);
}

}  // namespace

RationalFunction norm_along_cover(const RationalFunction& phi, const RationalFunction& g,
                                  const Curve& target) {
  if (g.is_zero()) throw std::domain_error("norm of the zero function");
  const FieldDesc& fd = target.field();
  CoverData cd = cover_data(phi, target);
  // N(h) = Res_Y(M, h) / lead^{deg h}
  Poly rn = norm_of_poly(cd, g.num(), fd);
  Poly rd = norm_of_poly(cd, g.den(), fd);
  int dn = std::max(g.num().degree(), 0);
  int dd = std::max(g.den().degree(), 0);
  Poly num = rn, den = rd;
  if (dn > dd)
    den = den * cd.lead.pow(static_cast<unsigned>(dn - dd));
  else if (dd > dn)
    num = num * cd.lead.pow(static_cast<unsigned>(dd - dn));
  return RationalFunction::p1(target, num, den);
}

std::pair<Place, unsigned> image_place(const RationalFunction& phi, const Place& q,
                                       const Curve& target) {
  const FieldDesc& fd = target.field();
  const Poly& a = phi.num();
  const Poly& b = phi.den();
  if (q.at_infinity()) {
    int da = a.degree(), db = b.degree();
    if (da > db) return {Place::p1_infinity(target), 1};
    if (da < db) return {Place::p1_rational(target, FieldElem::zero(fd)), 1};
    FieldElem c = a.leading() / b.leading();
    return {Place::p1_rational(target, c), 1};
  }
  const Poly& pi = q.poly();
  // phi maps q to infinity iff pi divides the denominator
  if (!b.is_zero() && (b % pi).is_zero())
    return {Place::p1_infinity(target), q.degree()};
  CoverData cd = cover_data(phi, target);
  std::vector<Poly> pib;
  for (int i = 0; i <= pi.degree(); ++i)
    pib.push_back(Poly::constant(pi.coeff(static_cast<std::size_t>(i)), "t"));
  // Res_s(pi(s), A(s) - t B(s)) = c * (minimal polynomial of phi(root))^f
  Poly res = resultant_bipoly(pib, cd.m);
  Factorization fac = poly_factor(res);
  if (fac.factors.size() != 1)
    throw std::logic_error("image place: fiber polynomial is not a prime power");
  const Poly& below = fac.factors[0].first;
  unsigned fdeg = q.degree() / static_cast<unsigned>(below.degree());
  return {Place::p1_finite(target, below), fdeg};
}

Modulus modulus_pullback(const RationalFunction& phi, const Modulus& d, const Curve& source) {
  if (phi.is_constant()) throw std::domain_error("cover must be nonconstant");
  std::vector<std::pair<Place, unsigned>> comps;
  for (const auto& [p, n] : d.components()) {
    // places above p: zeros of the pulled-back uniformizer
    RationalFunction pulled = RationalFunction::zero(source);
    if (p.at_infinity()) {
      pulled = RationalFunction::p1(source, phi.den(), phi.num());
    } else {
      // pi(phi) with cleared denominators: sum c_i a^i b^(d-i) over b^d
      const Poly& pi = p.poly();
      Poly a = phi.num(), b = phi.den();
      a.set_var("s");
      b.set_var("s");
      unsigned d = static_cast<unsigned>(pi.degree());
      Poly num = Poly::zero(source.field(), "s");
      for (unsigned i = 0; i <= d; ++i)
        num = num + Poly::constant(pi.coeff(i), "s") * a.pow(i) * b.pow(d - i);
      pulled = RationalFunction::p1(source, num, b.pow(d));
    }
    // finite places above: factor the numerator of the pulled uniformizer
    if (pulled.num().degree() > 0) {
      Factorization fac = poly_factor(pulled.num());
      for (const auto& [qpoly, e] : fac.factors)
        comps.emplace_back(Place::p1_finite(source, qpoly), e * n);
    }
    long long vinf = static_cast<long long>(pulled.den().degree()) - pulled.num().degree();
    if (vinf > 0)
      comps.emplace_back(Place::p1_infinity(source), static_cast<unsigned>(vinf) * n);
  }
  return Modulus(source, std::move(comps));
}

ZeroCycle pushforward_cycle(const RationalFunction& phi, const ZeroCycle& z, const Curve& target) {
  std::vector<std::pair<Place, Int>> supp;
  for (const auto& [q, m] : z.support()) {
    auto [below, fdeg] = image_place(phi, q, target);
    supp.emplace_back(below, m * Int(fdeg));
  }
  return ZeroCycle(target, std::move(supp));
}

}  // namespace modpic
