#include "modpic/sampling.hpp"

#include <algorithm>

#include "modpic/errors.hpp"
#include "modpic/factor.hpp"
#include "modpic/localunits.hpp"
#include "modpic/picard.hpp"

namespace modpic {

namespace {

constexpr int kRetries = 256;

FieldElem random_elem(const FieldDesc& f, Rng& rng) {
  if (f.p == 0) {
    long long num = rng.range(-6, 6);
    long long den = rng.range(1, 4);
    return FieldElem::from_rat(Rat(num, den));
  }
  return FieldElem::from_code(f, rng.below(f.order()));
}

bool splits_into_rational_places(const RationalFunction& h) {
  auto linear_split = [](const Poly& poly) {
    if (poly.degree() <= 0) return true;
    unsigned total = 0;
    for (const auto& [r, m] : roots_with_multiplicity(poly)) total += m;
    return static_cast<int>(total) == poly.degree();
  };
  return linear_split(h.num()) && linear_split(h.den());
}

}  // namespace

std::string GSample::str() const {
  if (exponent == 1) return base.str();
  return "(" + base.str() + ")^" + exponent.str();
}

bool sample_in_g(const GSample& g, const Modulus& d) {
  if (g.base.is_zero()) throw std::domain_error("sample_in_g: zero function");
  for (const auto& [p, n] : d.components()) {
    if (valuation(g.base, p) != 0) return false;
    TruncSeries jet = local_expansion(g.base, p, n).pow(g.exponent);
    if (!p.residue_field().is_one(jet.coeff(0))) return false;
    for (std::size_t i = 1; i < n; ++i)
      if (!jet.coeff(i).is_zero()) return false;
  }
  return true;
}

ZeroCycle sample_divisor(const GSample& g) { return divisor_of(g.base) * g.exponent; }

Poly random_poly(const FieldDesc& f, unsigned max_degree, Rng& rng) {
  unsigned deg = static_cast<unsigned>(rng.below(max_degree + 1));
  std::vector<FieldElem> c;
  for (unsigned i = 0; i <= deg; ++i) c.push_back(random_elem(f, rng));
  return Poly(f, std::move(c));
}

Int modulus_unit_exponent(const Curve& c, const Modulus& d) {
  Int e = 1;
  const Int p = Int(c.field().p);
  for (const auto& [pl, n] : d.components()) {
    Int qp = Int(pl.residue_field().order());
    Int local = qp - 1;
    if (n > 1 && c.field().p != 0)
      local *= boost::multiprecision::pow(p, p_power_exponent(c.field().p, n));
    if (local == 0) local = 1;
    e = e / gcd_int(e, local) * local;
  }
  return e;
}

namespace {

RationalFunction sample_unit_p1(const Curve& c, const Modulus& d, Rng& rng) {
  const FieldDesc& f = c.field();
  bool inf_in_d = false;
  std::vector<Poly> forbidden;
  for (const auto& [p, n] : d.components()) {
    if (p.at_infinity())
      inf_in_d = true;
    else
      forbidden.push_back(p.poly());
  }
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Poly a = random_poly(f, 3, rng);
    Poly b = random_poly(f, 3, rng);
    if (a.is_zero() || b.is_zero()) continue;
    if (inf_in_d && a.degree() != b.degree()) continue;
    bool ok = true;
    for (const Poly& pi : forbidden)
      if ((a % pi).is_zero() || (b % pi).is_zero()) ok = false;
    if (!ok) continue;
    RationalFunction h = RationalFunction::p1(c, a, b);
    if (h.is_constant()) continue;
    if (inf_in_d && h.num().degree() != h.den().degree()) continue;
    if (f.p == 0 && !splits_into_rational_places(h)) continue;
    return h;
  }
  throw std::runtime_error("sample_unit_p1: no admissible function found");
}

RationalFunction sample_unit_elliptic(const Curve& c, const Modulus& d, Rng& rng) {
  std::vector<EPoint> frees;
  for (const EPoint& q : elliptic_points(c))
    if (!q.infinity && !d.contains(Place::elliptic(c, q))) frees.push_back(q);
  bool o_free = !d.contains(Place::elliptic(c, EPoint::at_infinity()));
  if (frees.size() < 2) throw BoundsError("not enough free rational points to sample");

  for (int attempt = 0; attempt < kRetries; ++attempt) {
    // random principal cycle on free points
    std::size_t k = 1 + rng.below(3);
    ZeroCycle cyc(c);
    EPoint sum = EPoint::at_infinity();
    Int total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const EPoint& q = frees[rng.below(frees.size())];
      Int m = Int(rng.range(1, 2));
      cyc = cyc + ZeroCycle(c, {{Place::elliptic(c, q), m}});
      sum = ep_add(c, sum, ep_mul(c, m, q));
      total += m;
    }
    const EPoint& b = frees[rng.below(frees.size())];
    EPoint rest = ep_add(c, sum, ep_neg(c, ep_mul(c, total - 1, b)));
    if (!rest.infinity) {
      if (d.contains(Place::elliptic(c, rest))) continue;
      cyc = cyc - ZeroCycle(c, {{Place::elliptic(c, rest), Int(1)}});
      cyc = cyc - ZeroCycle(c, {{Place::elliptic(c, b), total - 1}});
    } else {
      if (!o_free) continue;
      cyc = cyc - ZeroCycle(c, {{Place::elliptic(c, b), total - 1}});
      cyc = cyc - ZeroCycle(c, {{Place::elliptic(c, EPoint::at_infinity()), Int(1)}});
    }
    if (cyc.is_zero()) continue;
    RationalFunction h = elliptic_principal_function(c, cyc);
    if (h.is_constant()) continue;
    bool unit = true;
    for (const auto& [p, n] : d.components())
      if (valuation(h, p) != 0) unit = false;
    if (!unit) continue;
    return h;
  }
  throw std::runtime_error("sample_unit_elliptic: no admissible function found");
}

}  // namespace

RationalFunction sample_unit_along(const Curve& c, const Modulus& d, Rng& rng) {
  return c.kind() == CurveKind::P1 ? sample_unit_p1(c, d, rng) : sample_unit_elliptic(c, d, rng);
}

GSample sample_g_element(const Curve& c, const Modulus& d, Rng& rng) {
  const FieldDesc& f = c.field();
  if (c.kind() == CurveKind::P1) {
    // A = B + C * prod pi^n keeps all finite congruences; at infinity the
    // degree gap supplies the required vanishing of f - 1
    Poly m = Poly::constant(FieldElem::one(f), "t");
    unsigned n_inf = 0;
    std::vector<Poly> finite;
    for (const auto& [p, n] : d.components()) {
      if (p.at_infinity()) {
        n_inf = n;
        continue;
      }
      finite.push_back(p.poly());
      m = m * p.poly().pow(n);
    }
    for (int attempt = 0; attempt < kRetries; ++attempt) {
      unsigned slack = static_cast<unsigned>(rng.below(3));
      unsigned degb = static_cast<unsigned>(m.degree()) + n_inf + slack;
      Poly b = random_poly(f, degb, rng);
      if (b.is_zero()) continue;
      if (n_inf > 0 &&
          b.degree() < static_cast<int>(static_cast<unsigned>(m.degree()) + n_inf))
        continue;
      bool ok = true;
      for (const Poly& pi : finite)
        if ((b % pi).is_zero()) ok = false;
      if (!ok) continue;
      unsigned cmax =
          n_inf > 0 ? static_cast<unsigned>(b.degree() - m.degree()) - n_inf : 3;
      Poly cpoly = random_poly(f, cmax, rng);
      if (cpoly.is_zero()) continue;
      Poly a = b + cpoly * m;
      if (a.is_zero()) continue;
      RationalFunction g = RationalFunction::p1(c, a, b);
      if (g.is_one()) continue;
      if (f.p == 0 && !splits_into_rational_places(g)) continue;
      GSample s{g, 1};
      if (!sample_in_g(s, d))
        throw std::logic_error("sample_g_element: congruence construction failed");
      return s;
    }
    throw std::runtime_error("sample_g_element: no admissible function found");
  }
  // elliptic: any unit along |D| raised to the unit-group exponent
  Int e = modulus_unit_exponent(c, d);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    GSample s{sample_unit_along(c, d, rng), e};
    if (!sample_in_g(s, d))
      throw std::logic_error("sample_g_element: exponent construction failed");
    return s;
  }
  throw std::runtime_error("sample_g_element: no admissible function found");
}

GSample sample_g_red_element(const Curve& c, const Modulus& d, Rng& rng, int max_attempts) {
  if (d.is_reduced()) throw std::domain_error("sample_g_red_element: modulus already reduced");
  Modulus red = d.reduced();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    GSample g = sample_g_element(c, red, rng);
    if (!sample_in_g(g, red))
      throw std::logic_error("sample_g_red_element: congruence construction failed");
    if (!sample_in_g(g, d)) return g;
  }
  throw std::runtime_error("sample_g_red_element: every draw landed in G(C,D)");
}

ZeroCycle sample_cycle(const Curve& c, const Modulus& d, Rng& rng, unsigned terms) {
  const FieldDesc& f = c.field();
  std::vector<Place> pool;
  if (c.kind() == CurveKind::P1) {
    if (f.p == 0) {
      for (long long a = -5; a <= 5; ++a) {
        Place p = Place::p1_rational(c, FieldElem::from_int(f, Int(a)));
        if (!d.contains(p)) pool.push_back(p);
      }
      Place inf = Place::p1_infinity(c);
      if (!d.contains(inf)) pool.push_back(inf);
    } else {
      for (const Place& p : places_of_p1(c, 2).places)
        if (!d.contains(p)) pool.push_back(p);
    }
  } else {
    for (const Place& p : elliptic_places(c))
      if (!d.contains(p)) pool.push_back(p);
  }
  if (pool.empty()) throw BoundsError("no places available off |D|");
  ZeroCycle z(c);
  for (unsigned i = 0; i < terms; ++i) {
    const Place& p = pool[rng.below(pool.size())];
    Int m = Int(rng.range(-2, 2));
    if (m == 0) m = 1;
    z = z + ZeroCycle(c, {{p, m}});
  }
  return z;
}

RationalFunction sample_cover(const Curve& source, unsigned max_degree, Rng& rng) {
  const FieldDesc& f = source.field();
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    Poly a = random_poly(f, max_degree, rng);
    Poly b = random_poly(f, max_degree, rng);
    if (a.is_zero() || b.is_zero()) continue;
    RationalFunction phi = RationalFunction::p1(source, a, b);
    if (phi.is_constant()) continue;
    if (static_cast<unsigned>(std::max(phi.num().degree(), phi.den().degree())) > max_degree)
      continue;
    return phi;
  }
  throw std::runtime_error("sample_cover: no admissible cover found");
}

}  // namespace modpic
