#include "doctest.h"

#include "modpic/errors.hpp"
#include "modpic/modulus.hpp"
#include "modpic/rng.hpp"
#include "modpic/sampling.hpp"

using namespace modpic;

TEST_CASE("in_modulus_group on the worked examples") {
  Curve c = Curve::p1(make_field(5, 1));
  const FieldDesc& f = c.field();
  Place at0 = Place::p1_rational(c, FieldElem::zero(f));
  SUBCASE("f = 1 passes any modulus") {
    Modulus d(c, {{at0, 3}, {Place::p1_infinity(c), 2}});
    CHECK(in_modulus_group(RationalFunction::one(c), d));
  }
  SUBCASE("f = 1 + t^3 against 2[(t)] and 4[(t)]") {
    RationalFunction g =
        RationalFunction::p1(c, Poly::from_ints(f, {1, 0, 0, 1}), Poly::from_ints(f, {1}));
    CHECK(in_modulus_group(g, Modulus(c, {{at0, 2}})));
    CHECK_FALSE(in_modulus_group(g, Modulus(c, {{at0, 4}})));
  }
  SUBCASE("(t-1)/(t-2) fails at [(t)] + [inf]") {
    RationalFunction g =
        RationalFunction::p1(c, Poly::from_ints(f, {-1, 1}), Poly::from_ints(f, {-2, 1}));
    Modulus d(c, {{at0, 1}, {Place::p1_infinity(c), 1}});
    CHECK_FALSE(in_modulus_group(g, d));
    // the residue at t = 0 is (-1)/(-2) = 3, not 1
    CHECK(residue_value(g, at0) == Poly::from_ints(f, {3}));
  }
  SUBCASE("empty modulus accepts every nonzero function") {
    Modulus d(c);
    RationalFunction g =
        RationalFunction::p1(c, Poly::from_ints(f, {2, 0, 1}), Poly::from_ints(f, {4, 1}));
    CHECK(in_modulus_group(g, d));
  }
}

TEST_CASE("divisor_of on the worked examples") {
  SUBCASE("div(t) on P1") {
    Curve c = Curve::p1(make_field(3, 1));
    ZeroCycle d = divisor_of(RationalFunction::coordinate(c));
    REQUIRE(d.support().size() == 2);
    CHECK(d.coefficient(Place::p1_rational(c, FieldElem::zero(c.field()))) == 1);
    CHECK(d.coefficient(Place::p1_infinity(c)) == -1);
  }
  SUBCASE("(t^2+t+1)/t^2 over F2 balances degrees") {
    Curve c = Curve::p1(make_field(2, 1));
    const FieldDesc& f = c.field();
    RationalFunction g = RationalFunction::p1(c, Poly::from_ints(f, {1, 1, 1}),
                                              Poly::from_ints(f, {0, 0, 1}));
    ZeroCycle d = divisor_of(g);
    CHECK(d.coefficient(Place::p1_finite(c, Poly::from_ints(f, {1, 1, 1}))) == 1);
    CHECK(d.coefficient(Place::p1_rational(c, FieldElem::zero(f))) == -2);
    CHECK(d.degree() == 0);
    CHECK(d.coefficient(Place::p1_infinity(c)) == 0);
  }
  SUBCASE("div(x) on y^2 = x^3 + x over F5") {
    FieldDesc f = make_field(5, 1);
    Curve e = Curve::elliptic(f, FieldElem::one(f), FieldElem::zero(f));
    ZeroCycle d = divisor_of(RationalFunction::coordinate(e));
    CHECK(d.coefficient(Place::elliptic(
              e, EPoint::affine(FieldElem::zero(f), FieldElem::zero(f)))) == 2);
    CHECK(d.coefficient(Place::elliptic(e, EPoint::at_infinity())) == -2);
    CHECK(d.support().size() == 2);
  }
  SUBCASE("divisors outside the rational-point model are rejected") {
    FieldDesc f = make_field(5, 1);
    Curve e = Curve::elliptic(f, FieldElem::one(f), FieldElem::zero(f));
    // 1 + y vanishes where x^3 + x = 1, which has no rational roots over F5
    RationalFunction g = RationalFunction::one(e) + RationalFunction::coordinate_y(e);
    CHECK_THROWS_AS(divisor_of(g), SupportError);
  }
}

TEST_CASE("norm along a cover") {
  Curve target = Curve::p1(make_field(5, 1));
  Curve source = Curve::p1(make_field(5, 1));
  const FieldDesc& f = target.field();
  RationalFunction phi =
      RationalFunction::p1(source, Poly::from_ints(f, {0, 0, 1}), Poly::from_ints(f, {1}));
  SUBCASE("resultant of s^2 - t against s - 1 is 1 - t") {
    RationalFunction g =
        RationalFunction::p1(source, Poly::from_ints(f, {-1, 1}), Poly::from_ints(f, {1}));
    RationalFunction n = norm_along_cover(phi, g, target);
    CHECK(n == RationalFunction::p1(target, Poly::from_ints(f, {1, -1}),
                                    Poly::from_ints(f, {1})));
  }
  SUBCASE("constants: norm is c^d") {
    RationalFunction c2 = RationalFunction::constant(source, FieldElem::from_int(f, 2));
    RationalFunction n = norm_along_cover(phi, c2, target);
    CHECK(n == RationalFunction::constant(target, FieldElem::from_int(f, 4)));
  }
  SUBCASE("the identity cover is the identity") {
    RationalFunction id = RationalFunction::coordinate(source);
    Rng rng(5);
    RationalFunction g = sample_unit_along(source, Modulus(source), rng);
    RationalFunction n = norm_along_cover(id, g, target);
    CHECK(n.num() == g.num());
    CHECK(n.den() == g.den());
  }
}

TEST_CASE("modulus pullback") {
  Curve target = Curve::p1(make_field(5, 1));
  Curve source = Curve::p1(make_field(5, 1));
  const FieldDesc& f = target.field();
  RationalFunction phi =
      RationalFunction::p1(source, Poly::from_ints(f, {0, 0, 1}), Poly::from_ints(f, {1}));
  Place t0 = Place::p1_rational(target, FieldElem::zero(f));
  SUBCASE("phi = s^2 ramifies at 0") {
    Modulus d(target, {{t0, 1}});
    Modulus pulled = modulus_pullback(phi, d, source);
    REQUIRE(pulled.components().size() == 1);
    CHECK(pulled.components()[0].first.poly() == Poly::from_ints(f, {0, 1}));
    CHECK(pulled.components()[0].second == 2);
  }
  SUBCASE("the identity cover leaves D unchanged") {
    RationalFunction id = RationalFunction::coordinate(source);
    Modulus d(target, {{t0, 3}, {Place::p1_infinity(target), 2}});
    Modulus pulled = modulus_pullback(id, d, source);
    CHECK(pulled.degree() == d.degree());
    CHECK(pulled.components().size() == 2);
    CHECK(pulled.multiplicity(Place::p1_infinity(source)) == 2);
  }
  SUBCASE("phi = s^2 ramifies at infinity") {
    Modulus d(target, {{Place::p1_infinity(target), 1}});
    Modulus pulled = modulus_pullback(phi, d, source);
    REQUIRE(pulled.components().size() == 1);
    CHECK(pulled.components()[0].first.at_infinity());
    CHECK(pulled.components()[0].second == 2);
  }
}

TEST_CASE("G(C,D) is closed under products and inverses") {
  Rng rng(31337);
  for (unsigned p : {2u, 3u, 5u}) {
    Curve c = Curve::p1(make_field(p, 1));
    const FieldDesc& f = c.field();
    Modulus d(c, {{Place::p1_rational(c, FieldElem::zero(f)), 2},
                  {Place::p1_rational(c, FieldElem::one(f)), 1}});
    for (int trial = 0; trial < 25; ++trial) {
      GSample a = sample_g_element(c, d, rng);
      GSample b = sample_g_element(c, d, rng);
      CHECK(in_modulus_group(a.base * b.base, d));
      CHECK(in_modulus_group(a.base.inverse(), d));
    }
  }
}

TEST_CASE("monotonicity: shrinking D only enlarges G") {
  Rng rng(2718);
  Curve c = Curve::p1(make_field(3, 1));
  const FieldDesc& f = c.field();
  Place a = Place::p1_rational(c, FieldElem::zero(f));
  Place b = Place::p1_infinity(c);
  Modulus big(c, {{a, 3}, {b, 2}});
  Modulus small1(c, {{a, 1}, {b, 2}});
  Modulus small2(c, {{a, 3}});
  for (int trial = 0; trial < 40; ++trial) {
    GSample g = sample_g_element(c, big, rng);
    CHECK(in_modulus_group(g.base, small1));
    CHECK(in_modulus_group(g.base, small2));
  }
}

TEST_CASE("divisors are additive and always of degree 0") {
  Rng rng(112);
  Curve c = Curve::p1(make_field(5, 1));
  Modulus empty(c);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction a = sample_unit_along(c, empty, rng);
    RationalFunction b = sample_unit_along(c, empty, rng);
    CHECK(divisor_of(a * b) == divisor_of(a) + divisor_of(b));
    CHECK(divisor_of(a).degree() == 0);
  }
}

TEST_CASE("norm compatibility over random covers") {
  // cover relations reduce to principal relations on the base: for g
  // congruent to 1 along phi^* D, the norm is congruent to 1 along D and
  // pushes the divisor forward
  Rng rng(6174);
  for (unsigned p : {2u, 3u, 5u}) {
    Curve target = Curve::p1(make_field(p, 1));
    Curve source = Curve::p1(make_field(p, 1));
    const FieldDesc& f = target.field();
    for (int trial = 0; trial < 12; ++trial) {
      RationalFunction phi = sample_cover(source, 1 + rng.below(3), rng);
      Modulus d(target, {{Place::p1_rational(target, FieldElem::zero(f)), 1 + unsigned(rng.below(2))},
                         {Place::p1_infinity(target), 1 + unsigned(rng.below(2))}});
      Modulus pulled = modulus_pullback(phi, d, source);
      GSample g = sample_g_element(source, pulled, rng);
      RationalFunction n = norm_along_cover(phi, g.base, target);
      CHECK(in_modulus_group(n, d));
      CHECK(pushforward_cycle(phi, divisor_of(g.base), target) == divisor_of(n));
    }
  }
}

TEST_CASE("modulus invariants") {
  Curve c = Curve::p1(make_field(2, 1));
  const FieldDesc& f = c.field();
  Place a = Place::p1_rational(c, FieldElem::zero(f));
  SUBCASE("duplicate places rejected") {
    CHECK_THROWS_AS(Modulus(c, {{a, 1}, {a, 2}}), ParseError);
  }
  SUBCASE("zero multiplicities rejected") {
    CHECK_THROWS_AS(Modulus(c, {{a, 0}}), ParseError);
  }
  SUBCASE("degree counts residue degrees") {
    Place quad = Place::p1_finite(c, Poly::from_ints(f, {1, 1, 1}));
    Modulus d(c, {{a, 3}, {quad, 2}});
    CHECK(d.degree() == 7);
    CHECK(d.reduced().degree() == 3);
    CHECK_FALSE(d.is_reduced());
    CHECK(d.reduced().is_reduced());
  }
}
