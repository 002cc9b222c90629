#include "doctest.h"

#include "modpic/errors.hpp"
#include "modpic/modulus.hpp"
#include "modpic/rng.hpp"
#include "modpic/sampling.hpp"

using namespace modpic;

TEST_CASE("places_of_p1 enumerations") {
  SUBCASE("F2 up to degree 2") {
    Curve c = Curve::p1(make_field(2, 1));
    auto e = places_of_p1(c, 2);
    REQUIRE(e.places.size() == 4);
    CHECK(e.places[0].poly() == Poly::from_ints(c.field(), {0, 1}));        // t
    CHECK(e.places[1].poly() == Poly::from_ints(c.field(), {1, 1}));        // t+1
    CHECK(e.places[2].poly() == Poly::from_ints(c.field(), {1, 1, 1}));     // t^2+t+1
    CHECK(e.places[3].at_infinity());
    CHECK(e.places[2].degree() == 2);
  }
  SUBCASE("F3 rational places") {
    Curve c = Curve::p1(make_field(3, 1));
    auto e = places_of_p1(c, 1);
    REQUIRE(e.places.size() == 4);  // t, t+1, t+2, inf
    for (std::size_t i = 0; i < 3; ++i) CHECK(e.places[i].degree() == 1);
  }
  SUBCASE("over Q the rational family stays lazy") {
    Curve c = Curve::p1(rational_field());
    auto e = places_of_p1(c, 1);
    CHECK(e.lazy_rational_family);
    REQUIRE(e.places.size() == 1);
    CHECK(e.places[0].at_infinity());
    Place p = Place::p1_rational(c, FieldElem::from_rat(Rat(7, 2)));
    CHECK(p.degree() == 1);
    CHECK_THROWS_AS(places_of_p1(c, 2), BoundsError);
  }
}

TEST_CASE("valuations on P1") {
  Curve c = Curve::p1(make_field(3, 1));
  const FieldDesc& f = c.field();
  // f = t^2/(t+1)
  RationalFunction g =
      RationalFunction::p1(c, Poly::from_ints(f, {0, 0, 1}), Poly::from_ints(f, {1, 1}));
  CHECK(valuation(g, Place::p1_rational(c, FieldElem::zero(f))) == 2);
  CHECK(valuation(g, Place::p1_infinity(c)) == -1);
  CHECK(valuation(g, Place::p1_rational(c, FieldElem::from_int(f, -1))) == -1);
  CHECK_THROWS_AS(valuation(RationalFunction::zero(c), Place::p1_infinity(c)),
                  std::domain_error);
}

TEST_CASE("local expansions on P1") {
  SUBCASE("geometric series") {
    Curve c = Curve::p1(make_field(5, 1));
    const FieldDesc& f = c.field();
    RationalFunction g =
        RationalFunction::p1(c, Poly::from_ints(f, {1}), Poly::from_ints(f, {1, -1}));
    TruncSeries s = local_expansion(g, Place::p1_rational(c, FieldElem::zero(f)), 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(s.rf().is_one(s.coeff(i)));
  }
  SUBCASE("(t+1)^2 = 1 + t^2 over F2") {
    Curve c = Curve::p1(make_field(2, 1));
    const FieldDesc& f = c.field();
    RationalFunction g = RationalFunction::p1(c, Poly::from_ints(f, {1, 1}).pow(2),
                                              Poly::from_ints(f, {1}));
    TruncSeries s = local_expansion(g, Place::p1_rational(c, FieldElem::zero(f)), 2);
    CHECK(s.rf().is_one(s.coeff(0)));
    CHECK(s.coeff(1).is_zero());
  }
  SUBCASE("residue class in F4") {
    Curve c = Curve::p1(make_field(2, 1));
    const FieldDesc& f = c.field();
    Place p = Place::p1_finite(c, Poly::from_ints(f, {1, 1, 1}));
    RationalFunction g =
        RationalFunction::p1(c, Poly::from_ints(f, {1, 1}), Poly::from_ints(f, {1}));
    TruncSeries s = local_expansion(g, p, 1);
    CHECK(s.coeff(0) == Poly::from_ints(f, {1, 1}));  // the class of 1 + t
  }
  SUBCASE("pole rejected") {
    Curve c = Curve::p1(make_field(5, 1));
    RationalFunction g = RationalFunction::coordinate(c).inverse();
    CHECK_THROWS_AS(local_expansion(g, Place::p1_rational(c, FieldElem::zero(c.field())), 2),
                    std::domain_error);
  }
}

TEST_CASE("expansion at infinity uses 1/t") {
  Curve c = Curve::p1(make_field(5, 1));
  RationalFunction t = RationalFunction::coordinate(c);
  // 1/t has valuation 1 at infinity and expansion u
  TruncSeries s = local_expansion(t.inverse(), Place::p1_infinity(c), 3);
  CHECK(s.coeff(0).is_zero());
  CHECK(s.rf().is_one(s.coeff(1)));
  CHECK(s.coeff(2).is_zero());
}

TEST_CASE("elliptic point enumeration and group law") {
  FieldDesc f = make_field(5, 1);
  SUBCASE("y^2 = x^3 + x has exactly {O,(0,0),(2,0),(3,0)}") {
    Curve e = Curve::elliptic(f, FieldElem::one(f), FieldElem::zero(f));
    auto pts = elliptic_points(e);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].infinity);
    CHECK(pts[1] == EPoint::affine(FieldElem::zero(f), FieldElem::zero(f)));
    CHECK(pts[2] == EPoint::affine(FieldElem::from_int(f, 2), FieldElem::zero(f)));
    CHECK(pts[3] == EPoint::affine(FieldElem::from_int(f, 3), FieldElem::zero(f)));
  }
  SUBCASE("y^2 = x^3 + 1 has order 6") {
    Curve e = Curve::elliptic(f, FieldElem::zero(f), FieldElem::one(f));
    CHECK(elliptic_points(e).size() == 6);
  }
  SUBCASE("O is the identity and the law is a group") {
    Curve e = Curve::elliptic(f, FieldElem::zero(f), FieldElem::one(f));
    auto pts = elliptic_points(e);
    for (const EPoint& p : pts) {
      CHECK(ep_add(e, p, EPoint::at_infinity()) == p);
      CHECK(ep_add(e, p, ep_neg(e, p)).infinity);
      for (const EPoint& q : pts) {
        EPoint s = ep_add(e, p, q);
        CHECK(on_curve(e, s));
        CHECK(s == ep_add(e, q, p));
      }
    }
  }
  SUBCASE("singular coefficients rejected") {
    CHECK_THROWS_AS(Curve::elliptic(f, FieldElem::zero(f), FieldElem::zero(f)), ParseError);
  }
}

TEST_CASE("elliptic valuations via local expansion") {
  FieldDesc f = make_field(5, 1);
  Curve e = Curve::elliptic(f, FieldElem::one(f), FieldElem::zero(f));
  RationalFunction x = RationalFunction::coordinate(e);
  RationalFunction y = RationalFunction::coordinate_y(e);
  Place origin = Place::elliptic(e, EPoint::affine(FieldElem::zero(f), FieldElem::zero(f)));
  Place o = Place::elliptic(e, EPoint::at_infinity());
  // y uniformizes the 2-torsion point; x = y^2/(x^2+1) there
  CHECK(valuation(y, origin) == 1);
  CHECK(valuation(x, origin) == 2);
  CHECK(valuation(x, o) == -2);
  CHECK(valuation(y, o) == -3);
  CHECK(valuation(x / y, o) == 1);
}

TEST_CASE("line functions satisfy the divisor identity on small curves") {
  FieldDesc f5 = make_field(5, 1);
  FieldDesc f7 = make_field(7, 1);
  std::vector<Curve> curves = {
      Curve::elliptic(f5, FieldElem::one(f5), FieldElem::zero(f5)),
      Curve::elliptic(f5, FieldElem::zero(f5), FieldElem::one(f5)),
      Curve::elliptic(f7, FieldElem::from_int(f7, 2), FieldElem::from_int(f7, 3)),
  };
  for (const Curve& e : curves) {
    auto pts = elliptic_points(e);
    REQUIRE(pts.size() <= 30);
    for (const EPoint& p : pts) {
      for (const EPoint& q : pts) {
        RationalFunction line = line_function(e, p, q);
        ZeroCycle expected(e);
        EPoint s = ep_add(e, p, q);
        expected = expected + ZeroCycle(e, {{Place::elliptic(e, p), 1}});
        expected = expected + ZeroCycle(e, {{Place::elliptic(e, q), 1}});
        expected = expected + ZeroCycle(e, {{Place::elliptic(e, ep_neg(e, s)), 1}});
        expected =
            expected - ZeroCycle(e, {{Place::elliptic(e, EPoint::at_infinity()), 3}});
        if (line.is_one())
          CHECK(expected.is_zero());
        else
          CHECK(divisor_of(line) == expected);
      }
    }
  }
}

TEST_CASE("degree formula: divisors have degree 0") {
  Rng rng(4242);
  SUBCASE("P1 over small finite fields") {
    for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
      Curve c = Curve::p1(make_field(p, k));
      Modulus empty(c);
      for (int trial = 0; trial < 40; ++trial) {
        RationalFunction g = sample_unit_along(c, empty, rng);
        CHECK(divisor_of(g).degree() == 0);
      }
    }
  }
  SUBCASE("elliptic by full valuation audit") {
    FieldDesc f = make_field(5, 1);
    Curve e = Curve::elliptic(f, FieldElem::zero(f), FieldElem::one(f));
    Modulus empty(e);
    for (int trial = 0; trial < 15; ++trial) {
      RationalFunction g = sample_unit_along(e, empty, rng);
      Int total = 0;
      for (const Place& p : elliptic_places(e)) total += Int(valuation(g, p));
      CHECK(total == 0);
    }
  }
}

TEST_CASE("expansions are multiplicative and valuations additive") {
  Rng rng(777);
  Curve c = Curve::p1(make_field(3, 1));
  const FieldDesc& f = c.field();
  Place at0 = Place::p1_rational(c, FieldElem::zero(f));
  Modulus guard(c, {{at0, 1}});  // keep samples pole-free at t = 0
  for (int trial = 0; trial < 60; ++trial) {
    RationalFunction a = sample_unit_along(c, guard, rng);
    RationalFunction b = sample_unit_along(c, guard, rng);
    CHECK(valuation(a * b, at0) == valuation(a, at0) + valuation(b, at0));
    TruncSeries sa = local_expansion(a, at0, 4);
    TruncSeries sb = local_expansion(b, at0, 4);
    CHECK(local_expansion(a * b, at0, 4) == sa * sb);
  }
  // elliptic spot check
  FieldDesc f5 = make_field(5, 1);
  Curve e = Curve::elliptic(f5, FieldElem::one(f5), FieldElem::zero(f5));
  Place o = Place::elliptic(e, EPoint::at_infinity());
  Modulus guard_e(e, {{o, 1}});
  for (int trial = 0; trial < 10; ++trial) {
    RationalFunction a = sample_unit_along(e, guard_e, rng);
    RationalFunction b = sample_unit_along(e, guard_e, rng);
    CHECK(valuation(a * b, o) == valuation(a, o) + valuation(b, o));
    CHECK(local_expansion(a * b, o, 3) == local_expansion(a, o, 3) * local_expansion(b, o, 3));
  }
}

TEST_CASE("uniformizers have valuation exactly 1") {
  Curve c = Curve::p1(make_field(2, 1));
  for (const Place& p : places_of_p1(c, 2).places) CHECK(valuation(uniformizer(p), p) == 1);
  FieldDesc f = make_field(5, 1);
  Curve e = Curve::elliptic(f, FieldElem::one(f), FieldElem::zero(f));
  for (const Place& p : elliptic_places(e)) CHECK(valuation(uniformizer(p), p) == 1);
}
