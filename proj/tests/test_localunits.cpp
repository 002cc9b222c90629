#include "doctest.h"

#include "modpic/errors.hpp"
#include "modpic/localunits.hpp"
#include "modpic/rng.hpp"

using namespace modpic;

namespace {

ResidueField rf_fp(unsigned p) { return ResidueField::of_base(make_field(p, 1)); }

TruncSeries one_unit(const ResidueField& rf, std::vector<long long> tail_coeffs) {
  TruncSeries s = TruncSeries::one(rf, tail_coeffs.size() + 1);
  for (std::size_t i = 0; i < tail_coeffs.size(); ++i)
    s.set_coeff(i + 1, rf.from_base(FieldElem::from_int(rf.base(), Int(tail_coeffs[i]))));
  return s;
}

}  // namespace

TEST_CASE("local unit structures at rational places") {
  Curve c2 = Curve::p1(make_field(2, 1));
  Place p2 = Place::p1_rational(c2, FieldElem::zero(c2.field()));
  SUBCASE("F2 level 2 is Z/2") {
    auto s = local_unit_structure(p2, 2);
    CHECK(s.char_p);
    CHECK(s.group.invariant_factors == std::vector<Int>{2});
    CHECK(s.order == 2);
  }
  SUBCASE("F2 level 4 is Z/2 x Z/4: 1+u has order 4") {
    auto s = local_unit_structure(p2, 4);
    CHECK(s.group.invariant_factors == std::vector<Int>{2, 4});
    CHECK(s.order == 8);
    // (1+u)^2 = 1+u^2 by direct multiplication
    LocalUnitEngine eng(rf_fp(2), 4);
    std::size_t g = eng.from_series(one_unit(rf_fp(2), {1, 0, 0}));
    std::size_t g2 = eng.mul(g, g);
    CHECK(eng.to_series(g2) == one_unit(rf_fp(2), {0, 1, 0}));
    CHECK(eng.group().element_order(g) == 4);
  }
  SUBCASE("rational place over Q has dimension n-1") {
    Curve cq = Curve::p1(rational_field());
    Place pq = Place::p1_rational(cq, FieldElem::from_rat(Rat(0)));
    auto s = local_unit_structure(pq, 3);
    CHECK_FALSE(s.char_p);
    CHECK(s.dimension == 2);
  }
  SUBCASE("level 1 is trivial") {
    auto s = local_unit_structure(p2, 1);
    CHECK(s.group.is_trivial());
    CHECK(s.order == 1);
  }
  SUBCASE("size guardrail") {
    Curve c5 = Curve::p1(make_field(5, 1));
    Place p5 = Place::p1_rational(c5, FieldElem::zero(c5.field()));
    CHECK_THROWS_AS(local_unit_structure(p5, 11), BoundsError);  // 5^10 > 10^6
  }
}

TEST_CASE("higher-degree residue fields use the place polynomial") {
  Curve c = Curve::p1(make_field(2, 1));
  Place quad = Place::p1_finite(c, Poly::from_ints(c.field(), {1, 1, 1}));
  auto s = local_unit_structure(quad, 2);  // (1+m)/(1+m^2) over F4
  CHECK(s.order == 4);
  CHECK(s.group.invariant_factors == std::vector<Int>{2, 2});
}

TEST_CASE("truncated log and exp") {
  ResidueField rf;  // Q
  SUBCASE("log(1+u) = u - u^2/2 below u^3") {
    TruncSeries s = one_unit(rf, {1, 0});
    TruncSeries l = truncated_log(s);
    CHECK(l.coeff(0).is_zero());
    CHECK(rf.is_one(l.coeff(1)));
    CHECK(l.coeff(2) == rf.from_base(FieldElem::from_rat(Rat(-1, 2))));
  }
  SUBCASE("log 1 = 0") {
    TruncSeries s = TruncSeries::one(rf, 5);
    CHECK(truncated_log(s).is_zero());
  }
  SUBCASE("log is a homomorphism at precision 5") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
      TruncSeries a = TruncSeries::one(rf, 5), b = TruncSeries::one(rf, 5);
      for (std::size_t i = 1; i < 5; ++i) {
        a.set_coeff(i, rf.from_base(FieldElem::from_rat(Rat(rng.range(-4, 4), rng.range(1, 3)))));
        b.set_coeff(i, rf.from_base(FieldElem::from_rat(Rat(rng.range(-4, 4), rng.range(1, 3)))));
      }
      CHECK(truncated_log(a * b) == truncated_log(a) + truncated_log(b));
      CHECK(truncated_exp(truncated_log(a)) == a);
    }
  }
  SUBCASE("characteristic p rejected") {
    ResidueField rf2 = rf_fp(2);
    CHECK_THROWS_AS(truncated_log(TruncSeries::one(rf2, 3)), std::domain_error);
    CHECK_THROWS_AS(truncated_exp(TruncSeries(rf2, 3)), std::domain_error);
  }
}

TEST_CASE("p_power_exponent") {
  SUBCASE("p = 2, n = 3 needs m = 2") {
    CHECK(p_power_exponent(2, 3) == 2);
    // (1+u)^4 = 1 + u^4 = 1 below u^3, while (1+u)^2 = 1 + u^2 is not
    LocalUnitEngine eng(rf_fp(2), 3);
    std::size_t g = eng.from_series(one_unit(rf_fp(2), {1, 0}));
    CHECK(eng.power(g, 4) == eng.identity());
    CHECK(eng.power(g, 2) != eng.identity());
  }
  CHECK(p_power_exponent(5, 5) == 1);
  CHECK(p_power_exponent(2, 1) == 0);
  CHECK(p_power_exponent(7, 1) == 0);
  CHECK_THROWS_AS(p_power_exponent(0, 3), std::domain_error);
}

TEST_CASE("n-th roots in the quotient") {
  SUBCASE("char 0: sqrt(1+u) = 1 + u/2 - u^2/8") {
    ResidueField rf;
    TruncSeries s = one_unit(rf, {1, 0});
    TruncSeries r = nth_root_in_quotient(s, 2);
    CHECK(r.coeff(1) == rf.from_base(FieldElem::from_rat(Rat(1, 2))));
    CHECK(r.coeff(2) == rf.from_base(FieldElem::from_rat(Rat(-1, 8))));
    CHECK(r * r == s);
  }
  SUBCASE("n = 1 is the identity") {
    ResidueField rf;
    TruncSeries s = one_unit(rf, {3, 7});
    CHECK(nth_root_in_quotient(s, 1) == s);
  }
  SUBCASE("char 3, level 3: square roots by inverting 2 mod the exponent") {
    ResidueField rf = rf_fp(3);
    LocalUnitEngine eng(rf, 3);
    for (std::size_t code = 0; code < eng.size(); ++code) {
      TruncSeries s = eng.to_series(code);
      TruncSeries r = nth_root_in_quotient(s, 2);
      CHECK(eng.mul(eng.from_series(r), eng.from_series(r)) == code);
      // the exponent is 3, so the root is element^2
      CHECK(eng.from_series(r) == eng.power(code, 2));
    }
  }
  SUBCASE("p | n rejected in char p") {
    ResidueField rf = rf_fp(3);
    LocalUnitEngine eng(rf, 3);
    CHECK_THROWS_AS(nth_root_in_quotient(eng.to_series(1), 3), std::domain_error);
  }
}

TEST_CASE("every unit group in the sweep has p-power order elements") {
  // all (q, n) with q^(n-1) <= 10^4
  for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2},
                      {5, 2}, {2, 3}, {2, 4}}) {
    FieldDesc f = make_field(p, k);
    ResidueField rf = ResidueField::of_base(f);
    double q = static_cast<double>(f.order());
    for (unsigned n = 2; n <= 14; ++n) {
      double size = 1;
      for (unsigned i = 1; i < n; ++i) size *= q;
      if (size > 10000) break;
      LocalUnitEngine eng(rf, n);
      const FinAbGroup& g = eng.group().structure();
      Int order = g.order();
      CHECK(order == Int(eng.size()));
      for (const Int& d : g.invariant_factors) {
        Int m = d;
        while (m % p == 0) m /= p;
        CHECK(m == 1);
      }
      // Frobenius-power bound: s^(p^m) = 1 for every element
      unsigned m = p_power_exponent(p, n);
      Int pm = boost::multiprecision::pow(Int(p), m);
      Rng rng(n * 1000 + p);
      for (int trial = 0; trial < 10; ++trial) {
        std::size_t s = rng.below(eng.size());
        CHECK(eng.power(s, pm) == eng.identity());
      }
    }
  }
}

TEST_CASE("graded pieces are additive kappa(P)-lines") {
  // (1+m^i)/(1+m^(i+1)) maps to (kappa, +) by the coefficient of u^i
  for (unsigned p : {2u, 3u, 5u}) {
    ResidueField rf = rf_fp(p);
    unsigned n = 4;
    LocalUnitEngine eng(rf, n + 1);
    Rng rng(p);
    for (unsigned i = 1; i <= n; ++i) {
      for (int trial = 0; trial < 20; ++trial) {
        // two elements of 1 + m^i: the u^i coefficients add under product
        TruncSeries a = TruncSeries::one(rf, n + 1), b = TruncSeries::one(rf, n + 1);
        a.set_coeff(i, rf.from_code(rng.below(rf.order())));
        b.set_coeff(i, rf.from_code(rng.below(rf.order())));
        if (i + 1 < n + 1) {
          a.set_coeff(i + 1, rf.from_code(rng.below(rf.order())));
        }
        TruncSeries prod = a * b;
        CHECK(prod.coeff(i) == rf.add(a.coeff(i), b.coeff(i)));
      }
    }
  }
}

TEST_CASE("prime-to-p powers are automorphisms of the quotient") {
  for (unsigned p : {2u, 3u, 5u}) {
    ResidueField rf = rf_fp(p);
    LocalUnitEngine eng(rf, 4);
    for (unsigned n = 2; n <= 12; ++n) {
      if (n % p == 0) continue;
      // injectivity via the explicit root: root(x^n) = x
      Rng rng(n + 17 * p);
      for (int trial = 0; trial < 12; ++trial) {
        std::size_t x = rng.below(eng.size());
        std::size_t xn = eng.power(x, n);
        TruncSeries r = nth_root_in_quotient(eng.to_series(xn), n);
        CHECK(eng.from_series(r) == x);
      }
    }
  }
}
