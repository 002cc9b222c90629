#include "doctest.h"

#include "modpic/abelian.hpp"
#include "modpic/errors.hpp"
#include "modpic/factor.hpp"
#include "modpic/intmatrix.hpp"
#include "modpic/rng.hpp"

using namespace modpic;

namespace {

Poly random_poly_deg(const FieldDesc& f, unsigned deg, Rng& rng) {
  std::vector<FieldElem> c;
  for (unsigned i = 0; i <= deg; ++i) c.push_back(FieldElem::from_code(f, rng.below(f.order())));
  return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("field axioms on random samples") {
  Rng rng(101);
  for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2},
                      {5, 2}, {2, 4}, {5, 4}}) {
    FieldDesc f = make_field(p, k);
    for (int trial = 0; trial < 50; ++trial) {
      FieldElem a = FieldElem::from_code(f, rng.below(f.order()));
      FieldElem b = FieldElem::from_code(f, rng.below(f.order()));
      FieldElem c = FieldElem::from_code(f, rng.below(f.order()));
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a.inverse() * a).is_one());
    }
  }
  // rationals
  for (int trial = 0; trial < 50; ++trial) {
    FieldElem a = FieldElem::from_rat(Rat(rng.range(-9, 9), rng.range(1, 7)));
    FieldElem b = FieldElem::from_rat(Rat(rng.range(-9, 9), rng.range(1, 7)));
    FieldElem c = FieldElem::from_rat(Rat(rng.range(-9, 9), rng.range(1, 7)));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a.inverse() * a).is_one());
  }
}

TEST_CASE("shipped defining polynomials are irreducible") {
  for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                      {3, 4}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3}, {7, 4}}) {
    FieldDesc base = make_field(p, 1);
    const auto& coeffs = defining_poly(p, k);
    std::vector<FieldElem> c;
    for (std::uint32_t v : coeffs) c.push_back(FieldElem::from_int(base, Int(v)));
    Poly m(base, std::move(c));
    REQUIRE(m.degree() == static_cast<int>(k));
    CHECK(is_irreducible(m));
  }
}

TEST_CASE("poly_factor on the worked examples") {
  SUBCASE("t^2 + t over F2 splits into distinct linear roots") {
    FieldDesc f = make_field(2, 1);
    Factorization fac = poly_factor(Poly::from_ints(f, {0, 1, 1}));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == Poly::from_ints(f, {0, 1}));
    CHECK(fac.factors[0].second == 1);
    CHECK(fac.factors[1].first == Poly::from_ints(f, {1, 1}));
    CHECK(fac.factors[1].second == 1);
  }
  SUBCASE("t^2 + 1 is irreducible over F3: -1 is a non-square") {
    FieldDesc f = make_field(3, 1);
    // exhaustion: squares mod 3 are {0, 1}
    bool minus_one_square = false;
    for (int a = 0; a < 3; ++a)
      if ((a * a) % 3 == 2) minus_one_square = true;
    REQUIRE_FALSE(minus_one_square);
    Factorization fac = poly_factor(Poly::from_ints(f, {1, 0, 1}));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == Poly::from_ints(f, {1, 0, 1}));
    CHECK(fac.factors[0].second == 1);
  }
  SUBCASE("(t+1)^3 over F5") {
    FieldDesc f = make_field(5, 1);
    Poly cube = Poly::from_ints(f, {1, 1}).pow(3);
    Factorization fac = poly_factor(cube);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == Poly::from_ints(f, {1, 1}));
    CHECK(fac.factors[0].second == 3);
  }
  SUBCASE("zero polynomial rejected") {
    CHECK_THROWS_AS(poly_factor(Poly::zero(make_field(2, 1))), std::domain_error);
  }
}

TEST_CASE("poly_factor round-trip on random polynomials") {
  Rng rng(2024);
  for (unsigned p : {2u, 3u, 5u}) {
    FieldDesc f = make_field(p, 1);
    for (int trial = 0; trial < 350; ++trial) {
      Poly g = random_poly_deg(f, 1 + static_cast<unsigned>(rng.below(8)), rng);
      if (g.is_zero()) continue;
      Factorization fac = poly_factor(g);
      Poly prod = Poly::constant(fac.unit, "t");
      for (const auto& [q, m] : fac.factors) {
        CHECK(q.leading().is_one());
        CHECK(is_irreducible(q));
        prod = prod * q.pow(m);
      }
      CHECK(prod == g);
      // canonical order
      for (std::size_t i = 0; i + 1 < fac.factors.size(); ++i)
        CHECK(fac.factors[i].first.cmp(fac.factors[i + 1].first) < 0);
    }
  }
}

TEST_CASE("factorization over extension fields") {
  FieldDesc f4 = make_field(2, 2);
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Poly g = random_poly_deg(f4, 1 + static_cast<unsigned>(rng.below(5)), rng);
    if (g.is_zero()) continue;
    Factorization fac = poly_factor(g);
    Poly prod = Poly::constant(fac.unit, "t");
    for (const auto& [q, m] : fac.factors) prod = prod * q.pow(m);
    CHECK(prod == g);
  }
}

TEST_CASE("smith normal form") {
  SUBCASE("diag(2,3) has invariant chain diag(1,6)") {
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    SnfResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.u * m * s.v == s.d);
  }
  SUBCASE("identity stays the identity") {
    IntMatrix m = IntMatrix::identity(3);
    SnfResult s = smith_normal_form(m);
    CHECK(s.d == IntMatrix::identity(3));
  }
  SUBCASE("zero map") {
    IntMatrix m(1, 1);
    SnfResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 0);
  }
  SUBCASE("postconditions on random matrices") {
    Rng rng(99);
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
      IntMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.range(-9, 9);
      SnfResult s = smith_normal_form(m);
      CHECK(s.u * m * s.v == s.d);
      CHECK(abs_int(s.u.det()) == 1);
      CHECK(abs_int(s.v.det()) == 1);
      CHECK(s.v * s.vinv == IntMatrix::identity(c));
      std::size_t n = std::min(r, c);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const Int& a = s.d.at(i, i);
        const Int& b = s.d.at(i + 1, i + 1);
        CHECK(a >= 0);
        if (a != 0) CHECK(b % a == 0);
        if (a == 0) CHECK(b == 0);
      }
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (i != j) CHECK(s.d.at(i, j) == 0);
    }
  }
}

TEST_CASE("group_from_relations") {
  SUBCASE("one generator killed by 5") {
    auto g = group_from_relations(1, IntMatrix::from_rows({{5}}));
    CHECK(g.free_rank == 0);
    CHECK(g.finite.invariant_factors == std::vector<Int>{5});
  }
  SUBCASE("free rank survives") {
    auto g = group_from_relations(2, IntMatrix::from_rows({{2, 0}}));
    CHECK(g.free_rank == 1);
    CHECK(g.finite.invariant_factors == std::vector<Int>{2});
  }
  SUBCASE("2x2 relation lattice") {
    auto g = group_from_relations(2, IntMatrix::from_rows({{2, 2}, {0, 4}}));
    CHECK(g.free_rank == 0);
    CHECK(g.finite.invariant_factors == std::vector<Int>{2, 4});
  }
}

TEST_CASE("structure_of_finite_group") {
  SUBCASE("cyclic of order 4") {
    EnumeratedGroup g(4, [](std::size_t a, std::size_t b) { return (a + b) % 4; }, 0);
    CHECK(g.structure().invariant_factors == std::vector<Int>{4});
  }
  SUBCASE("Klein four-group") {
    EnumeratedGroup g(4, [](std::size_t a, std::size_t b) { return a ^ b; }, 0);
    CHECK(g.structure().invariant_factors == std::vector<Int>{2, 2});
  }
  SUBCASE("units of Z/15") {
    std::vector<std::size_t> units;
    for (std::size_t a = 1; a < 15; ++a)
      if (std::gcd(a, std::size_t{15}) == 1) units.push_back(a);
    REQUIRE(units.size() == 8);
    std::vector<std::size_t> index_of(15, 99);
    for (std::size_t i = 0; i < units.size(); ++i) index_of[units[i]] = i;
    EnumeratedGroup g(
        8, [&](std::size_t a, std::size_t b) { return index_of[(units[a] * units[b]) % 15]; },
        0);
    CHECK(g.structure().invariant_factors == std::vector<Int>{2, 4});
  }
  SUBCASE("order equals cardinality and coordinates are consistent") {
    // Z/6 x Z/2 presented as pairs
    auto mul = [](std::size_t a, std::size_t b) {
      std::size_t a1 = a % 6, a2 = a / 6, b1 = b % 6, b2 = b / 6;
      return (a1 + b1) % 6 + 6 * ((a2 + b2) % 2);
    };
    EnumeratedGroup g(12, mul, 0);
    CHECK(g.structure().order() == 12);
    CHECK(g.structure().invariant_factors == std::vector<Int>{2, 6});
    // coords invert: rebuild each element from its coordinates
    for (std::size_t e = 0; e < 12; ++e) {
      std::vector<Int> c = g.coords(e);
      std::size_t rebuilt = g.identity();
      for (std::size_t j = 0; j < c.size(); ++j) {
        std::size_t gen = g.generators()[j];
        rebuilt = g.mul(rebuilt, g.power(gen, c[j]));
      }
      CHECK(rebuilt == e);
    }
  }
  SUBCASE("malformed multiplication is rejected") {
    auto bad = [](std::size_t a, std::size_t b) { return std::min<std::size_t>(a + b, 3); };
    CHECK_THROWS_AS(EnumeratedGroup(4, bad, 0), MalformedGroupError);
  }
}

TEST_CASE("abelian invariants: splits and sums") {
  FinAbGroup g;
  g.invariant_factors = {2, 10};  // Z/2 + Z/10
  CHECK(g.order() == 20);
  CHECK(p_part(g, 2).invariant_factors == std::vector<Int>{2, 2});
  CHECK(p_part(g, 5).invariant_factors == std::vector<Int>{5});
  CHECK(prime_to_p_part(g, 5).invariant_factors == std::vector<Int>{2, 2});
  FinAbGroup h;
  h.invariant_factors = {4};
  CHECK(direct_sum(g, h).order() == 80);
}
