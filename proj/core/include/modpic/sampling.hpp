#pragma once

#include "modpic/modulus.hpp"
#include "modpic/rng.hpp"

namespace modpic {

// Functions sampled for the verification suites are kept in factored form
// base^exponent: raising to the unit-group exponent is how elliptic
// G-elements are produced, and expanding the power explicitly would blow up
// the polynomial degrees for nothing. Jets and divisors are computed from
// the base and scaled exactly.
struct GSample {
  RationalFunction base;
  Int exponent = 1;

  std::string str() const;
};

// exact jet test: base^exponent = 1 along D
bool sample_in_g(const GSample& g, const Modulus& d);
// exponent * div(base)
ZeroCycle sample_divisor(const GSample& g);

Poly random_poly(const FieldDesc& f, unsigned max_degree, Rng& rng);

// exponent of (O_D)^x = prod (O/m^n)^x; every unit along |D| raised to this
// power lands in G(C,D)
Int modulus_unit_exponent(const Curve& c, const Modulus& d);

// a nonconstant function that is a unit at every place of |D| and whose
// divisor stays inside the rational-point model
RationalFunction sample_unit_along(const Curve& c, const Modulus& d, Rng& rng);

// random element of G(C,D), nonconstant
GSample sample_g_element(const Curve& c, const Modulus& d, Rng& rng);

// Random element of G(C,D_red) \ G(C,D); requires a non-reduced D. On some
// elliptic instances every function with a rational divisor already lies in
// G(C,D) (at a 2-torsion place the unit jet of such a function is even), so
// the draw can run out of attempts and throw.
GSample sample_g_red_element(const Curve& c, const Modulus& d, Rng& rng, int max_attempts = 64);

// random 0-cycle supported off |D| (possibly empty)
ZeroCycle sample_cycle(const Curve& c, const Modulus& d, Rng& rng, unsigned terms);

// random nonconstant cover P1 -> P1 of degree <= max_degree
RationalFunction sample_cover(const Curve& source, unsigned max_degree, Rng& rng);

}  // namespace modpic
