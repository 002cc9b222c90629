#pragma once

#include <utility>
#include <vector>

#include "modpic/poly.hpp"

namespace modpic {

struct Factorization {
  FieldElem unit;                                   // leading coefficient
  std::vector<std::pair<Poly, unsigned>> factors;   // monic irreducible, multiplicity
};

// Factor a nonzero polynomial over F_{p^k}. Factors are monic irreducible and
// sorted by (degree, coefficients from the leading one down); the splitter is
// seeded so results are identical across runs.
Factorization poly_factor(const Poly& f);

bool is_irreducible(const Poly& f);

// all monic irreducibles of the given degree over a finite field, sorted
std::vector<Poly> monic_irreducibles(const FieldDesc& f, unsigned degree);

// roots in the base field (finite field: exhaustive; rationals: divisor
// candidates), with multiplicities
std::vector<std::pair<FieldElem, unsigned>> roots_with_multiplicity(const Poly& f);

}  // namespace modpic
