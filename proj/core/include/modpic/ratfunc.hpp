#pragma once

#include <string>

#include "modpic/place.hpp"

namespace modpic {

// Element of the function field. On P^1 a reduced fraction num/den in t
// with monic denominator; on an elliptic curve the canonical form
// (u(x) + v(x) y) / d(x) with d monic and gcd(u, v, d) = 1.
class RationalFunction {
 public:
  static RationalFunction zero(const Curve& c);
  static RationalFunction one(const Curve& c);
  static RationalFunction constant(const Curve& c, const FieldElem& v);
  static RationalFunction p1(const Curve& c, Poly num, Poly den);
  static RationalFunction elliptic(const Curve& c, Poly u, Poly v, Poly d);
  static RationalFunction coordinate(const Curve& c);    // t on P1, x on E
  static RationalFunction coordinate_y(const Curve& c);  // y on E

  const Curve& curve() const { return curve_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_constant() const;

  // P1 accessors
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  // elliptic accessors
  const Poly& fu() const { return num_; }
  const Poly& fv() const { return v_; }
  const Poly& fd() const { return den_; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction pow(Int e) const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RationalFunction() = default;
  Curve curve_;
  Poly num_, den_;  // P1: num/den; E: num_ = u, den_ = d
  Poly v_;          // E only
  void canonicalize();
};

// uniformizers fixed once per place: t - a, the irreducible itself, 1/t on
// P1; x - x_P, y at 2-torsion, x/y at O on E
RationalFunction uniformizer(const Place& p);

// normalized discrete valuation v_P(f); f must be nonzero
long long valuation(const RationalFunction& f, const Place& p);

// truncated expansion of f in the uniformizer at p, f = sum c_i u^i + O(u^n);
// requires v_P(f) >= 0, coefficients are canonical residue-field elements
TruncSeries local_expansion(const RationalFunction& f, const Place& p, std::size_t n);

// f(P) in the residue field, i.e. the 0th expansion coefficient
Poly residue_value(const RationalFunction& f, const Place& p);

// chord/tangent/vertical line through two points of E:
// div = [P] + [Q] + [-(P+Q)] - 3[O]
RationalFunction line_function(const Curve& e, const EPoint& p, const EPoint& q);

}  // namespace modpic
