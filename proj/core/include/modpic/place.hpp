#pragma once

#include <string>
#include <vector>

#include "modpic/curve.hpp"
#include "modpic/poly.hpp"
#include "modpic/series.hpp"

namespace modpic {

enum class PlaceType { P1Finite, P1Infinity, EAffine, EInfinity };

// A closed point of the ambient curve: a monic irreducible in t or the
// point at infinity on P^1; a rational point or O on an elliptic curve.
class Place {
 public:
  Place() = default;  // infinity on P1 over Q
  static Place p1_finite(const Curve& c, Poly monic_irreducible);
  static Place p1_rational(const Curve& c, const FieldElem& a);  // the place t - a
  static Place p1_infinity(const Curve& c);
  static Place elliptic(const Curve& c, const EPoint& p);

  const Curve& curve() const { return curve_; }
  PlaceType type() const { return type_; }
  bool at_infinity() const { return type_ == PlaceType::P1Infinity || type_ == PlaceType::EInfinity; }
  const Poly& poly() const;      // P1Finite
  const EPoint& point() const;   // elliptic

  unsigned degree() const;
  ResidueField residue_field() const;

  bool operator==(const Place& o) const;
  bool operator!=(const Place& o) const { return !(*this == o); }
  int cmp(const Place& o) const;  // canonical: finite by (deg, lex), infinity last; O first on E
  bool operator<(const Place& o) const { return cmp(o) < 0; }

  std::string str() const;

 private:
  Curve curve_;
  PlaceType type_ = PlaceType::P1Infinity;
  Poly poly_;
  EPoint pt_;
};

struct PlaceEnumeration {
  std::vector<Place> places;
  // Over Q only the finitely many requested places cannot be listed; the
  // rational places t - a stay available through Place::p1_rational.
  bool lazy_rational_family = false;
};

// All places of P^1 of degree <= max_degree (plus infinity). Finite base
// fields enumerate monic irreducibles; over Q only degree 1 is supported.
PlaceEnumeration places_of_p1(const Curve& c, unsigned max_degree);

// every place of an elliptic curve in the rational-point model
std::vector<Place> elliptic_places(const Curve& c);

}  // namespace modpic
