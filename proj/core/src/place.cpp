#include "modpic/place.hpp"

#include <stdexcept>

#include "modpic/errors.hpp"
#include "modpic/factor.hpp"

namespace modpic {

Place Place::p1_finite(const Curve& c, Poly monic_irreducible) {
  if (c.kind() != CurveKind::P1) throw std::domain_error("p1_finite: wrong curve kind");
  Place p;
  p.curve_ = c;
  p.type_ = PlaceType::P1Finite;
  if (monic_irreducible.degree() < 1)
    throw std::domain_error("place polynomial must be nonconstant");
  if (!monic_irreducible.leading().is_one()) monic_irreducible = monic_irreducible.monic();
  if (c.field().p == 0) {
    if (monic_irreducible.degree() != 1)
      throw BoundsError("only rational places are supported over Q");
  } else if (!is_irreducible(monic_irreducible)) {
    throw std::domain_error("place polynomial must be irreducible");
  }
  p.poly_ = std::move(monic_irreducible);
  return p;
}

Place Place::p1_rational(const Curve& c, const FieldElem& a) {
  Poly lin(c.field(), {-a, FieldElem::one(c.field())}, "t");
  return p1_finite(c, std::move(lin));
}

Place Place::p1_infinity(const Curve& c) {
  if (c.kind() != CurveKind::P1) throw std::domain_error("p1_infinity: wrong curve kind");
  Place p;
  p.curve_ = c;
  p.type_ = PlaceType::P1Infinity;
  return p;
}

Place Place::elliptic(const Curve& c, const EPoint& point) {
  if (c.kind() != CurveKind::Elliptic) throw std::domain_error("elliptic place: wrong curve kind");
  if (!on_curve(c, point)) throw std::domain_error("point is not on the curve");
  Place p;
  p.curve_ = c;
  p.type_ = point.infinity ? PlaceType::EInfinity : PlaceType::EAffine;
  p.pt_ = point;
  return p;
}

const Poly& Place::poly() const {
  if (type_ != PlaceType::P1Finite) throw std::domain_error("poly(): not a finite P1 place");
  return poly_;
}

const EPoint& Place::point() const {
  if (type_ != PlaceType::EAffine && type_ != PlaceType::EInfinity)
    throw std::domain_error("point(): not an elliptic place");
  return pt_;
}

unsigned Place::degree() const {
  if (type_ == PlaceType::P1Finite) return static_cast<unsigned>(poly_.degree());
  return 1;
}

ResidueField Place::residue_field() const {
  if (type_ == PlaceType::P1Finite && poly_.degree() > 1)
    return ResidueField(curve_.field(), poly_);
  return ResidueField::of_base(curve_.field());
}

bool Place::operator==(const Place& o) const {
  if (!(curve_ == o.curve_) || type_ != o.type_) return false;
  switch (type_) {
    case PlaceType::P1Finite: return poly_ == o.poly_;
    case PlaceType::EAffine: return pt_ == o.pt_;
    default: return true;
  }
}

int Place::cmp(const Place& o) const {
  if (type_ != o.type_) {
    // P1: finite before infinity; E: O before affine points
    auto rank = [](PlaceType t) {
      switch (t) {
        case PlaceType::P1Finite: return 0;
        case PlaceType::P1Infinity: return 1;
        case PlaceType::EInfinity: return 2;
        case PlaceType::EAffine: return 3;
      }
      return 4;
    };
    int ra = rank(type_), rb = rank(o.type_);
    return ra < rb ? -1 : (ra > rb ? 1 : 0);
  }
  switch (type_) {
    case PlaceType::P1Finite: return poly_.cmp(o.poly_);
    case PlaceType::EAffine: return pt_.cmp(o.pt_);
    default: return 0;
  }
}

std::string Place::str() const {
  switch (type_) {
    case PlaceType::P1Finite: return "(" + poly_.str() + ")";
    case PlaceType::P1Infinity: return "inf";
    case PlaceType::EAffine: return pt_.str();
    case PlaceType::EInfinity: return "O";
  }
  return "?";
}

PlaceEnumeration places_of_p1(const Curve& c, unsigned max_degree) {
  if (c.kind() != CurveKind::P1) throw std::domain_error("places_of_p1: wrong curve kind");
  if (max_degree < 1) throw std::domain_error("places_of_p1: max_degree must be >= 1");
  PlaceEnumeration out;
  if (c.field().p == 0) {
    if (max_degree > 1)
      throw BoundsError("over Q only rational places (degree 1) are supported");
    out.lazy_rational_family = true;
    out.places.push_back(Place::p1_infinity(c));
    return out;
  }
  for (unsigned d = 1; d <= max_degree; ++d)
    for (const Poly& f : monic_irreducibles(c.field(), d))
      out.places.push_back(Place::p1_finite(c, f));
  out.places.push_back(Place::p1_infinity(c));
  return out;
}

std::vector<Place> elliptic_places(const Curve& c) {
  std::vector<Place> out;
  for (const EPoint& p : elliptic_points(c)) out.push_back(Place::elliptic(c, p));
  return out;
}

}  // namespace modpic
