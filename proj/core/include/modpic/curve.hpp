#pragma once

#include <string>
#include <vector>

#include "modpic/field.hpp"

namespace modpic {

enum class CurveKind { P1, Elliptic };

// The ambient proper curve: P^1 over F_{p^k} or Q, or an elliptic curve
// y^2 = x^3 + a x + b over a prime field with p not in {2,3}, p <= 97.
class Curve {
 public:
  Curve() = default;  // P1 over Q
  static Curve p1(const FieldDesc& field);
  static Curve elliptic(const FieldDesc& field, const FieldElem& a, const FieldElem& b);

  CurveKind kind() const { return kind_; }
  const FieldDesc& field() const { return field_; }
  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }

  bool operator==(const Curve& o) const;
  std::string str() const;

 private:
  CurveKind kind_ = CurveKind::P1;
  FieldDesc field_;
  FieldElem a_, b_;
};

struct EPoint {
  bool infinity = true;
  FieldElem x, y;

  static EPoint at_infinity() { return EPoint{}; }
  static EPoint affine(const FieldElem& x, const FieldElem& y) { return EPoint{false, x, y}; }

  bool operator==(const EPoint& o) const;
  // canonical order: O first, then by (x, y)
  int cmp(const EPoint& o) const;
  bool operator<(const EPoint& o) const { return cmp(o) < 0; }
  std::string str() const;
};

bool on_curve(const Curve& e, const EPoint& p);
EPoint ep_neg(const Curve& e, const EPoint& p);
EPoint ep_add(const Curve& e, const EPoint& p, const EPoint& q);
EPoint ep_mul(const Curve& e, Int n, const EPoint& p);

// exhaustive enumeration over F_p, canonically ordered with O first
std::vector<EPoint> elliptic_points(const Curve& e);

}  // namespace modpic
