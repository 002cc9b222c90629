#include "modpic/curve.hpp"

#include <sstream>

#include "modpic/errors.hpp"

namespace modpic {

Curve Curve::p1(const FieldDesc& field) {
  Curve c;
  c.kind_ = CurveKind::P1;
  c.field_ = field;
  c.a_ = FieldElem::zero(field);
  c.b_ = FieldElem::zero(field);
  return c;
}

Curve Curve::elliptic(const FieldDesc& field, const FieldElem& a, const FieldElem& b) {
  if (field.p == 0) throw ParseError("elliptic curves require a finite prime field");
  if (field.k != 1) throw ParseError("elliptic base field must be a prime field");
  if (field.p == 2 || field.p == 3) throw ParseError("elliptic characteristic must avoid 2 and 3");
  if (field.p > 97) throw ParseError("elliptic base field limited to p <= 97");
  FieldElem four = FieldElem::from_int(field, 4);
  FieldElem s27 = FieldElem::from_int(field, 27);
  FieldElem disc = four * a * a * a + s27 * b * b;
  if (disc.is_zero()) throw ParseError("singular curve: 4a^3 + 27b^2 = 0");
  Curve c;
  c.kind_ = CurveKind::Elliptic;
  c.field_ = field;
  c.a_ = a;
  c.b_ = b;
  return c;
}

bool Curve::operator==(const Curve& o) const {
  if (kind_ != o.kind_ || !(field_ == o.field_)) return false;
  if (kind_ == CurveKind::Elliptic) return a_ == o.a_ && b_ == o.b_;
  return true;
}

std::string Curve::str() const {
  std::ostringstream os;
  if (kind_ == CurveKind::P1) {
    os << "P1/" << field_.str();
  } else {
    os << "E(y^2=x^3";
    if (!a_.is_zero()) os << "+" << a_.str() << "x";
    if (!b_.is_zero()) os << "+" << b_.str();
    os << ")/" << field_.str();
  }
  return os.str();
}

bool EPoint::operator==(const EPoint& o) const {
  if (infinity != o.infinity) return false;
  if (infinity) return true;
  return x == o.x && y == o.y;
}

int EPoint::cmp(const EPoint& o) const {
  if (infinity != o.infinity) return infinity ? -1 : 1;
  if (infinity) return 0;
  int c = x.cmp(o.x);
  if (c != 0) return c;
  return y.cmp(o.y);
}

std::string EPoint::str() const {
  if (infinity) return "O";
  return "(" + x.str() + "," + y.str() + ")";
}

bool on_curve(const Curve& e, const EPoint& p) {
  if (e.kind() != CurveKind::Elliptic) throw std::domain_error("on_curve: not an elliptic curve");
  if (p.infinity) return true;
  FieldElem lhs = p.y * p.y;
  FieldElem rhs = p.x * p.x * p.x + e.a() * p.x + e.b();
  return lhs == rhs;
}

EPoint ep_neg(const Curve& e, const EPoint& p) {
  (void)e;
  if (p.infinity) return p;
  return EPoint::affine(p.x, -p.y);
}

EPoint ep_add(const Curve& e, const EPoint& p, const EPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const FieldDesc& f = e.field();
  if (p.x == q.x && !(p.y == q.y)) return EPoint::at_infinity();
  FieldElem lambda = FieldElem::zero(f);
  if (p.x == q.x) {
    if (p.y.is_zero()) return EPoint::at_infinity();  // doubling a 2-torsion point
    FieldElem three = FieldElem::from_int(f, 3);
    FieldElem two = FieldElem::from_int(f, 2);
    lambda = (three * p.x * p.x + e.a()) / (two * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  FieldElem xr = lambda * lambda - p.x - q.x;
  FieldElem yr = lambda * (p.x - xr) - p.y;
  return EPoint::affine(xr, yr);
}

EPoint ep_mul(const Curve& e, Int n, const EPoint& p) {
  EPoint base = p;
  if (n < 0) {
    base = ep_neg(e, p);
    n = -n;
  }
  EPoint acc = EPoint::at_infinity();
  while (n > 0) {
    if ((n & 1) != 0) acc = ep_add(e, acc, base);
    base = ep_add(e, base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<EPoint> elliptic_points(const Curve& e) {
  if (e.kind() != CurveKind::Elliptic)
    throw std::domain_error("elliptic_points: not an elliptic curve");
  const FieldDesc& f = e.field();
  std::vector<EPoint> pts{EPoint::at_infinity()};
  for (std::uint64_t xc = 0; xc < f.order(); ++xc) {
    FieldElem x = FieldElem::from_code(f, xc);
    FieldElem rhs = x * x * x + e.a() * x + e.b();
    for (std::uint64_t yc = 0; yc < f.order(); ++yc) {
      FieldElem y = FieldElem::from_code(f, yc);
      if (y * y == rhs) pts.push_back(EPoint::affine(x, y));
    }
  }
  return pts;  // O first, then (x, y) ascending by construction
}

}  // namespace modpic
