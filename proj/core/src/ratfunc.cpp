#include "modpic/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

#include "modpic/errors.hpp"

namespace modpic {

namespace {

Poly gcd3(const Poly& a, const Poly& b, const Poly& c) {
  return Poly::gcd(Poly::gcd(a, b), c);
}

}  // namespace

void RationalFunction::canonicalize() {
  const FieldDesc& f = curve_.field();
  if (curve_.kind() == CurveKind::P1) {
    if (num_.is_zero()) {
      den_ = Poly::constant(FieldElem::one(f), "t");
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    FieldElem lc = den_.leading();
    if (!lc.is_one()) {
      FieldElem inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
    return;
  }
  // elliptic: (u + v y)/d
  if (num_.is_zero() && v_.is_zero()) {
    den_ = Poly::constant(FieldElem::one(f), "x");
    return;
  }
  Poly g = gcd3(num_, v_, den_);
  if (g.degree() > 0) {
    if (!num_.is_zero()) num_ = num_ / g;
    if (!v_.is_zero()) v_ = v_ / g;
    den_ = den_ / g;
  }
  FieldElem lc = den_.leading();
  if (!lc.is_one()) {
    FieldElem inv = lc.inverse();
    num_ = num_ * inv;
    v_ = v_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::zero(const Curve& c) {
  return constant(c, FieldElem::zero(c.field()));
}

RationalFunction RationalFunction::one(const Curve& c) {
  return constant(c, FieldElem::one(c.field()));
}

RationalFunction RationalFunction::constant(const Curve& c, const FieldElem& v) {
  RationalFunction r;
  r.curve_ = c;
  const char* var = c.kind() == CurveKind::P1 ? "t" : "x";
  r.num_ = Poly::constant(v, var);
  r.den_ = Poly::constant(FieldElem::one(c.field()), var);
  r.v_ = Poly::zero(c.field(), "x");
  return r;
}

RationalFunction RationalFunction::p1(const Curve& c, Poly num, Poly den) {
  if (c.kind() != CurveKind::P1) throw std::domain_error("p1 function on wrong curve");
  if (den.is_zero()) throw std::domain_error("zero denominator");
  RationalFunction r;
  r.curve_ = c;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.v_ = Poly::zero(c.field(), "x");
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::elliptic(const Curve& c, Poly u, Poly v, Poly d) {
  if (c.kind() != CurveKind::Elliptic) throw std::domain_error("elliptic function on wrong curve");
  if (d.is_zero()) throw std::domain_error("zero denominator");
  RationalFunction r;
  r.curve_ = c;
  r.num_ = std::move(u);
  r.v_ = std::move(v);
  r.den_ = std::move(d);
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::coordinate(const Curve& c) {
  RationalFunction r = one(c);
  if (c.kind() == CurveKind::P1)
    r.num_ = Poly::x(c.field(), "t");
  else
    r.num_ = Poly::x(c.field(), "x");
  return r;
}

RationalFunction RationalFunction::coordinate_y(const Curve& c) {
  if (c.kind() != CurveKind::Elliptic) throw std::domain_error("y on a non-elliptic curve");
  RationalFunction r = one(c);
  r.num_ = Poly::zero(c.field(), "x");
  r.v_ = Poly::constant(FieldElem::one(c.field()), "x");
  return r;
}

bool RationalFunction::is_zero() const {
  return num_.is_zero() && (curve_.kind() == CurveKind::P1 || v_.is_zero());
}

bool RationalFunction::is_one() const {
  if (curve_.kind() == CurveKind::P1)
    return num_.degree() == 0 && den_.degree() == 0 && num_[0].is_one();
  return v_.is_zero() && num_.degree() == 0 && den_.degree() == 0 && num_[0].is_one();
}

bool RationalFunction::is_constant() const {
  if (is_zero()) return true;
  if (curve_.kind() == CurveKind::P1) return num_.degree() == 0 && den_.degree() == 0;
  return v_.is_zero() && num_.degree() <= 0 && den_.degree() == 0;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (!(curve_ == o.curve_)) throw std::domain_error("curve mismatch");
  RationalFunction r;
  r.curve_ = curve_;
  if (curve_.kind() == CurveKind::P1) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.v_ = v_;
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.v_ = v_ * o.den_ + o.v_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  r.v_ = -r.v_;
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (!(curve_ == o.curve_)) throw std::domain_error("curve mismatch");
  RationalFunction r;
  r.curve_ = curve_;
  if (curve_.kind() == CurveKind::P1) {
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.v_ = v_;
  } else {
    // (u1 + v1 y)(u2 + v2 y) = u1 u2 + v1 v2 R + (u1 v2 + u2 v1) y,  R = x^3+ax+b
    const FieldDesc& f = curve_.field();
    Poly rcurve = Poly(f, {curve_.b(), curve_.a(), FieldElem::zero(f), FieldElem::one(f)}, "x");
    r.num_ = num_ * o.num_ + v_ * o.v_ * rcurve;
    r.v_ = num_ * o.v_ + o.num_ * v_;
    r.den_ = den_ * o.den_;
  }
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero function");
  RationalFunction r;
  r.curve_ = curve_;
  if (curve_.kind() == CurveKind::P1) {
    r.num_ = den_;
    r.den_ = num_;
    r.v_ = v_;
  } else {
    // 1/(u + v y) = (u - v y)/(u^2 - v^2 R)
    const FieldDesc& f = curve_.field();
    Poly rcurve = Poly(f, {curve_.b(), curve_.a(), FieldElem::zero(f), FieldElem::one(f)}, "x");
    Poly norm = num_ * num_ - v_ * v_ * rcurve;
    r.num_ = num_ * den_;
    r.v_ = -(v_ * den_);
    r.den_ = norm;
  }
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r = one(curve_);
  RationalFunction b = *this;
  while (e > 0) {
    if ((e & 1) != 0) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  if (!(curve_ == o.curve_)) return false;
  return num_ == o.num_ && den_ == o.den_ && v_ == o.v_;
}

std::string RationalFunction::str() const {
  std::ostringstream os;
  if (curve_.kind() == CurveKind::P1) {
    os << "(" << num_.str() << ")";
    if (den_.degree() > 0 || !den_[0].is_one()) os << "/(" << den_.str() << ")";
    return os.str();
  }
  os << "(" << num_.str();
  if (!v_.is_zero()) os << " + (" << v_.str() << ")*y";
  os << ")";
  if (den_.degree() > 0 || !den_[0].is_one()) os << "/(" << den_.str() << ")";
  return os.str();
}

RationalFunction uniformizer(const Place& p) {
  const Curve& c = p.curve();
  const FieldDesc& f = c.field();
  switch (p.type()) {
    case PlaceType::P1Finite:
      return RationalFunction::p1(c, p.poly(), Poly::constant(FieldElem::one(f), "t"));
    case PlaceType::P1Infinity:
      return RationalFunction::p1(c, Poly::constant(FieldElem::one(f), "t"), Poly::x(f, "t"));
    case PlaceType::EAffine: {
      const EPoint& pt = p.point();
      if (pt.y.is_zero()) return RationalFunction::coordinate_y(c);
      Poly xm(f, {-pt.x, FieldElem::one(f)}, "x");
      return RationalFunction::elliptic(c, xm, Poly::zero(f, "x"),
                                        Poly::constant(FieldElem::one(f), "x"));
    }
    case PlaceType::EInfinity:
      return RationalFunction::coordinate(c) / RationalFunction::coordinate_y(c);
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// P1 local expansions

namespace {

// strip the maximal power of pi from a, returning the multiplicity
unsigned strip_factor(Poly& a, const Poly& pi) {
  unsigned m = 0;
  while (!a.is_zero()) {
    Poly q, r;
    Poly::divmod(a, pi, q, r);
    if (!r.is_zero()) break;
    a = q;
    ++m;
  }
  return m;
}

struct P1Local {
  long long val;
  Poly num1, den1;  // both coprime to pi
};

P1Local p1_split(const RationalFunction& f, const Poly& pi) {
  Poly num = f.num(), den = f.den();
  unsigned a = strip_factor(num, pi);
  unsigned b = strip_factor(den, pi);
  return P1Local{static_cast<long long>(a) - static_cast<long long>(b), num, den};
}

TruncSeries p1_expand(const ResidueField& rf, const Poly& pi, Poly num1, Poly den1,
                      long long val, std::size_t n) {
  // reduction mod pi is the residue map; for degree-1 places this is
  // evaluation and differs from rf.reduce, whose modulus is the variable
  TruncSeries out(rf, n);
  if (val >= static_cast<long long>(n)) return out;
  Poly deninv = rf.inv(den1 % pi);
  Poly r = num1;
  for (std::size_t i = static_cast<std::size_t>(val); i < n; ++i) {
    Poly c = rf.mul(r % pi, deninv);
    out.set_coeff(i, c);
    r = (r - c * den1) / pi;
  }
  return out;
}

// f rewritten at infinity in the variable s = 1/t
void p1_at_infinity(const RationalFunction& f, Poly& num_s, Poly& den_s, long long& shift) {
  const Poly& num = f.num();
  const Poly& den = f.den();
  std::size_t dn = static_cast<std::size_t>(num.degree());
  std::size_t dd = static_cast<std::size_t>(den.degree());
  num_s = num.reversed(dn);
  den_s = den.reversed(dd);
  num_s.set_var("s");
  den_s.set_var("s");
  shift = static_cast<long long>(dd) - static_cast<long long>(dn);
}

// ---------------------------------------------------------------------------
// Elliptic local expansions: Laurent window arithmetic

struct Laurent {
  long long lo = 0;   // value = sum_{i >= lo} c_{i - lo} u^i
  long long hi = 0;   // coefficients known for indices < hi
  TruncSeries tail;   // length hi - lo

  static Laurent from_series(const TruncSeries& s, long long lo) {
    return Laurent{lo, lo + static_cast<long long>(s.precision()), s};
  }
};

Laurent lmul(const Laurent& a, const Laurent& b) {
  long long lo = a.lo + b.lo;
  long long hi = std::min(a.lo + b.hi, b.lo + a.hi);
  TruncSeries t = (a.tail * b.tail).truncated(static_cast<std::size_t>(hi - lo));
  return Laurent{lo, hi, t};
}

Laurent ladd(const Laurent& a, const Laurent& b) {
  long long lo = std::min(a.lo, b.lo);
  long long hi = std::min(a.hi, b.hi);
  if (hi <= lo) throw std::logic_error("laurent window exhausted");
  std::size_t n = static_cast<std::size_t>(hi - lo);
  const ResidueField& rf = a.tail.rf();
  TruncSeries t(rf, n);
  for (long long i = lo; i < hi; ++i) {
    Poly c = rf.zero();
    if (i >= a.lo && i < a.hi) c = rf.add(c, a.tail.coeff(static_cast<std::size_t>(i - a.lo)));
    if (i >= b.lo && i < b.hi) c = rf.add(c, b.tail.coeff(static_cast<std::size_t>(i - b.lo)));
    t.set_coeff(static_cast<std::size_t>(i - lo), c);
  }
  return Laurent{lo, hi, t};
}

Laurent linv(const Laurent& a) {
  // normalize so the tail starts with a unit
  std::size_t v = a.tail.valuation();
  if (v == a.tail.precision()) throw std::domain_error("laurent inverse of zero window");
  TruncSeries t = a.tail.unshifted(v);
  return Laurent::from_series(t.inverse(), -(a.lo + static_cast<long long>(v)));
}

Laurent lconst(const ResidueField& rf, const FieldElem& c, std::size_t n) {
  // constants are exact; a generous window keeps min() bookkeeping simple
  return Laurent::from_series(TruncSeries::constant(rf, n, rf.from_base(c)), 0);
}

Laurent eval_poly(const Poly& p, const Laurent& x, const ResidueField& rf, std::size_t n) {
  if (p.is_zero()) return lconst(rf, FieldElem::zero(rf.base()), n);
  Laurent acc = lconst(rf, p.leading(), n);
  for (int i = p.degree() - 1; i >= 0; --i)
    acc = ladd(lmul(acc, x), lconst(rf, p.coeff(static_cast<std::size_t>(i)), n));
  return acc;
}

// x and y as Laurent expansions in the canonical uniformizer at p
void elliptic_xy(const Place& p, std::size_t n, Laurent& lx, Laurent& ly) {
  const Curve& c = p.curve();
  const FieldDesc& f = c.field();
  ResidueField rf = ResidueField::of_base(f);
  const EPoint& pt = p.point();
  if (p.type() == PlaceType::EInfinity) {
    // z = x/y; x = s/z^2, y = s/z^3 with s^3 - s^2 + a s z^4 + b z^6 = 0, s(0)=1
    TruncSeries z4 = TruncSeries::uniformizer(rf, n).pow(4);
    TruncSeries z6 = TruncSeries::uniformizer(rf, n).pow(6);
    TruncSeries c0(rf, n), c1(rf, n), c2(rf, n), c3(rf, n);
    for (std::size_t i = 0; i < n; ++i) {
      c0.set_coeff(i, rf.mul(z6.coeff(i), rf.from_base(c.b())));
      c1.set_coeff(i, rf.mul(z4.coeff(i), rf.from_base(c.a())));
    }
    c2 = TruncSeries::constant(rf, n, rf.from_base(FieldElem::from_int(f, -1)));
    c3 = TruncSeries::constant(rf, n, rf.one());
    TruncSeries s = series_poly_root({c0, c1, c2, c3}, rf.one());
    lx = Laurent::from_series(s, -2);
    ly = Laurent::from_series(s, -3);
    return;
  }
  if (pt.y.is_zero()) {
    // uniformizer y: x satisfies x^3 + a x + (b - y^2) = 0 with x(0) = x_P
    TruncSeries y2 = TruncSeries::uniformizer(rf, n).pow(2);
    TruncSeries c0(rf, n);
    for (std::size_t i = 0; i < n; ++i) c0.set_coeff(i, rf.neg(y2.coeff(i)));
    c0.set_coeff(0, rf.add(c0.coeff(0), rf.from_base(c.b())));
    TruncSeries c1 = TruncSeries::constant(rf, n, rf.from_base(c.a()));
    TruncSeries c2(rf, n);
    TruncSeries c3 = TruncSeries::constant(rf, n, rf.one());
    TruncSeries xs = series_poly_root({c0, c1, c2, c3}, rf.from_base(pt.x));
    lx = Laurent::from_series(xs, 0);
    ly = Laurent::from_series(TruncSeries::uniformizer(rf, n), 0);
    return;
  }
  // uniformizer x - x_P: y = sqrt(S) with S = (x_P + u)^3 + a (x_P + u) + b
  TruncSeries xs = TruncSeries::constant(rf, n, rf.from_base(pt.x));
  xs.set_coeff(1, rf.one());
  TruncSeries s = ((xs * xs) * xs);
  for (std::size_t i = 0; i < n; ++i) {
    Poly v = s.coeff(i);
    v = rf.add(v, rf.mul(xs.coeff(i), rf.from_base(c.a())));
    if (i == 0) v = rf.add(v, rf.from_base(c.b()));
    s.set_coeff(i, v);
  }
  // phi(Y) = Y^2 - S, root y_P
  TruncSeries c0(rf, n);
  for (std::size_t i = 0; i < n; ++i) c0.set_coeff(i, rf.neg(s.coeff(i)));
  TruncSeries c1(rf, n);
  TruncSeries c2 = TruncSeries::constant(rf, n, rf.one());
  TruncSeries ys = series_poly_root({c0, c1, c2}, rf.from_base(pt.y));
  lx = Laurent::from_series(xs, 0);
  ly = Laurent::from_series(ys, 0);
}

Laurent elliptic_laurent(const RationalFunction& f, const Place& p, std::size_t window) {
  const Curve& c = p.curve();
  ResidueField rf = ResidueField::of_base(c.field());
  // pole-order bounds make the window big enough that the leading
  // coefficient is always visible
  long long du = std::max(f.fu().degree(), 0);
  long long dv = std::max(f.fv().degree(), 0);
  long long dd = std::max(f.fd().degree(), 0);
  long long bound = std::max(2 * du, 2 * dv + 3) + 2 * dd + 3;
  std::size_t n = window + static_cast<std::size_t>(2 * bound) + 8;
  Laurent lx, ly;
  elliptic_xy(p, n, lx, ly);
  Laurent nu = eval_poly(f.fu(), lx, rf, n);
  if (!f.fv().is_zero()) nu = ladd(nu, lmul(eval_poly(f.fv(), lx, rf, n), ly));
  Laurent de = eval_poly(f.fd(), lx, rf, n);
  return lmul(nu, linv(de));
}

}  // namespace

long long valuation(const RationalFunction& f, const Place& p) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero function");
  if (!(f.curve() == p.curve())) throw std::domain_error("curve mismatch");
  switch (p.type()) {
    case PlaceType::P1Finite:
      return p1_split(f, p.poly()).val;
    case PlaceType::P1Infinity:
      return static_cast<long long>(f.den().degree()) - static_cast<long long>(f.num().degree());
    default: {
      Laurent l = elliptic_laurent(f, p, 1);
      std::size_t v = l.tail.valuation();
      if (v == l.tail.precision())
        throw std::logic_error("elliptic valuation: window exhausted for a nonzero function");
      return l.lo + static_cast<long long>(v);
    }
  }
}

TruncSeries local_expansion(const RationalFunction& f, const Place& p, std::size_t n) {
  if (f.is_zero()) return TruncSeries(p.residue_field(), n);
  if (!(f.curve() == p.curve())) throw std::domain_error("curve mismatch");
  switch (p.type()) {
    case PlaceType::P1Finite: {
      P1Local s = p1_split(f, p.poly());
      if (s.val < 0) throw std::domain_error("local_expansion: pole at the place");
      return p1_expand(p.residue_field(), p.poly(), s.num1, s.den1, s.val, n);
    }
    case PlaceType::P1Infinity: {
      Poly num_s, den_s;
      long long shift;
      p1_at_infinity(f, num_s, den_s, shift);
      Poly pi = Poly::x(f.curve().field(), "s");
      // reversal leaves units at s = 0; the shift carries the valuation
      if (shift < 0) throw std::domain_error("local_expansion: pole at infinity");
      return p1_expand(p.residue_field(), pi, num_s, den_s, shift, n);
    }
    default: {
      Laurent l = elliptic_laurent(f, p, n);
      if (l.lo + static_cast<long long>(l.tail.valuation()) < 0)
        throw std::domain_error("local_expansion: pole at the place");
      ResidueField rf = p.residue_field();
      TruncSeries out(rf, n);
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        if (i >= l.lo && i < l.hi) out.set_coeff(static_cast<std::size_t>(i),
                                                 l.tail.coeff(static_cast<std::size_t>(i - l.lo)));
      }
      return out;
    }
  }
}

Poly residue_value(const RationalFunction& f, const Place& p) {
  return local_expansion(f, p, 1).coeff(0);
}

RationalFunction line_function(const Curve& e, const EPoint& p, const EPoint& q) {
  if (e.kind() != CurveKind::Elliptic) throw std::domain_error("line_function: wrong curve");
  const FieldDesc& f = e.field();
  Poly one = Poly::constant(FieldElem::one(f), "x");
  if (p.infinity && q.infinity) return RationalFunction::one(e);
  if (p.infinity || q.infinity) {
    const EPoint& a = p.infinity ? q : p;
    Poly xm(f, {-a.x, FieldElem::one(f)}, "x");
    return RationalFunction::elliptic(e, xm, Poly::zero(f, "x"), one);
  }
  EPoint sum = ep_add(e, p, q);
  if (sum.infinity) {
    // vertical line
    Poly xm(f, {-p.x, FieldElem::one(f)}, "x");
    return RationalFunction::elliptic(e, xm, Poly::zero(f, "x"), one);
  }
  FieldElem lambda = FieldElem::zero(f);
  if (p == q) {
    FieldElem three = FieldElem::from_int(f, 3);
    FieldElem two = FieldElem::from_int(f, 2);
    lambda = (three * p.x * p.x + e.a()) / (two * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  // y - lambda (x - x_P) - y_P
  Poly u(f, {lambda * p.x - p.y, -lambda}, "x");
  return RationalFunction::elliptic(e, u, one, one);
}

}  // namespace modpic
