#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modpic/poly.hpp"

namespace modpic {

// Residue field of a place, represented as base[t]/(m) for a monic
// irreducible m over the base field. Elements are reduced Polys; for a
// degree-1 modulus they are constants and the field is the base itself.
// The modulus is the canonical defining polynomial of the place, so the
// representation is identical across runs.
class ResidueField {
 public:
  ResidueField();  // Q
  ResidueField(const FieldDesc& base, Poly modulus);
  static ResidueField of_base(const FieldDesc& f);  // modulus t, elements constants

  const FieldDesc& base() const { return base_; }
  const Poly& modulus() const { return mod_; }
  unsigned degree() const { return static_cast<unsigned>(mod_.degree()); }
  bool is_rational() const { return base_.p == 0; }
  std::uint64_t order() const;  // 0 in char 0

  Poly zero() const { return Poly::zero(base_, mod_.var()); }
  Poly one() const { return Poly::constant(FieldElem::one(base_), mod_.var()); }
  Poly from_base(const FieldElem& c) const { return Poly::constant(c, mod_.var()); }
  Poly reduce(const Poly& a) const { return a % mod_; }

  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly neg(const Poly& a) const { return -a; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % mod_; }
  Poly inv(const Poly& a) const;
  Poly pow(const Poly& a, Int e) const;
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  bool is_one(const Poly& a) const { return a.degree() == 0 && a[0].is_one(); }

  // dense canonical index in [0, order)
  std::uint64_t code(const Poly& a) const;
  Poly from_code(std::uint64_t c) const;

  Int unit_order(const Poly& a) const;
  Poly primitive_unit() const;  // smallest generator of the unit group

  bool operator==(const ResidueField& o) const { return base_ == o.base_ && mod_ == o.mod_; }

 private:
  FieldDesc base_;
  Poly mod_;
};

// Truncated power series over a residue field: c0 + c1 u + ... modulo u^prec.
class TruncSeries {
 public:
  TruncSeries() : prec_(0) {}
  TruncSeries(const ResidueField& rf, std::size_t prec);
  static TruncSeries constant(const ResidueField& rf, std::size_t prec, const Poly& c);
  static TruncSeries one(const ResidueField& rf, std::size_t prec);
  static TruncSeries uniformizer(const ResidueField& rf, std::size_t prec);  // u

  const ResidueField& rf() const { return rf_; }
  std::size_t precision() const { return prec_; }
  const Poly& coeff(std::size_t i) const;
  void set_coeff(std::size_t i, const Poly& c);

  bool is_zero() const;
  // least i with nonzero c_i, or precision() when all shown terms vanish
  std::size_t valuation() const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries inverse() const;  // c0 must be a unit
  TruncSeries pow(Int e) const;
  TruncSeries truncated(std::size_t prec) const;
  TruncSeries shifted(std::size_t n) const;  // * u^n
  // divide by u^n; the first n coefficients must vanish
  TruncSeries unshifted(std::size_t n) const;

  bool operator==(const TruncSeries& o) const;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  std::string str(const std::string& uvar = "u") const;

 private:
  ResidueField rf_;
  std::vector<Poly> c_;
  std::size_t prec_;
};

// log(1 + m) truncated below u^prec; char 0 only
TruncSeries series_log(const TruncSeries& s);
// exp(w) for w with positive valuation; char 0 only
TruncSeries series_exp(const TruncSeries& w);

// Solve phi(Y) = 0 for a series Y with Y(0) = y0, where phi is given by its
// TruncSeries coefficients (ascending Y-degree), phi(y0) = 0 mod u and
// phi'(y0) a unit. Newton iteration, quadratic precision gain.
TruncSeries series_poly_root(const std::vector<TruncSeries>& phi, const Poly& y0);

}  // namespace modpic
