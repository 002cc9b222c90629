#pragma once

#include <string>
#include <vector>

#include "modpic/field.hpp"

namespace modpic {

// Univariate polynomial with FieldElem coefficients, trailing zeros stripped.
// The variable name is display-only and does not take part in equality.
class Poly {
 public:
  Poly() : f_(rational_field()), var_("t") {}
  explicit Poly(const FieldDesc& f, std::string var = "t") : f_(f), var_(std::move(var)) {}
  Poly(const FieldDesc& f, std::vector<FieldElem> coeffs, std::string var = "t");

  static Poly zero(const FieldDesc& f, std::string var = "t");
  static Poly constant(const FieldElem& c, std::string var = "t");
  static Poly x(const FieldDesc& f, std::string var = "t");
  // c0 + c1 x + ... from small integers
  static Poly from_ints(const FieldDesc& f, const std::vector<long long>& c,
                        std::string var = "t");

  const FieldDesc& field() const { return f_; }
  const std::string& var() const { return var_; }
  void set_var(const std::string& v) { var_ = v; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const FieldElem& operator[](std::size_t i) const;
  FieldElem coeff(std::size_t i) const;
  const FieldElem& leading() const;
  const std::vector<FieldElem>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElem& s) const;
  Poly shifted(std::size_t n) const;  // * x^n

  // euclidean division; leading coefficient of d must be invertible
  static void divmod(const Poly& a, const Poly& d, Poly& q, Poly& r);
  Poly operator/(const Poly& d) const;  // exact division, throws if remainder
  Poly operator%(const Poly& d) const;

  Poly monic() const;
  Poly derivative() const;
  FieldElem eval(const FieldElem& x) const;
  Poly pow(unsigned e) const;

  static Poly gcd(const Poly& a, const Poly& b);  // monic
  // g = gcd, g = s*a + t*b
  static Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
  static Poly pow_mod(const Poly& base, const Int& e, const Poly& mod);

  // substitute x -> x^q ... composition a(b)
  Poly compose(const Poly& b) const;
  // x^n a(1/x) for n >= degree
  Poly reversed(std::size_t n) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // canonical order: degree, then coefficients from leading down
  int cmp(const Poly& o) const;
  bool operator<(const Poly& o) const { return cmp(o) < 0; }

  std::string str() const;

 private:
  FieldDesc f_;
  std::vector<FieldElem> c_;
  std::string var_;

  void strip();
};

// Resultant in Y of two polynomials with Poly coefficients (entries listed
// by ascending Y-degree). Computed by fraction-free elimination of the
// Sylvester matrix over F[t].
Poly resultant_bipoly(const std::vector<Poly>& a, const std::vector<Poly>& b);

// resultant of two univariate polynomials over the same field
FieldElem resultant(const Poly& a, const Poly& b);

}  // namespace modpic
