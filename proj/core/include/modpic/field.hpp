#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modpic/bigint.hpp"

namespace modpic {

// Descriptor of the base field: F_{p^k} for prime p (k <= 4, fixed defining
// polynomial), or Q when p == 0 (then k == 1).
struct FieldDesc {
  std::uint32_t p = 0;
  std::uint32_t k = 1;

  bool is_rational() const { return p == 0; }
  std::uint64_t order() const;  // q = p^k; 0 for Q
  std::string str() const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

FieldDesc make_field(std::uint32_t p, std::uint32_t k = 1);
FieldDesc rational_field();

// Coefficients (constant term first) of the fixed defining polynomial of
// F_{p^k} over F_p; the table ships with the library so representations are
// identical across runs.
const std::vector<std::uint32_t>& defining_poly(std::uint32_t p, std::uint32_t k);
bool has_defining_poly(std::uint32_t p, std::uint32_t k);

// An element of F_{p^k} (canonical residue polynomial of degree < k over F_p)
// or of Q (reduced fraction). Immutable value semantics.
class FieldElem {
 public:
  FieldElem();  // 0 in Q

  static FieldElem zero(const FieldDesc& f);
  static FieldElem one(const FieldDesc& f);
  static FieldElem from_int(const FieldDesc& f, const Int& n);
  static FieldElem from_rat(const Rat& r);
  // char p: coefficients c0..c_{k-1} of the residue polynomial
  static FieldElem from_coeffs(const FieldDesc& f, const std::vector<std::uint32_t>& c);
  // char p: canonical index sum c_i p^i in [0, q)
  static FieldElem from_code(const FieldDesc& f, std::uint64_t code);

  const FieldDesc& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(const Int& e) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // canonical total order (char p: by code; char 0: by value)
  int cmp(const FieldElem& o) const;
  bool operator<(const FieldElem& o) const { return cmp(o) < 0; }

  std::uint64_t code() const;       // char p only
  std::uint32_t coeff(std::uint32_t i) const;
  const Rat& rat() const;           // char 0 only

  // multiplicative order (char p, nonzero)
  Int mult_order() const;

  std::string str() const;

 private:
  FieldDesc f_;
  std::array<std::uint32_t, 4> c_{};  // char p residue coefficients
  Rat q_;                             // char 0 value

  void check_same(const FieldElem& o) const;
};

// all q elements of F_{p^k}, in code order
std::vector<FieldElem> enumerate_field(const FieldDesc& f);

// smallest generator of F_{p^k}^x in code order
FieldElem primitive_element(const FieldDesc& f);

}  // namespace modpic
