#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modpic/ratfunc.hpp"

namespace modpic {

// Effective divisor D = sum n_i [P_i] on the ambient curve; may be empty.
class Modulus {
 public:
  explicit Modulus(const Curve& c) : curve_(c) {}
  Modulus(const Curve& c, std::vector<std::pair<Place, unsigned>> comps);

  const Curve& curve() const { return curve_; }
  const std::vector<std::pair<Place, unsigned>>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }
  std::size_t num_components() const { return comps_.size(); }

  bool contains(const Place& p) const;
  unsigned multiplicity(const Place& p) const;  // 0 when p is not in the support
  Modulus reduced() const;
  bool is_reduced() const;
  long long degree() const;  // sum n_i deg(P_i)

  bool operator==(const Modulus& o) const;
  std::string str() const;

 private:
  Curve curve_;
  std::vector<std::pair<Place, unsigned>> comps_;  // sorted by place, multiplicities >= 1
};

// 0-cycle sum m_i [P_i] with nonzero integer coefficients.
class ZeroCycle {
 public:
  explicit ZeroCycle(const Curve& c) : curve_(c) {}
  ZeroCycle(const Curve& c, std::vector<std::pair<Place, Int>> support);

  const Curve& curve() const { return curve_; }
  const std::vector<std::pair<Place, Int>>& support() const { return supp_; }
  bool is_zero() const { return supp_.empty(); }
  Int degree() const;
  Int coefficient(const Place& p) const;

  ZeroCycle operator+(const ZeroCycle& o) const;
  ZeroCycle operator-(const ZeroCycle& o) const;
  ZeroCycle operator*(const Int& n) const;
  bool operator==(const ZeroCycle& o) const;

  bool meets(const Modulus& d) const;  // support intersects |D|
  std::string str() const;

 private:
  Curve curve_;
  std::vector<std::pair<Place, Int>> supp_;  // sorted by place, coefficients != 0
  void normalize();
};

// f == 1 along D: v_P(f - 1) >= n for every component (P, n). The empty
// modulus accepts every nonzero f.
bool in_modulus_group(const RationalFunction& f, const Modulus& d);

// div(f) = sum v_P(f) [P]; on an elliptic curve the valuation audit runs over
// all rational points, and a nonzero degree defect means the divisor needs
// places outside the rational-point model.
ZeroCycle divisor_of(const RationalFunction& f);

// A finite cover phi: P1 -> P1 given by a nonconstant rational function in s.
// Norm of g along the cover, computed as a resultant against the minimal
// polynomial A(Y) - t B(Y) of s over the target function field; satisfies
// div(Norm g) = phi_* div(g).
RationalFunction norm_along_cover(const RationalFunction& phi, const RationalFunction& g,
                                  const Curve& target);

// place of the target below a source place, with its residue degree
std::pair<Place, unsigned> image_place(const RationalFunction& phi, const Place& q,
                                       const Curve& target);

// phi^* D = sum over Q above P of e(Q|P) n_P [Q]
Modulus modulus_pullback(const RationalFunction& phi, const Modulus& d, const Curve& source);

// phi_* z, pushing [Q] to [kappa(Q):kappa(P)] [P]
ZeroCycle pushforward_cycle(const RationalFunction& phi, const ZeroCycle& z, const Curve& target);

}  // namespace modpic
