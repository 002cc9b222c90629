#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modpic/abelian.hpp"
#include "modpic/localunits.hpp"
#include "modpic/modulus.hpp"

namespace modpic {

class GroupStructure;
using StructurePtr = std::shared_ptr<const GroupStructure>;

// Class of a 0-cycle. Char p: degree plus coordinates on the invariant
// generators of the finite part. Char 0: degree, torus ratios in (Q^x)^(r-1)
// and unipotent log coordinates in Q^(sum (n_i - 1)).
struct ModulusClass {
  bool char_p = true;
  Int degree = 0;
  std::vector<Int> finite;
  std::vector<Rat> torus;
  std::vector<Rat> unipotent;

  bool is_zero() const;
  bool operator==(const ModulusClass& o) const = default;
  std::string str() const;
};

struct UnipotentPart {
  bool char_p = true;
  std::vector<std::pair<Place, unsigned>> components;
  FinAbGroup group;           // char p
  Int order = 1;              // char p
  std::size_t dimension = 0;  // char 0
  bool certified = false;
};

struct TorsionDecomposition {
  bool char_p = true;
  FinAbGroup p_primary;
  FinAbGroup prime_to_p;
  FinAbGroup prime_to_p_reduced;  // same computation for D_red
  bool reduced_matches = false;   // prime-to-p parts coincide
  std::size_t sign_rank = 0;      // char 0: torsion = {+-1}^sign_rank
};

struct DivisibilityReport {
  Int n = 1;
  bool unipotent_divisible = false;
  // char p: invariant factors of the degree-0 part sharing a factor with n
  std::vector<Int> obstructed_factors;
  // char 0: the torus direction needs n-th roots in Q^x
  bool torus_obstructed = false;
  bool degree0_divisible() const { return obstructed_factors.empty() && !torus_obstructed; }
  std::string str() const;
};

// Pic(C,D) presented by explicit generators and relations resolved through
// Smith normal form: rank-1 degree part plus the finite part (char p) or the
// torus/unipotent data (char 0). Immutable once built; queries are safe to
// run concurrently.
class GroupStructure {
 public:
  static StructurePtr build(const Curve& c, const Modulus& d,
                            std::optional<Place> base = std::nullopt);

  const Curve& curve() const { return curve_; }
  const Modulus& modulus() const { return d_; }
  bool char_p() const { return charp_; }
  long long free_rank() const { return 1; }

  // char p data
  const FinAbGroup& finite_part() const { return finite_; }
  Int pic0_order() const { return pic0_order_; }

  // char 0 data
  std::size_t torus_rank() const { return torus_rank_; }
  std::size_t unipotent_dimension() const { return unip_dim_; }

  const ZeroCycle& base_cycle() const { return base_; }
  // the base as a single place, when it is one (used to rebuild companions)
  std::optional<Place> base_as_place() const;
  std::string base_description() const;
  std::vector<std::string> generator_descriptions() const;

  ModulusClass class_of(const ZeroCycle& z) const;

  UnipotentPart unipotent() const;

 private:
  friend class PiMap;
  GroupStructure(const Curve& c, const Modulus& d);

  struct PlaceData {
    Place place;
    unsigned level = 1;
    ResidueField rf;
    Poly kappa_gen;                        // primitive unit of kappa(P)
    Int kappa_order = 1;                   // |kappa(P)| - 1
    std::vector<std::uint32_t> kappa_dlog; // code -> exponent of kappa_gen
    std::shared_ptr<LocalUnitEngine> engine;  // level > 1 only
    int residue_gen = -1;                  // index into the concrete generator list
    std::vector<int> unit_gens;            // indices per engine invariant factor
  };

  Curve curve_;
  Modulus d_;
  bool charp_ = true;

  std::vector<PlaceData> places_;
  ZeroCycle base_;

  // elliptic bookkeeping
  std::vector<EPoint> points_;
  std::shared_ptr<EnumeratedGroup> jgroup_;
  std::vector<ZeroCycle> lift_cycles_;  // per invariant generator of E(F_q)
  std::vector<Int> lift_orders_;
  std::vector<int> lift_gens_;          // indices into the concrete generator list

  // presentation
  std::size_t num_gens_ = 0;
  IntMatrix v_, vinv_;
  std::vector<Int> dfull_;
  std::vector<std::size_t> kept_;
  FinAbGroup finite_;
  Int pic0_order_ = 1;

  // char 0
  std::size_t torus_rank_ = 0;
  std::size_t unip_dim_ = 0;

  void build_charp();
  void build_char0();
  void choose_base();
  std::optional<Place> base_override_;
  std::size_t point_index(const EPoint& p) const;
  // coordinates of a jet tuple of a function that is a unit along |D|
  std::vector<Int> concrete_coords_of_jets(const RationalFunction& h) const;
  std::vector<Int> reduce_coords(const std::vector<Int>& concrete) const;
  RationalFunction principal_witness(const ZeroCycle& c) const;
};

// --- operations in spec terms --------------------------------------------

StructurePtr picard_structure(const Curve& c, const Modulus& d,
                              std::optional<Place> base = std::nullopt);
ModulusClass class_of(const ZeroCycle& z, const StructurePtr& s);
UnipotentPart unipotent_part(const Curve& c, const Modulus& d);
TorsionDecomposition torsion_decomposition(const StructurePtr& s);
DivisibilityReport divisibility_check(const StructurePtr& s, const Int& n);

// The comparison map onto the reduced-modulus structure (curve-level Suslin
// homology). Identity on degrees, kills the unipotent coordinates.
class PiMap {
 public:
  PiMap(StructurePtr from, StructurePtr to);
  const StructurePtr& domain() const { return from_; }
  const StructurePtr& target() const { return to_; }
  ModulusClass apply(const ModulusClass& c) const;

 private:
  StructurePtr from_, to_;
  // image of each concrete generator of the domain in invariant coordinates
  // of the target (char p)
  std::vector<std::vector<Int>> gen_images_;
};

// Miller-style accumulation: an explicit function with div(h) = c for a
// principal cycle c on an elliptic curve (degree 0 and group-law sum O).
RationalFunction elliptic_principal_function(const Curve& e, const ZeroCycle& c);

}  // namespace modpic
