#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "modpic/intmatrix.hpp"

namespace modpic {

// Finitely generated abelian group in invariant-factor form:
// d_1 | d_2 | ... | d_r, every d_i >= 2.
struct FinAbGroup {
  std::vector<Int> invariant_factors;

  bool is_trivial() const { return invariant_factors.empty(); }
  Int order() const;
  Int exponent() const;  // largest invariant factor (1 if trivial)
  bool operator==(const FinAbGroup& o) const = default;
  std::string str() const;
};

// direct sum, renormalized into a single invariant chain
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// p-primary part and prime-to-p part
FinAbGroup p_part(const FinAbGroup& g, const Int& p);
FinAbGroup prime_to_p_part(const FinAbGroup& g, const Int& p);

// Cokernel of Z^rows -> Z^generators given by the relation matrix (each row
// is one relation). Invariant factors equal to 1 are dropped.
struct GroupFromRelations {
  long long free_rank = 0;
  FinAbGroup finite;
};
GroupFromRelations group_from_relations(std::size_t generators, const IntMatrix& relations);

// Structure of a finite abelian group given as indices 0..n-1 with a
// multiplication closure. Generators are selected greedily by maximal
// order; the relation lattice of the resulting filtration goes through
// Smith normal form.
class EnumeratedGroup {
 public:
  using Mul = std::function<std::size_t(std::size_t, std::size_t)>;

  // Runs the structure computation; throws MalformedGroupError when the
  // seeded spot checks reject the multiplication.
  EnumeratedGroup(std::size_t size, Mul mul, std::size_t identity);

  const FinAbGroup& structure() const { return group_; }
  std::size_t size() const { return n_; }
  std::size_t identity() const { return id_; }

  // witness element for each invariant factor
  const std::vector<std::size_t>& generators() const { return inv_gens_; }

  // coordinates of an element w.r.t. the invariant-factor generators,
  // reduced modulo the factors
  std::vector<Int> coords(std::size_t element) const;

  std::size_t mul(std::size_t a, std::size_t b) const { return mul_(a, b); }
  std::size_t power(std::size_t a, Int e) const;
  Int element_order(std::size_t a) const;

 private:
  std::size_t n_;
  Mul mul_;
  std::size_t id_;
  FinAbGroup group_;
  std::vector<std::size_t> greedy_gens_;
  std::vector<Int> greedy_index_;         // e_i: index of gen i over the previous subgroup
  std::vector<std::uint64_t> dlog_;       // mixed-radix code of greedy coords, ~0 = unseen
  IntMatrix v_;                           // from the SNF of the relation lattice
  std::vector<Int> dfull_;                // full diagonal, including 1 entries
  std::vector<std::size_t> kept_;         // diagonal positions with d > 1
  std::vector<std::size_t> inv_gens_;

  void spot_check() const;
  std::vector<Int> greedy_coords(std::size_t element) const;
};

}  // namespace modpic
