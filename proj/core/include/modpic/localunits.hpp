#pragma once

#include <memory>
#include <optional>

#include "modpic/abelian.hpp"
#include "modpic/place.hpp"

namespace modpic {

// (1 + m_P)/(1 + m_P^n) in characteristic p, enumerated as dense codes over
// kappa(P) with truncated-series multiplication. Multiplication runs on
// residue-field index tables; the structure is computed on demand.
class LocalUnitEngine {
 public:
  LocalUnitEngine(const ResidueField& rf, unsigned level);

  const ResidueField& rf() const { return rf_; }
  unsigned level() const { return level_; }
  std::size_t size() const { return size_; }
  std::size_t identity() const { return 0; }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t power(std::size_t a, Int e) const;

  std::size_t from_series(const TruncSeries& s) const;  // constant term must be 1
  TruncSeries to_series(std::size_t code) const;

  const EnumeratedGroup& group() const;  // built lazily

 private:
  ResidueField rf_;
  unsigned level_;
  std::uint64_t q_;       // |kappa(P)|
  std::size_t size_;      // q^(level-1)
  std::vector<std::uint32_t> kmul_, kadd_;  // residue-field tables
  mutable std::shared_ptr<EnumeratedGroup> group_;

  std::vector<std::uint32_t> digits(std::size_t code) const;
  std::size_t encode(const std::vector<std::uint32_t>& d) const;
};

struct LocalUnitStructure {
  bool char_p = true;
  FinAbGroup group;           // char p
  Int order = 1;              // char p: |kappa|^(n-1)
  std::size_t dimension = 0;  // char 0: n - 1
};

// Lemma engine: finite p-group structure in char p, kappa(P)-vector-space
// dimension in char 0.
LocalUnitStructure local_unit_structure(const Place& p, unsigned level);

// log of a 1-unit, truncated below u^prec; characteristic 0 only
TruncSeries truncated_log(const TruncSeries& s);
// inverse of truncated_log on series of positive valuation
TruncSeries truncated_exp(const TruncSeries& w);

// smallest m with p^m >= n, so s^(p^m) = 1 mod m^n for every 1-unit s
unsigned p_power_exponent(std::uint32_t p, unsigned n);

// unique n-th root in (1+m)/(1+m^prec): char 0 via exp(log/n); char p via
// the inverse of n modulo the group exponent (requires gcd(n, p) = 1)
TruncSeries nth_root_in_quotient(const TruncSeries& s, const Int& n);

}  // namespace modpic
