#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modpic/modulus.hpp"
#include "modpic/rng.hpp"

namespace modpic {

// Randomized instance grid, fixed under the version tag below so acceptance
// runs are identical across machines. Mirrored in schemas/grid.v1.json.
struct Grid {
  static constexpr const char* kGridVersion = "grid-v1";
  static constexpr std::uint32_t kPrimes[3] = {2, 3, 5};
  static constexpr std::uint32_t kMaxExtension = 2;
  static constexpr long long kMaxModulusDegree = 8;
  // residue fields stay inside the shipped defining-polynomial table
  static constexpr std::uint32_t kMaxResidueDegree = 4;
  static constexpr unsigned kChar0MaxComponents = 3;
  static constexpr unsigned kChar0MaxMultiplicity = 4;
  // the two fixed elliptic curves over F_5: y^2 = x^3 + x and y^2 = x^3 + 1
  static constexpr std::uint32_t kEllipticPrime = 5;
};

struct Instance {
  Curve curve;
  Modulus modulus;
  std::string str() const;
};

// seeded draws from the grid; throws only if no admissible instance exists
Instance random_charp_instance(Rng& rng, bool require_nonreduced, bool allow_elliptic = true);
Instance random_elliptic_instance(Rng& rng, bool require_nonreduced);
Instance random_char0_instance(Rng& rng, bool require_nonreduced);

enum class Suite {
  PPrimary,
  Char0Divisible,
  KeyLem,
  KeyLemP,
  NormCompat,
  TorsionIso,
  LangOrders,
};

std::optional<Suite> suite_from_name(const std::string& name);
std::string suite_name(Suite s);
std::vector<std::string> all_suite_names();

// hook for the negative-path fixture in the tests
enum class TestCorruption { None, TorsionComparison };

struct TrialResult {
  std::uint64_t subseed = 0;
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  unsigned trials = 0;
  std::uint64_t seed = 0;
  std::string grid_version;
  std::string version;
  bool all_pass = false;
  std::vector<TrialResult> results;
  long long duration_ms = 0;  // reported out of band; not part of the JSON

  std::string to_json() const;  // byte-identical for identical (suite, seed, version)
  std::string to_text() const;
};

VerifyReport run_suite(Suite s, unsigned trials, std::uint64_t seed,
                       TestCorruption corruption = TestCorruption::None);

// replay a failure payload {"suite": ..., "subseed": ...}
VerifyReport replay_payload(const std::string& payload_json);

}  // namespace modpic
