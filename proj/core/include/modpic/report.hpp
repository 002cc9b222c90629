#pragma once

#include <string>

#include "modpic/pairdesc.hpp"
#include "modpic/picard.hpp"

namespace modpic {

// Structure report for a pair: rank, invariant factors, unipotent part,
// torsion split and the reduced-modulus comparison. Deterministic given
// (pair, base, version): identical inputs serialize byte-for-byte.
struct StructureReport {
  StructurePtr structure;
  StructurePtr reduced;
  UnipotentPart unipotent;
  TorsionDecomposition torsion;

  static StructureReport compute(const PairDescription& pair);

  std::string to_json() const;  // machine format
  std::string to_text() const;  // human format
};

struct ClassReport {
  ModulusClass cls;
  ModulusClass pi_image;
  bool in_unipotent = false;  // degree 0 and trivial image
  std::string cycle;

  static ClassReport compute(const PairDescription& pair, const ZeroCycle& z);

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace modpic
