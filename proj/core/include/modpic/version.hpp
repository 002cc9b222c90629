#pragma once

namespace modpic {

inline constexpr const char* kVersion = "0.1.0";

// Bounds that keep every computation at desk scale. Enumerated unit
// groups are hard-capped at kMaxEnumeratedGroup elements; exhaustive
// invariant sweeps stay below kMaxSweepGroup.
inline constexpr unsigned long long kMaxEnumeratedGroup = 1000000ULL;
inline constexpr unsigned long long kMaxSweepGroup = 10000ULL;

}  // namespace modpic
