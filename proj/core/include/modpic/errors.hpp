#pragma once

#include <stdexcept>
#include <string>

namespace modpic {

// Input could not be parsed or failed schema validation (CLI exit 2).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Computation refused because a size guardrail would be exceeded (CLI exit 3).
struct BoundsError : std::runtime_error {
  explicit BoundsError(const std::string& m) : std::runtime_error(m) {}
};

// A 0-cycle or base place collides with the modulus support (CLI exit 4).
struct SupportError : std::runtime_error {
  explicit SupportError(const std::string& m) : std::runtime_error(m) {}
};

// An enumerated multiplication table failed the abelian-group spot checks.
struct MalformedGroupError : std::runtime_error {
  explicit MalformedGroupError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace modpic
