#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "modpic/modulus.hpp"

namespace modpic {

// A (curve, modulus) pair read from the JSON pair format. Schema-validated
// before any computation; see schemas/pair.schema.json.
struct PairDescription {
  Curve curve;
  Modulus modulus;
  std::optional<Place> base;
  std::optional<std::uint64_t> seed;

  PairDescription(Curve c, Modulus m) : curve(std::move(c)), modulus(std::move(m)) {}

  // canonical re-serialization, used as the cache key payload
  std::string canonical_json() const;
};

PairDescription parse_pair_json(const std::string& text);
PairDescription parse_pair_file(const std::string& path);

// place tokens: "t+1" or "poly:t^2+1" (P1 finite), "inf", "pt:2,0", "O"
Place parse_place_token(const std::string& token, const Curve& c);

// arithmetic expression in t (P1) or x, y (elliptic) built from integer and
// rational literals with + - * / ^ and parentheses
RationalFunction parse_function_expression(const std::string& text, const Curve& c);

// signed sums of bracketed places and div(<function>) terms, e.g.
// "[t-1] - [t-2] + 2*[inf]" or "div((t-1)/(t-2))"
ZeroCycle parse_cycle_expression(const std::string& text, const Curve& c);

}  // namespace modpic
