#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace modpic {

std::uint64_t fnv1a64(const std::string& data);

// Content-addressed JSON cache keyed by a canonical payload string (the pair
// description plus the library version). Entries carry a checksum of the
// stored value; anything that fails validation is ignored with a warning.
class Cache {
 public:
  explicit Cache(std::string dir);
  static std::string default_dir();  // MODPIC_CACHE or .modpic-cache

  const std::string& dir() const { return dir_; }
  std::optional<std::string> get(const std::string& key_payload) const;
  void put(const std::string& key_payload, const std::string& value) const;

 private:
  std::string dir_;
  std::string path_for(const std::string& key_payload) const;
};

}  // namespace modpic
