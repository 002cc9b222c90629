#include "modpic/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace modpic {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
}

std::string Cache::default_dir() {
  if (const char* env = std::getenv("MODPIC_CACHE")) return env;
  return ".modpic-cache";
}

std::string Cache::path_for(const std::string& key_payload) const {
  std::ostringstream os;
  os << dir_ << "/" << std::hex << fnv1a64(key_payload) << ".json";
  return os.str();
}

std::optional<std::string> Cache::get(const std::string& key_payload) const {
  std::ifstream in(path_for(key_payload));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (!j.is_object() || !j.contains("key") || !j.contains("checksum") || !j.contains("value"))
      throw std::runtime_error("missing fields");
    if (j["key"].get<std::string>() != key_payload) return std::nullopt;  // hash collision
    std::string value = j["value"].get<std::string>();
    std::ostringstream ck;
    ck << std::hex << fnv1a64(value);
    if (j["checksum"].get<std::string>() != ck.str())
      throw std::runtime_error("checksum mismatch");
    return value;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring corrupt cache entry " << path_for(key_payload) << " ("
              << e.what() << ")\n";
    return std::nullopt;
  }
}

void Cache::put(const std::string& key_payload, const std::string& value) const {
  nlohmann::ordered_json j;
  j["key"] = key_payload;
  std::ostringstream ck;
  ck << std::hex << fnv1a64(value);
  j["checksum"] = ck.str();
  j["value"] = value;
  std::string tmp = path_for(key_payload) + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // caching is best-effort
    out << j.dump(2) << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_for(key_payload), ec);
}

}  // namespace modpic
