#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace quadpow::cli {

// One JSON file per key. Entries written under another schema version, or
// whose stored key differs (hash collision), read as misses.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // $QUADPOW_CACHE_DIR, else ./.quadpow-cache.
  static std::filesystem::path default_dir();

  std::optional<nlohmann::json> load(const std::string& key);
  // Write to a temporary file, then rename over the entry.
  void store(const std::string& key, const nlohmann::ordered_json& value);

  std::filesystem::path path_for(const std::string& key) const;
  unsigned hits() const { return hits_; }
  unsigned misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::atomic<unsigned> hits_{0};
  std::atomic<unsigned> misses_{0};
};

}  // namespace quadpow::cli
