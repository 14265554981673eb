#include "quadpow/cli/cache.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "quadpow/cli/records.hpp"

namespace quadpow::cli {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::default_dir() {
  if (const char* env = std::getenv("QUADPOW_CACHE_DIR"); env && *env) return env;
  return ".quadpow-cache";
}

fs::path ResultCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ / name;
}

std::optional<nlohmann::json> ResultCache::load(const std::string& key) {
  std::ifstream file(path_for(key));
  if (file) {
    const auto entry = nlohmann::json::parse(file, nullptr, false);
    if (!entry.is_discarded() && entry.is_object() && entry.value("schema_version", -1) == kSchemaVersion &&
        entry.value("key", "") == key && entry.contains("value")) {
      ++hits_;
      return entry.at("value");
    }
  }
  ++misses_;
  return std::nullopt;
}

void ResultCache::store(const std::string& key, const nlohmann::ordered_json& value) {
  fs::create_directories(dir_);
  nlohmann::ordered_json entry;
  entry["schema_version"] = kSchemaVersion;
  entry["key"] = key;
  entry["value"] = value;
  const auto target = path_for(key);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "."
         << std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path temp = target;
  temp += suffix.str();
  {
    std::ofstream file(temp, std::ios::trunc);
    file << entry.dump() << "\n";
    if (!file) throw std::runtime_error("cannot write cache entry " + temp.string());
  }
  fs::rename(temp, target);
}

}  // namespace quadpow::cli
