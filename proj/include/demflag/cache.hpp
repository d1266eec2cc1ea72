#pragma once

#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace demflag {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a, printed as 16 hex digits.  Stable across runs and platforms.
inline std::string stable_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

/// Content-addressed store of serialized results, one file per key.  Writes go
/// to a temporary file in the same directory and are renamed into place.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// DEMAZURE_CACHE_DIR, else $XDG_CACHE_HOME/demflag, else ~/.cache/demflag.
  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("DEMAZURE_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "demflag";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "demflag";
    return std::filesystem::temp_directory_path() / "demflag-cache";
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

  std::optional<std::string> load(const std::string& key) const {
    const auto p = entry_path(key);
    std::error_code ec;
    if (!std::filesystem::exists(p, ec)) return std::nullopt;
    std::ifstream in(p);
    if (!in) throw CacheError("cannot read cache entry " + p.string());
    nlohmann::json entry;
    try {
      entry = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw CacheError("corrupt cache entry " + p.string() + ": " + e.what());
    }
    if (entry.value("key", "") != key) throw CacheError("cache entry " + p.string() + " has a mismatched key");
    return entry.at("output").get<std::string>();
  }

  void store(const std::string& key, const std::string& output) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw CacheError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    nlohmann::json entry{{"key", key}, {"created", now}, {"output", output}};

    std::random_device rd;
    const auto tmp = dir_ / (key + ".tmp." + std::to_string(rd()));
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw CacheError("cannot write " + tmp.string());
      out << entry.dump();
      if (!out) throw CacheError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, entry_path(key), ec);
    if (ec) {
      const std::string why = ec.message();
      std::filesystem::remove(tmp, ec);
      throw CacheError("cannot move cache entry into place: " + why);
    }
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace demflag
