#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace adlv {

// Hex SHA-256 of the text.
std::string sha256_hex(const std::string& text);

// Content-addressed store of rendered reports. Files are written once via a
// temporary name and an atomic rename; concurrent writers of the same key write
// identical bytes, so the last rename wins harmlessly.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // Key material: every input that changes the report bytes.
  static std::string key(const std::string& kind, const std::string& datum,
                         const std::string& element, const std::vector<std::uint64_t>& seeds,
                         std::size_t cap_bfs, std::size_t cap_enum);

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& content) const;

  // Deterministic choice of entries to recompute; fraction in [0, 1].
  static bool sampled(const std::string& key, double fraction);

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

// ADLVKIT_CACHE if set and nonempty, else the flag value.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace adlv
