#include "adlvkit/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "adlvkit/errors.hpp"
#include "adlvkit/report.hpp"

namespace adlv {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw UsageError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::string ResultCache::key(const std::string& kind, const std::string& datum,
                             const std::string& element, const std::vector<std::uint64_t>& seeds,
                             std::size_t cap_bfs, std::size_t cap_enum) {
  std::ostringstream s;
  s << kCodeVersion << '\n' << kReportSchema << '\n' << kind << '\n' << datum << '\n' << element
    << "\nseeds";
  for (auto x : seeds) s << ' ' << x;
  s << "\ncaps " << cap_bfs << ' ' << cap_enum << '\n';
  return sha256_hex(s.str());
}

fs::path ResultCache::path_for(const std::string& key) const {
  return dir_ / key.substr(0, 2) / (key + ".json");
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ResultCache::store(const std::string& key, const std::string& content) const {
  static std::atomic<unsigned long> counter{0};
  const fs::path target = path_for(key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  const fs::path tmp =
      target.parent_path() /
      (key + ".tmp." + std::to_string(::getpid()) + "." +
       std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
       std::to_string(counter.fetch_add(1)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot publish cache file " + target.string());
  }
}

bool ResultCache::sampled(const std::string& key, double fraction) {
  if (fraction <= 0) return false;
  if (fraction >= 1) return true;
  const unsigned long v = std::stoul(key.substr(0, 8), nullptr, 16);
  return static_cast<double>(v) < fraction * 4294967296.0;
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv("ADLVKIT_CACHE"); env && *env) return fs::path(env);
  if (flag && !flag->empty()) return fs::path(*flag);
  return std::nullopt;
}

}  // namespace adlv
