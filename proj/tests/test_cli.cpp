#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "adlvkit/cli.hpp"
#include "adlvkit/report.hpp"

using namespace adlv;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "adlvkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  return v;
}

fs::path fresh_dir(const char* tag) {
  const fs::path p = fs::temp_directory_path() / (std::string("adlvkit-test-") + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("classify produces a schema-tagged report") {
  const Run r = run({"--datum", "A1", "classify", "s0 s1 s0"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["element"] == "t(2) s1");
  CHECK(j["length"] == 3);
  CHECK(j["geometric_coxeter_type"] == true);
  CHECK(j["minimal_coxeter_type"].is_null());
  CHECK(j["bgw"]["rows"].size() == 2);
  CHECK(j["coxeter_bound"]["slack"] == "2");
  // global options may follow the subcommand
  const Run late = run({"classify", "s0 s1 s0", "--datum", "A1"});
  CHECK(late.code == kExitOk);
  CHECK(late.out == r.out);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"--datum", "C2:sc", "--seeds", "0-4", "classify",
                                      "s1 s2 s1 s0 s1"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  const Run t1 = run({"--datum", "C2:sc", "tree", "s1 s2 s1 s0 s1", "--format", "dot"});
  const Run t2 = run({"--datum", "C2:sc", "tree", "s1 s2 s1 s0 s1", "--format", "dot"});
  CHECK(t1.code == kExitOk);
  CHECK(t1.out == t2.out);
  CHECK(t1.out.rfind("digraph", 0) == 0);
}

TEST_CASE("usage errors") {
  const Run bad = run({"--datum", "A1", "classify", "bogus"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("element grammar") != std::string::npos);
  CHECK(run({"--datum", "Q7", "classify", "1"}).code == kExitUsage);
  CHECK(run({"classify", "1"}).code == kExitUsage);
  CHECK(run({"--datum", "A1"}).code == kExitUsage);
  CHECK(run({"--datum", "A1", "--seeds", "3-1", "classify", "1"}).code == kExitUsage);
  CHECK(run({"--datum", "A1", "scan", "--max-length", "1", "--filter", "odd"}).code == kExitUsage);
}

TEST_CASE("cache reuse and sampled verification") {
  const fs::path dir = fresh_dir("cache");
  const std::vector<std::string> args{"--datum", "G2:sc", "--cache", dir.string(),
                                      "--verify-fraction", "1", "classify", "s1 s2 s0"};
  const Run first = run(args);
  REQUIRE(first.code == kExitOk);
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) ++files;
  CHECK(files == 1);
  const Run second = run(args);
  CHECK(second.code == kExitOk);
  CHECK(second.out == first.out);
  // the environment variable overrides the flag
  const fs::path env_dir = fresh_dir("cache-env");
  setenv("ADLVKIT_CACHE", env_dir.c_str(), 1);
  const Run third = run(args);
  unsetenv("ADLVKIT_CACHE");
  CHECK(third.out == first.out);
  CHECK(fs::exists(env_dir));
  fs::remove_all(dir);
  fs::remove_all(env_dir);
}

TEST_CASE("scan") {
  // every length-zero element is of geometric Coxeter type
  for (const char* datum : {"A1:sc", "A3:gl", "2A3:sc", "C2:sc"}) {
    CAPTURE(datum);
    const Run r = run({"--datum", datum, "scan", "--max-length", "0", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto rows = json_lines(r.out);
    CHECK_FALSE(rows.empty());
    for (const auto& j : rows) {
      CHECK(j["length"] == 0);
      CHECK(j["geometric_coxeter_type"] == true);
    }
  }
  const Run straight = run({"--datum", "A2", "scan", "--max-length", "4", "--filter",
                            "straight-only", "--format", "json"});
  REQUIRE(straight.code == kExitOk);
  for (const auto& j : json_lines(straight.out)) CHECK(j["straight"] == true);

  const Run one = run({"--datum", "C2:sc", "--jobs", "1", "scan", "--max-length", "4"});
  const Run three = run({"--datum", "C2:sc", "--jobs", "3", "scan", "--max-length", "4"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == three.out);

  const Run capped = run({"--datum", "A2", "--cap-enum", "5", "scan", "--max-length", "4"});
  CHECK(capped.code == kExitCap);
  CHECK(capped.out.find("# budget exceeded") != std::string::npos);
}

TEST_CASE("check passes in rank one") {
  const Run r = run({"--datum", "A1", "check", "--max-length", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
