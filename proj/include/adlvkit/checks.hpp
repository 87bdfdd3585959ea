#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adlvkit/classifier.hpp"

namespace adlv {

// Names of the invariant suites, in report order.
namespace check {
inline constexpr const char* kPathCounts = "closed-path-counts";
inline constexpr const char* kDimension = "dimension-vs-tree";
inline constexpr const char* kSaturation = "saturation";
inline constexpr const char* kAdditivity = "reflection-length-additivity";
inline constexpr const char* kCoxeterBound = "coxeter-bound";
inline constexpr const char* kConservation = "length-conservation";
inline constexpr const char* kReplay = "certificate-replay";
inline constexpr const char* kSeedIndependence = "seed-independence";
inline constexpr const char* kIntegrality = "integrality";
inline constexpr const char* kChainIdentity = "ell2-chain-identity";
inline constexpr const char* kPurityGap = "purity-gap";
inline constexpr const char* kMinIsOwnClass = "b-min-is-own-class";
inline constexpr const char* kNoViolation = "no-invariant-violation";
}  // namespace check

struct CheckTally {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure messages
  void pass() { ++evaluated; }
  void fail(const std::string& msg);
  void merge(const CheckTally& o);
};

struct SuiteResult {
  std::string datum;
  std::size_t elements = 0;
  std::size_t geometric_coxeter = 0;
  std::size_t minimal_coxeter = 0;
  std::size_t cap_exceeded = 0;
  std::vector<CheckTally> checks;
  // Observations that never fail a run.
  std::size_t helper_nodes = 0;
  std::size_t helper_orbit_drop_failures = 0;
  std::size_t orbit_difference_mismatches = 0;
  std::vector<std::string> findings;

  const CheckTally& get(const std::string& name) const;
  bool passed() const;
};

struct SuiteOptions {
  std::vector<std::uint64_t> seeds = default_seeds();
  Caps caps;
  unsigned jobs = 1;
};

SuiteResult run_suite(std::shared_ptr<const AffineWeyl> g, const std::vector<AffineElement>& corpus,
                      const SuiteOptions& opt);

// Corpus used by check and scan: every element up to max_length in the cosets of
// the distinct tau_i.
std::vector<AffineElement> default_corpus(const AffineWeyl& g, int max_length,
                                          std::size_t budget);

// Replays a tree edge from its witness; empty string on success.
std::string replay_edge(const AffineWeyl& g, const ReductionTree& t, const TreeEdge& e);

// sigma-conjugate of minimal length reached along type II edges of the tree.
AffineElement min_len_conjugate(const ReductionTree& t);

std::string render_suite(const SuiteResult& r);

}  // namespace adlv
