#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "adlvkit/conjugacy.hpp"

namespace adlv {

inline constexpr std::size_t kDefaultEnumBudget = 10'000'000;

struct ClassRecord {
  ClassInvariant invariant;
  AffineElement witness;  // straight representative
  int defect = 0;
};

// The partially ordered set of sigma-conjugacy classes, realised through straight
// representatives enumerated by length. Thread safe.
class BgPoset {
 public:
  explicit BgPoset(std::shared_ptr<const AffineWeyl> g,
                   std::size_t enum_budget = kDefaultEnumBudget);

  const AffineWeyl& group() const { return *g_; }

  bool leq(const ClassInvariant& a, const ClassInvariant& b) const;
  int defect(const ClassInvariant& c) const;
  // Length of maximal chains between a <= b.
  std::int64_t chain_length(const ClassInvariant& a, const ClassInvariant& b) const;
  std::int64_t essential_gap(const ClassInvariant& a, const ClassInvariant& b) const;

  // Straight classes with <nu, 2 rho> <= max_pairing, sorted. Without a filter every
  // Kottwitz value is visited, which needs finitely many of them.
  std::vector<ClassRecord> enumerate_straight(const Rational& max_pairing,
                                              const std::optional<KottwitzKey>& kottwitz) const;
  std::vector<ClassInvariant> interval(const ClassInvariant& lo, const ClassInvariant& hi) const;
  std::pair<ClassInvariant, ClassInvariant> extrema(const std::vector<ClassInvariant>& cs) const;

  // Witness-independence of the defect is checked on every straight element seen.
  std::size_t straight_elements_seen() const;

 private:
  struct Sweep {
    int explored = -1;  // all elements of length <= explored are processed
    std::vector<AffineElement> frontier;
    std::unordered_set<AffineElement, AffineElementHash> seen;
    std::map<ClassInvariant, ClassRecord> records;
  };
  void explore(Sweep& s, const KottwitzKey& key, int up_to) const;
  void check_same_datum(const ClassInvariant& a, const ClassInvariant& b) const;

  std::shared_ptr<const AffineWeyl> g_;
  std::size_t budget_;
  mutable std::mutex mu_;
  mutable std::map<KottwitzKey, Sweep> sweeps_;
  mutable std::size_t total_seen_ = 0;
  mutable std::size_t straight_seen_ = 0;
};

}  // namespace adlv
