#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlvkit/conjugacy.hpp"

namespace adlv {

// Order in which affine simple indices are tried, derived from the seed.
std::vector<int> seed_order(int num_simple, std::uint64_t seed);

struct ReductionMove {
  AffineElement w_prime;     // sigma-conjugate to w by length-preserving moves
  int index;                 // s_a with l(s_a w' sigma(s_a)) = l(w') - 2
  std::vector<int> shifts;   // moves from w to w_prime
};

// nullopt iff w has minimal length in its sigma-conjugacy class.
std::optional<ReductionMove> find_reduction_move(const AffineWeyl& g, const AffineElement& w,
                                                 std::uint64_t seed,
                                                 std::size_t cap = kDefaultBfsCap);

enum class EdgeKind { I, II };

struct TreeEdge {
  int from;
  int to;
  EdgeKind kind;
  std::vector<int> witness_shifts;
  int witness_index;
};

struct ReductionTree {
  std::uint64_t seed = 0;
  std::vector<AffineElement> nodes;  // nodes[0] is the root
  std::vector<TreeEdge> edges;
  std::vector<std::vector<int>> out;  // edge indices leaving each node

  const AffineElement& root() const { return nodes.front(); }
  bool is_endpoint(int node) const { return out[node].empty(); }
  std::vector<int> endpoints() const;
};

// Memo of reduction moves keyed by (element, seed); not thread safe.
class MoveCache {
 public:
  const std::optional<ReductionMove>& get(const AffineWeyl& g, const AffineElement& w,
                                          std::uint64_t seed, std::size_t cap);
  std::size_t size() const;

 private:
  std::unordered_map<std::uint64_t,
                     std::unordered_map<AffineElement, std::optional<ReductionMove>,
                                        AffineElementHash>>
      by_seed_;
};

ReductionTree build_tree(const AffineWeyl& g, const AffineElement& w, std::uint64_t seed,
                         std::size_t cap = kDefaultBfsCap, MoveCache* cache = nullptr);

struct ReductionPath {
  std::vector<int> edges;
  int end_node = 0;
  int count_I = 0;
  int count_II = 0;
  ClassInvariant end_class;
};

std::vector<ReductionPath> enumerate_paths(const AffineWeyl& g, const ReductionTree& tree);

// Classes met by X_w(b), each with the paths ending in it.
using BgwMap = std::map<ClassInvariant, std::vector<ReductionPath>>;
BgwMap group_paths(std::vector<ReductionPath> paths);
BgwMap bgw(const AffineWeyl& g, const AffineElement& w, std::uint64_t seed,
           std::size_t cap = kDefaultBfsCap);

std::string export_tree_json(const AffineWeyl& g, const ReductionTree& tree);
std::string export_tree_dot(const AffineWeyl& g, const ReductionTree& tree);
ReductionTree import_tree_json(const AffineWeyl& g, const std::string& text);

}  // namespace adlv
