#include "adlvkit/reduction_tree.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "adlvkit/errors.hpp"

namespace adlv {

std::vector<int> seed_order(int num_simple, std::uint64_t seed) {
  std::vector<int> order(num_simple);
  std::iota(order.begin(), order.end(), 0);
  if (seed == 0) return order;
  std::mt19937_64 rng(seed);
  for (int i = num_simple - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

std::optional<ReductionMove> find_reduction_move(const AffineWeyl& g, const AffineElement& w,
                                                 std::uint64_t seed, std::size_t cap) {
  const std::vector<int> order = seed_order(g.num_simple(), seed);
  std::vector<AffineElement> members{w};
  std::vector<int> parent{-1}, via{-1};
  std::unordered_map<AffineElement, int, AffineElementHash> seen{{w, 0}};
  const int l = g.length(w);
  for (std::size_t head = 0; head < members.size(); ++head) {
    const AffineElement cur = members[head];
    std::vector<AffineElement> level;
    std::vector<int> level_via;
    for (int i : order) {
      const AffineElement y = g.multiply(g.left_simple(i, cur), g.simple(g.sigma_index(i)));
      const int d = g.length(y) - l;
      if (d == -2) {
        ReductionMove m{cur, i, {}};
        for (int k = static_cast<int>(head); parent[k] >= 0; k = parent[k])
          m.shifts.push_back(via[k]);
        std::reverse(m.shifts.begin(), m.shifts.end());
        return m;
      }
      if (d != 0 && d != 2)
        throw InvariantViolation("double move changed length by " + std::to_string(d));
      if (d == 0) {
        level.push_back(y);
        level_via.push_back(i);
      }
    }
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (!seen.emplace(level[k], static_cast<int>(members.size())).second) continue;
      if (members.size() >= cap) throw CapExceeded("shift-class search", cap);
      members.push_back(level[k]);
      parent.push_back(static_cast<int>(head));
      via.push_back(level_via[k]);
    }
  }
  return std::nullopt;
}

const std::optional<ReductionMove>& MoveCache::get(const AffineWeyl& g, const AffineElement& w,
                                                   std::uint64_t seed, std::size_t cap) {
  auto& table = by_seed_[seed];
  auto it = table.find(w);
  if (it != table.end()) return it->second;
  return table.emplace(w, find_reduction_move(g, w, seed, cap)).first->second;
}

std::size_t MoveCache::size() const {
  std::size_t n = 0;
  for (const auto& [seed, table] : by_seed_) n += table.size();
  return n;
}

std::vector<int> ReductionTree::endpoints() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (this->out[k].empty()) out.push_back(static_cast<int>(k));
  return out;
}

ReductionTree build_tree(const AffineWeyl& g, const AffineElement& w, std::uint64_t seed,
                         std::size_t cap, MoveCache* cache) {
  MoveCache local;
  MoveCache& moves = cache ? *cache : local;
  ReductionTree t;
  t.seed = seed;
  std::unordered_map<AffineElement, int, AffineElementHash> index;
  auto node_of = [&](const AffineElement& x, std::vector<int>& todo) {
    auto [it, fresh] = index.emplace(x, static_cast<int>(t.nodes.size()));
    if (fresh) {
      t.nodes.push_back(x);
      t.out.emplace_back();
      todo.push_back(it->second);
    }
    return it->second;
  };
  std::vector<int> todo;
  node_of(w, todo);
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    const auto& move = moves.get(g, t.nodes[v], seed, cap);
    if (!move) continue;
    const AffineElement& sa = g.simple(move->index);
    const AffineElement& ssa = g.simple(g.sigma_index(move->index));
    const AffineElement child1 = g.multiply(move->w_prime, ssa);
    const AffineElement child2 = g.multiply(sa, child1);
    const int c1 = node_of(child1, todo);
    const int c2 = node_of(child2, todo);
    t.out[v].push_back(static_cast<int>(t.edges.size()));
    t.edges.push_back({v, c1, EdgeKind::I, move->shifts, move->index});
    t.out[v].push_back(static_cast<int>(t.edges.size()));
    t.edges.push_back({v, c2, EdgeKind::II, move->shifts, move->index});
  }
  return t;
}

std::vector<ReductionPath> enumerate_paths(const AffineWeyl& g, const ReductionTree& tree) {
  std::unordered_map<int, ClassInvariant> end_class;
  for (int e : tree.endpoints()) end_class.emplace(e, class_invariant(g, tree.nodes[e]));
  std::vector<ReductionPath> out;
  ReductionPath cur;
  auto walk = [&](auto&& self, int node) -> void {
    if (tree.is_endpoint(node)) {
      ReductionPath p = cur;
      p.end_node = node;
      p.end_class = end_class.at(node);
      out.push_back(std::move(p));
      return;
    }
    for (int e : tree.out[node]) {
      const TreeEdge& edge = tree.edges[e];
      cur.edges.push_back(e);
      (edge.kind == EdgeKind::I ? cur.count_I : cur.count_II) += 1;
      self(self, edge.to);
      (edge.kind == EdgeKind::I ? cur.count_I : cur.count_II) -= 1;
      cur.edges.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

BgwMap group_paths(std::vector<ReductionPath> paths) {
  BgwMap m;
  for (auto& p : paths) m[p.end_class].push_back(std::move(p));
  return m;
}

BgwMap bgw(const AffineWeyl& g, const AffineElement& w, std::uint64_t seed, std::size_t cap) {
  return group_paths(enumerate_paths(g, build_tree(g, w, seed, cap)));
}

}  // namespace adlv
