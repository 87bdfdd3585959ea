#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "adlvkit/checks.hpp"
#include "adlvkit/corpus.hpp"
#include "adlvkit/reduction_tree.hpp"

using namespace adlv;

TEST_CASE("seed order") {
  for (int n : {2, 3, 5, 9}) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    CHECK(seed_order(n, 0) == id);
    for (std::uint64_t s = 1; s < 20; ++s) {
      auto o = seed_order(n, s);
      CHECK(o == seed_order(n, s));
      std::sort(o.begin(), o.end());
      CHECK(o == id);
    }
  }
}

TEST_CASE("rank one example") {
  auto g = AffineWeyl::make("A1");
  const auto w = g->parse("s0 s1 s0");
  const ReductionTree t = build_tree(*g, w, 0);
  CHECK(t.nodes.size() == 3);
  CHECK(t.edges.size() == 2);
  const BgwMap m = group_paths(enumerate_paths(*g, t));
  REQUIRE(m.size() == 2);
  std::map<std::string, std::pair<int, int>> counts;
  for (const auto& [c, paths] : m) {
    REQUIRE(paths.size() == 1);
    counts[describe(c)] = {paths[0].count_I, paths[0].count_II};
  }
  CHECK(counts["nu=(0) kappa=()"] == std::pair{0, 1});
  CHECK(counts["nu=(1) kappa=()"] == std::pair{1, 0});

  const ReductionTree single = build_tree(*g, g->parse("s1"), 0);
  CHECK(single.nodes.size() == 1);
  const std::string dot = export_tree_dot(*g, single);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 3);
}

TEST_CASE("structure of trees over a corpus") {
  for (const char* name : {"A2", "C2:sc", "G2:sc", "2A3:sc", "A3:gl"}) {
    CAPTURE(name);
    auto g = AffineWeyl::make(name);
    const auto corpus = enumerate_elements(*g, 5, omega_representatives(*g), 1'000'000);
    for (const auto& w : corpus) {
      std::multiset<std::string> first;
      for (std::uint64_t seed : {0, 1, 2}) {
        const ReductionTree t = build_tree(*g, w, seed);
        for (const auto& e : t.edges) {
          CHECK(g->length(t.nodes[e.to]) < g->length(t.nodes[e.from]));
          CHECK(replay_edge(*g, t, e).empty());
        }
        for (int v = 0; v < static_cast<int>(t.nodes.size()); ++v)
          CHECK(t.is_endpoint(v) == is_min_len(*g, t.nodes[v]).min_len);
        std::multiset<std::string> classes;
        for (const auto& p : enumerate_paths(*g, t)) {
          CHECK(g->length(w) == g->length(t.nodes[p.end_node]) + p.count_I + 2 * p.count_II);
          classes.insert(describe(p.end_class));
        }
        // the set of classes met does not depend on the tree
        std::set<std::string> as_set(classes.begin(), classes.end());
        if (seed == 0)
          first = classes;
        else
          CHECK(as_set == std::set<std::string>(first.begin(), first.end()));
      }
    }
  }
}

TEST_CASE("json round trip") {
  auto g = AffineWeyl::make("C2:sc");
  for (const char* text : {"s1 s2 s1 s0 s1", "s0 s1 s2 s1 s0", "s1 tau2", "1"}) {
    CAPTURE(text);
    for (std::uint64_t seed : {0, 4}) {
      const ReductionTree t = build_tree(*g, g->parse(text), seed);
      const std::string j = export_tree_json(*g, t);
      const ReductionTree back = import_tree_json(*g, j);
      CHECK(back.seed == t.seed);
      CHECK(back.nodes == t.nodes);
      REQUIRE(back.edges.size() == t.edges.size());
      for (std::size_t k = 0; k < t.edges.size(); ++k) {
        CHECK(back.edges[k].from == t.edges[k].from);
        CHECK(back.edges[k].to == t.edges[k].to);
        CHECK(back.edges[k].kind == t.edges[k].kind);
        CHECK(back.edges[k].witness_shifts == t.edges[k].witness_shifts);
        CHECK(back.edges[k].witness_index == t.edges[k].witness_index);
      }
      CHECK(export_tree_json(*g, back) == j);
    }
  }
}
