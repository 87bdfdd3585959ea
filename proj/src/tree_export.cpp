#include <json.hpp>
#include <sstream>

#include "adlvkit/errors.hpp"
#include "adlvkit/reduction_tree.hpp"

namespace adlv {

using nlohmann::json;

std::string export_tree_json(const AffineWeyl& g, const ReductionTree& tree) {
  json j;
  j["seed"] = tree.seed;
  j["root"] = g.format(tree.root());
  json nodes = json::array();
  for (const auto& x : tree.nodes) nodes.push_back(g.format(x));
  j["nodes"] = nodes;
  json edges = json::array();
  for (const auto& e : tree.edges) {
    edges.push_back({{"from", g.format(tree.nodes[e.from])},
                     {"to", g.format(tree.nodes[e.to])},
                     {"kind", e.kind == EdgeKind::I ? "I" : "II"},
                     {"witness_shifts", e.witness_shifts},
                     {"witness_index", e.witness_index}});
  }
  j["edges"] = edges;
  return j.dump(2);
}

std::string export_tree_dot(const AffineWeyl& g, const ReductionTree& tree) {
  std::ostringstream os;
  os << "digraph reduction {\n";
  for (std::size_t k = 0; k < tree.nodes.size(); ++k) {
    os << "  n" << k << " [label=\"" << g.format_word(tree.nodes[k]) << "\"";
    if (tree.is_endpoint(static_cast<int>(k))) os << ", shape=box";
    os << "];\n";
  }
  for (const auto& e : tree.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\""
       << (e.kind == EdgeKind::I ? "I" : "II") << " s" << e.witness_index << "\"";
    if (e.kind == EdgeKind::II) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

ReductionTree import_tree_json(const AffineWeyl& g, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tree json: ") + e.what(), e.byte);
  }
  ReductionTree t;
  try {
    t.seed = j.at("seed").get<std::uint64_t>();
    std::unordered_map<AffineElement, int, AffineElementHash> index;
    for (const auto& n : j.at("nodes")) {
      const AffineElement x = g.parse(n.get<std::string>());
      if (!index.emplace(x, static_cast<int>(t.nodes.size())).second)
        throw ParseError("duplicate tree node", 0);
      t.nodes.push_back(x);
      t.out.emplace_back();
    }
    if (t.nodes.empty() || t.nodes.front() != g.parse(j.at("root").get<std::string>()))
      throw ParseError("tree root must be the first node", 0);
    for (const auto& e : j.at("edges")) {
      TreeEdge edge;
      edge.from = index.at(g.parse(e.at("from").get<std::string>()));
      edge.to = index.at(g.parse(e.at("to").get<std::string>()));
      const std::string kind = e.at("kind").get<std::string>();
      if (kind != "I" && kind != "II") throw ParseError("edge kind must be I or II", 0);
      edge.kind = kind == "I" ? EdgeKind::I : EdgeKind::II;
      edge.witness_shifts = e.at("witness_shifts").get<std::vector<int>>();
      edge.witness_index = e.at("witness_index").get<int>();
      t.out[edge.from].push_back(static_cast<int>(t.edges.size()));
      t.edges.push_back(std::move(edge));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("tree json: ") + e.what(), 0);
  } catch (const std::out_of_range&) {
    throw ParseError("tree json: edge refers to an unknown node", 0);
  }
  return t;
}

}  // namespace adlv
