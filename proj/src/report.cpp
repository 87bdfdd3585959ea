#include "adlvkit/report.hpp"

#include <sstream>

namespace adlv {

using nlohmann::ordered_json;

namespace {

ordered_json rational_vec(const RationalVec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

ordered_json int_list(const std::vector<int>& v) {
  ordered_json a = ordered_json::array();
  for (int x : v) a.push_back(x);
  return a;
}

std::string braces(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ordered_json class_to_json(const ClassInvariant& c) {
  ordered_json j;
  j["newton"] = rational_vec(c.newton);
  ordered_json k = ordered_json::array();
  for (auto x : c.kottwitz) k.push_back(x);
  j["kottwitz"] = k;
  j["pairing_2rho"] = to_string(c.pairing_2rho);
  return j;
}

ordered_json bgw_to_json(const AffineWeyl&, const ClassificationReport& r) {
  ordered_json j;
  j["b_min"] = class_to_json(r.b_min);
  j["b_max"] = class_to_json(r.b_max);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o;
    o["class"] = class_to_json(row.cls);
    o["defect"] = row.defect;
    ordered_json paths = ordered_json::array();
    ordered_json deltas = ordered_json::array();
    for (const auto& [a, b] : row.path_counts) {
      paths.push_back({a, b});
      deltas.push_back({to_string(Rational(a) - row.ell1), to_string(Rational(b) - row.ell2)});
    }
    o["paths"] = paths;
    o["ell1"] = to_string(row.ell1);
    o["ell2"] = to_string(row.ell2);
    o["dim"] = to_string(row.dim);
    o["ell1_orbit_difference"] = row.ell1_orbit_diff;
    o["tree_dim"] = row.tree_dim;
    o["delta_paths"] = deltas;
    o["delta_dim"] = to_string(Rational(row.tree_dim) - row.dim);
    o["chain_to_max"] = row.chain_to_max;
    if (row.essential_gap_to_max)
      o["essential_gap_to_max"] = *row.essential_gap_to_max;
    else
      o["essential_gap_to_max"] = nullptr;
    o["shape"] = row.shape;
    rows.push_back(std::move(o));
  }
  j["rows"] = rows;
  return j;
}

ordered_json report_to_json(const AffineWeyl& g, const ClassificationReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kCodeVersion;
  j["datum"] = r.datum;
  j["element"] = r.element;
  j["word"] = r.word;
  j["length"] = r.length;

  ordered_json ml;
  ml["value"] = r.min_len;
  ml["shifts"] = int_list(r.min_len_certificate.shifts);
  ml["decreasing_index"] = r.min_len_certificate.decreasing_index;
  ml["shorter"] = r.min_len_certificate.shorter ? ordered_json(g.format(*r.min_len_certificate.shorter))
                                                : ordered_json(nullptr);
  j["min_len"] = ml;
  j["straight"] = r.straight;
  j["class"] = class_to_json(r.own_class);
  j["reflection_length"] = r.reflection_length;

  if (r.min_cox) {
    const auto& m = *r.min_cox;
    ordered_json w;
    w["K"] = int_list(m.K);
    w["x"] = g.format_word(m.x);
    w["c_K"] = g.format_word(m.c_K);
    w["c_word"] = int_list(m.c_word);
    w["member"] = g.format(m.member);
    w["shifts"] = int_list(m.shifts);
    j["minimal_coxeter_type"] = w;
  } else {
    j["minimal_coxeter_type"] = nullptr;
  }
  j["strong_multiplicity_one"] = r.smo;
  j["geometric_coxeter_type"] = r.geometric_coxeter;
  j["formulas_guaranteed"] = r.geometric_coxeter;

  ordered_json seeds = ordered_json::array();
  for (const auto& s : r.seeds) {
    ordered_json o;
    o["seed"] = s.seed;
    o["nodes"] = s.nodes;
    o["paths"] = s.paths;
    o["strong_multiplicity_one"] = s.smo;
    o["endpoints_minimal_coxeter"] = s.endpoints_min_cox;
    ordered_json bad = ordered_json::array();
    for (const auto& e : s.non_min_cox_endpoints) bad.push_back(e);
    o["non_minimal_coxeter_endpoints"] = bad;
    seeds.push_back(std::move(o));
  }
  j["seeds"] = seeds;
  j["bgw"] = bgw_to_json(g, r);

  ordered_json pur;
  pur["saturated"] = r.purity.saturated;
  ordered_json missing = ordered_json::array();
  for (const auto& c : r.purity.missing) missing.push_back(class_to_json(c));
  pur["missing"] = missing;
  ordered_json helpers = ordered_json::array();
  for (const auto& h : r.purity.helpers) {
    ordered_json o;
    o["node"] = h.node;
    o["applicable"] = h.applicable;
    o["min_follows_type_II"] = h.min_follows_type_II;
    o["max_follows_type_I"] = h.max_follows_type_I;
    o["single_orbit_drop"] = h.single_orbit_drop;
    helpers.push_back(std::move(o));
  }
  pur["helpers"] = helpers;
  j["purity"] = pur;

  ordered_json mct;
  mct["lhs"] = to_string(r.mct.lhs);
  mct["rhs"] = to_string(r.mct.rhs);
  mct["slack"] = to_string(r.mct.slack);
  mct["equality"] = r.mct.equality;
  j["coxeter_bound"] = mct;

  ordered_json f = ordered_json::array();
  for (const auto& s : r.findings) f.push_back(s);
  j["findings"] = f;
  return j;
}

std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string render_bgw_table(const ClassificationReport& r) {
  std::ostringstream out;
  out << "class                              def  paths          ell1 ell2 dim  tree_dim chain shape\n";
  for (const auto& row : r.rows) {
    std::string paths;
    for (const auto& [a, b] : row.path_counts)
      paths += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    std::string cls = describe(row.cls);
    cls.resize(std::max<std::size_t>(cls.size(), 34), ' ');
    std::string p = paths;
    p.resize(std::max<std::size_t>(p.size(), 14), ' ');
    out << cls << " " << row.defect << "    " << p << " " << to_string(row.ell1) << "    "
        << to_string(row.ell2) << "    " << to_string(row.dim) << "    " << row.tree_dim
        << "        " << row.chain_to_max << "     " << row.shape << "\n";
  }
  return out.str();
}

std::string render_report_table(const AffineWeyl& g, const ClassificationReport& r) {
  std::ostringstream out;
  out << "datum            " << r.datum << "\n"
      << "element          " << r.element << "\n"
      << "word             " << r.word << "\n"
      << "length           " << r.length << "\n"
      << "class            " << describe(r.own_class) << "\n"
      << "min-len          " << yes_no(r.min_len) << "\n"
      << "straight         " << yes_no(r.straight) << "\n"
      << "refl. length     " << r.reflection_length << "\n";
  if (r.min_cox)
    out << "min. Coxeter     K=" << braces(r.min_cox->K) << " x=" << g.format_word(r.min_cox->x)
        << " c_K=" << g.format_word(r.min_cox->c_K) << "\n";
  else
    out << "min. Coxeter     no\n";
  out << "mult. one        " << yes_no(r.smo) << "\n"
      << "geom. Coxeter    " << yes_no(r.geometric_coxeter) << "\n"
      << "Coxeter bound    " << to_string(r.mct.lhs) << " >= " << to_string(r.mct.rhs)
      << " (slack " << to_string(r.mct.slack) << ")\n"
      << "saturated        " << yes_no(r.purity.saturated) << "\n"
      << "seeds            " << r.seeds.size() << "\n\n"
      << render_bgw_table(r);
  for (const auto& f : r.findings) out << "finding: " << f << "\n";
  return out.str();
}

std::string scan_header() {
  return "element\tlength\tmin_len\tstraight\tmin_cox\tgeo_cox\tclasses\tslack\n";
}

std::string scan_row(const ordered_json& j) {
  std::ostringstream out;
  std::string mc = "no";
  if (!j["minimal_coxeter_type"].is_null()) {
    std::vector<int> K = j["minimal_coxeter_type"]["K"].get<std::vector<int>>();
    mc = "K=" + braces(K);
  }
  out << j["word"].get<std::string>() << "\t" << j["length"].get<int>() << "\t"
      << yes_no(j["min_len"]["value"].get<bool>()) << "\t" << yes_no(j["straight"].get<bool>())
      << "\t" << mc << "\t" << yes_no(j["geometric_coxeter_type"].get<bool>()) << "\t"
      << j["bgw"]["rows"].size() << "\t" << j["coxeter_bound"]["slack"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace adlv
