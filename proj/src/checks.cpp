#include "adlvkit/checks.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "adlvkit/corpus.hpp"
#include "adlvkit/errors.hpp"

namespace adlv {

namespace {

constexpr std::size_t kSamples = 5;

const std::vector<const char*>& check_names() {
  static const std::vector<const char*> names = {
      check::kPathCounts,  check::kDimension,        check::kSaturation,
      check::kAdditivity,  check::kCoxeterBound,     check::kConservation,
      check::kReplay,      check::kSeedIndependence, check::kIntegrality,
      check::kChainIdentity, check::kPurityGap,      check::kMinIsOwnClass,
      check::kNoViolation};
  return names;
}

SuiteResult empty_result() {
  SuiteResult r;
  for (const char* n : check_names()) r.checks.push_back(CheckTally{n, 0, 0, {}});
  return r;
}

CheckTally& tally(SuiteResult& r, const char* name) {
  for (auto& c : r.checks)
    if (c.name == name) return c;
  throw ContractError(std::string("unknown check ") + name);
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

// Witness additivity for one MinCoxWitness.
void check_additivity(const AffineWeyl& g, const MinCoxWitness& m, const std::string& where,
                      SuiteResult& out) {
  const RootDatum& d = g.datum();
  const int whole = reflection_length(d, m.member.finite, d.delta());
  const int outer = reflection_length(d, m.x.finite, d.delta());
  const int inner = parabolic_reflection_length(g, m.c_K, m.K, m.x);
  if (whole == outer + inner)
    tally(out, check::kAdditivity).pass();
  else
    tally(out, check::kAdditivity)
        .fail(where + ": " + std::to_string(whole) + " != " + std::to_string(outer) + " + " +
              std::to_string(inner));
}

void check_element(Classifier& cl, const AffineElement& w, const SuiteOptions& opt,
                   SuiteResult& out) {
  const AffineWeyl& g = cl.group();
  const BgPoset& poset = cl.poset();
  const std::string name = g.format_word(w);
  ClassificationReport r;
  try {
    r = cl.classify(w, opt.seeds);
    tally(out, check::kNoViolation).pass();
    tally(out, check::kIntegrality).pass();
  } catch (const IntegralityError& e) {
    tally(out, check::kIntegrality).fail(name + ": " + e.what());
    return;
  } catch (const InvariantViolation& e) {
    tally(out, check::kNoViolation).fail(name + ": " + e.what());
    return;
  }
  ++out.elements;
  if (r.min_cox) ++out.minimal_coxeter;
  for (const auto& f : r.findings) out.findings.push_back(name + ": " + f);

  // Per-seed structure: conservation, replay, witnesses at endpoints.
  const int len = g.length(w);
  std::map<ClassInvariant, long> base_multiset;
  for (std::size_t k = 0; k < opt.seeds.size(); ++k) {
    const ReductionTree& t = cl.tree(w, opt.seeds[k]);
    for (const auto& p : enumerate_paths(g, t)) {
      const int end_len = g.length(t.nodes[p.end_node]);
      if (len == end_len + p.count_I + 2 * p.count_II)
        tally(out, check::kConservation).pass();
      else
        tally(out, check::kConservation)
            .fail(name + " seed " + std::to_string(opt.seeds[k]) + ": length not conserved");
    }
    for (const auto& e : t.edges) {
      const std::string msg = replay_edge(g, t, e);
      if (msg.empty())
        tally(out, check::kReplay).pass();
      else
        tally(out, check::kReplay).fail(name + ": " + msg);
    }
    for (int e : t.endpoints()) {
      const MinLenResult m = is_min_len(g, t.nodes[e], opt.caps.bfs);
      if (m.min_len)
        tally(out, check::kReplay).pass();
      else
        tally(out, check::kReplay).fail(name + ": endpoint " + g.format_word(t.nodes[e]) +
                                        " admits a length decrease");
      if (const auto& wit = cl.min_cox(t.nodes[e]))
        check_additivity(g, *wit, g.format_word(t.nodes[e]), out);
    }
    std::map<ClassInvariant, long> ms;
    for (const auto& [c, a, b] : r.seeds[k].signature) ++ms[c];
    if (k == 0) {
      base_multiset = ms;
    } else if (r.smo) {
      if (ms == base_multiset)
        tally(out, check::kSeedIndependence).pass();
      else
        tally(out, check::kSeedIndependence)
            .fail(name + ": endpoint classes differ between seeds " +
                  std::to_string(opt.seeds[0]) + " and " + std::to_string(opt.seeds[k]));
    }
  }
  if (r.min_cox) check_additivity(g, *r.min_cox, name, out);

  // Coxeter bound, through the minimal length conjugate for non-minimal inputs.
  if (r.mct.slack >= Rational(0))
    tally(out, check::kCoxeterBound).pass();
  else
    tally(out, check::kCoxeterBound).fail(name + ": negative slack");
  const AffineElement m = min_len_conjugate(cl.tree(w, opt.seeds.front()));
  const MctInequality mm = cl.mct_inequality(m);
  if (mm.equality == cl.min_cox(m).has_value())
    tally(out, check::kCoxeterBound).pass();
  else
    tally(out, check::kCoxeterBound)
        .fail(name + ": bound equality at " + g.format_word(m) + " disagrees with the witness search");

  // Integrality of every comparable pair inside B(G)_w.
  for (const auto& a : r.rows)
    for (const auto& b : r.rows) {
      if (!poset.leq(a.cls, b.cls)) continue;
      try {
        poset.chain_length(a.cls, b.cls);
        poset.essential_gap(a.cls, b.cls);
        tally(out, check::kIntegrality).pass();
      } catch (const IntegralityError& e) {
        tally(out, check::kIntegrality).fail(name + ": " + e.what());
      }
    }

  if (!r.geometric_coxeter) return;
  ++out.geometric_coxeter;

  std::map<ClassInvariant, const ClassRow*> row_of;
  for (const auto& row : r.rows) row_of[row.cls] = &row;
  for (std::size_t k = 0; k < r.seeds.size(); ++k)
    for (const auto& [c, a, b] : r.seeds[k].signature) {
      const ClassRow* row = row_of.count(c) ? row_of[c] : nullptr;
      if (row && Rational(a) == row->ell1 && Rational(b) == row->ell2) {
        tally(out, check::kPathCounts).pass();
      } else {
        std::ostringstream s;
        s << name << " seed " << r.seeds[k].seed << " class " << describe(c) << ": path (" << a
          << "," << b << ")";
        if (row) s << " vs closed (" << to_string(row->ell1) << "," << to_string(row->ell2) << ")";
        tally(out, check::kPathCounts).fail(s.str());
      }
      if (row && a != row->ell1_orbit_diff) ++out.orbit_difference_mismatches;
    }

  const ClassRow* top = row_of.count(r.b_max) ? row_of[r.b_max] : nullptr;
  for (const auto& row : r.rows) {
    const std::string where = name + " class " + describe(row.cls);
    if (Rational(row.tree_dim) == row.dim)
      tally(out, check::kDimension).pass();
    else
      tally(out, check::kDimension)
          .fail(where + ": tree " + std::to_string(row.tree_dim) + " vs " + to_string(row.dim));
    for (const Rational* q : {&row.dim, &row.ell2}) {
      if (is_integer(*q) && *q >= Rational(0))
        tally(out, check::kIntegrality).pass();
      else
        tally(out, check::kIntegrality).fail(where + ": value " + to_string(*q));
    }
    if (row.ell2 == Rational(row.chain_to_max))
      tally(out, check::kChainIdentity).pass();
    else
      tally(out, check::kChainIdentity).fail(where);
    if (top && row.essential_gap_to_max &&
        row.dim - top->dim == Rational(*row.essential_gap_to_max))
      tally(out, check::kPurityGap).pass();
    else
      tally(out, check::kPurityGap).fail(where);
  }
  if (r.purity.saturated)
    tally(out, check::kSaturation).pass();
  else
    tally(out, check::kSaturation).fail(name + ": " + std::to_string(r.purity.missing.size()) +
                                        " classes missing from the interval");
  if (r.b_min == r.own_class)
    tally(out, check::kMinIsOwnClass).pass();
  else
    tally(out, check::kMinIsOwnClass).fail(name);
  for (const auto& h : r.purity.helpers) {
    if (!h.applicable) continue;
    ++out.helper_nodes;
    if (!h.single_orbit_drop) ++out.helper_orbit_drop_failures;
  }
}

void merge_into(SuiteResult& a, const SuiteResult& b) {
  a.elements += b.elements;
  a.geometric_coxeter += b.geometric_coxeter;
  a.minimal_coxeter += b.minimal_coxeter;
  a.cap_exceeded += b.cap_exceeded;
  for (std::size_t i = 0; i < a.checks.size(); ++i) a.checks[i].merge(b.checks[i]);
  a.helper_nodes += b.helper_nodes;
  a.helper_orbit_drop_failures += b.helper_orbit_drop_failures;
  a.orbit_difference_mismatches += b.orbit_difference_mismatches;
  a.findings.insert(a.findings.end(), b.findings.begin(), b.findings.end());
}

}  // namespace

void CheckTally::fail(const std::string& msg) {
  ++evaluated;
  ++failures;
  if (samples.size() < kSamples) samples.push_back(msg);
}

void CheckTally::merge(const CheckTally& o) {
  evaluated += o.evaluated;
  failures += o.failures;
  for (const auto& s : o.samples)
    if (samples.size() < kSamples) samples.push_back(s);
}

const CheckTally& SuiteResult::get(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw ContractError("unknown check " + name);
}

bool SuiteResult::passed() const {
  return cap_exceeded == 0 &&
         std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failures == 0; });
}

std::string replay_edge(const AffineWeyl& g, const ReductionTree& t, const TreeEdge& e) {
  AffineElement x = t.nodes[e.from];
  for (int i : e.witness_shifts) {
    const ShiftMove m = cyclic_shift(g, x, i);
    if (m.length_change != 0) return "witness shift changes the length";
    x = m.after;
  }
  const AffineElement& sa = g.simple(e.witness_index);
  const AffineElement& ssa = g.simple(g.sigma_index(e.witness_index));
  const AffineElement one = g.multiply(x, ssa);
  const AffineElement two = g.multiply(sa, one);
  const int l = g.length(x);
  if (g.length(two) != l - 2) return "witness index does not shorten by two";
  const AffineElement& expect = e.kind == EdgeKind::I ? one : two;
  if (!(expect == t.nodes[e.to])) return "edge target differs from the replayed child";
  return {};
}

AffineElement min_len_conjugate(const ReductionTree& t) {
  int v = 0;
  while (!t.is_endpoint(v)) {
    for (int e : t.out[v])
      if (t.edges[e].kind == EdgeKind::II) {
        v = t.edges[e].to;
        break;
      }
  }
  return t.nodes[v];
}

std::vector<AffineElement> default_corpus(const AffineWeyl& g, int max_length,
                                          std::size_t budget) {
  return enumerate_elements(g, max_length, omega_representatives(g), budget);
}

SuiteResult run_suite(std::shared_ptr<const AffineWeyl> g, const std::vector<AffineElement>& corpus,
                      const SuiteOptions& opt) {
  auto poset = std::make_shared<BgPoset>(g, opt.caps.enumeration);
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, corpus.size() ? corpus.size() : 1));
  // Per-element results merged in corpus order keep the output independent of scheduling.
  std::vector<SuiteResult> parts(corpus.size(), empty_result());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Classifier cl(g, poset, opt.caps);
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        check_element(cl, corpus[i], opt, parts[i]);
      } catch (const CapExceeded&) {
        ++parts[i].cap_exceeded;
      } catch (const InvariantViolation& e) {
        tally(parts[i], check::kNoViolation).fail(g->format_word(corpus[i]) + ": " + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SuiteResult total = empty_result();
  total.datum = g->datum().name();
  for (const auto& p : parts) merge_into(total, p);
  return total;
}

std::string render_suite(const SuiteResult& r) {
  std::ostringstream out;
  out << "datum " << r.datum << ": " << r.elements << " elements, " << r.minimal_coxeter
      << " minimal Coxeter type, " << r.geometric_coxeter << " geometric Coxeter type\n";
  for (const auto& c : r.checks) {
    out << (c.failures ? "FAIL " : "ok   ") << c.name << "  " << c.evaluated - c.failures << "/"
        << c.evaluated << "\n";
    for (const auto& s : c.samples) out << "       " << s << "\n";
  }
  if (r.cap_exceeded) out << "FAIL resource caps hit on " << r.cap_exceeded << " elements\n";
  out << "note helper nodes " << r.helper_nodes << ", single-orbit drop fails on "
      << r.helper_orbit_drop_failures << "\n";
  out << "note orbit-difference count disagrees with type I count on "
      << r.orbit_difference_mismatches << " paths\n";
  for (const auto& f : r.findings) out << "finding " << f << "\n";
  return out.str();
}

}  // namespace adlv
