#include "adlvkit/classifier.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "adlvkit/errors.hpp"

namespace adlv {

std::vector<std::uint64_t> default_seeds() {
  std::vector<std::uint64_t> s(10);
  for (std::uint64_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

std::vector<std::vector<int>> spherical_subsets(const AffineWeyl& g) {
  const int n = g.num_simple();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) k.push_back(i);
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

void validate_subset(const AffineWeyl& g, const std::vector<int>& K) {
  if (static_cast<int>(K.size()) >= g.num_simple()) throw ContractError("K is not spherical");
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (K[i] < 0 || K[i] >= g.num_simple()) throw ContractError("index outside the affine diagram");
    if (i > 0 && K[i] <= K[i - 1]) throw ContractError("K must be sorted without repeats");
  }
}

std::optional<std::map<int, int>> twist_on(const AffineWeyl& g, const std::vector<int>& K,
                                           const AffineElement& x) {
  const AffineElement xinv = g.inverse(x);
  std::map<int, int> twist;
  for (int i : K) {
    const AffineElement conj =
        g.multiply(g.multiply(x, g.simple(g.sigma_index(i))), xinv);
    int found = -1;
    for (int j : K)
      if (g.simple(j) == conj) found = j;
    if (found < 0) return std::nullopt;
    twist[i] = found;
  }
  return twist;
}

// Reduced word of u in the generators K (left descents, smallest first); nullopt if u
// is outside W_K.
std::optional<std::vector<int>> word_in(const AffineWeyl& g, const AffineElement& u,
                                        const std::vector<int>& K) {
  std::vector<int> word;
  AffineElement cur = u;
  int l = g.length(cur);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : K) {
      AffineElement y = g.left_simple(i, cur);
      const int ly = g.length(y);
      if (ly < l) {
        word.push_back(i);
        cur = std::move(y);
        l = ly;
        moved = true;
        break;
      }
    }
  }
  if (cur != g.identity()) return std::nullopt;
  return word;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::optional<CosetDecomposition> coset_decompose(const AffineWeyl& g, const AffineElement& w,
                                                  const std::vector<int>& K) {
  validate_subset(g, K);
  CosetDecomposition d;
  d.x = w;
  int l = g.length(w);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : K) {
      AffineElement y = g.left_simple(i, d.x);
      const int ly = g.length(y);
      if (ly < l) {
        d.u_word.push_back(i);
        d.x = std::move(y);
        l = ly;
        moved = true;
        break;
      }
    }
  }
  d.u = g.from_word(d.u_word);
  for (int i : K)
    if (g.length(g.right_simple(d.x, g.sigma_index(i))) < l) return std::nullopt;
  auto twist = twist_on(g, K, d.x);
  if (!twist) return std::nullopt;
  d.twist = std::move(*twist);
  return d;
}

bool is_twisted_coxeter(const AffineWeyl& g, const AffineElement& u, const std::vector<int>& K,
                        const AffineElement& x) {
  validate_subset(g, K);
  const auto twist = twist_on(g, K, x);
  if (!twist) throw ContractError("x does not normalise K");
  const auto word = word_in(g, u, K);
  if (!word) throw ContractError("u is not in W_K");
  const std::set<int> support(word->begin(), word->end());
  std::set<int> left(K.begin(), K.end());
  std::size_t orbits = 0;
  while (!left.empty()) {
    int i = *left.begin();
    int hits = 0;
    while (left.erase(i)) {
      hits += static_cast<int>(support.count(i));
      i = twist->at(i);
    }
    ++orbits;
    if (hits != 1) return false;
  }
  return word->size() == orbits;
}

std::optional<MinCoxWitness> is_minimal_coxeter_type(const AffineWeyl& g, const AffineElement& w,
                                                     std::size_t cap) {
  if (!is_min_len(g, w, cap).min_len) throw ContractError("element is not of minimal length");
  const ShiftClass sc = shift_class(g, w, cap);
  for (const auto& K : spherical_subsets(g)) {
    for (std::size_t k = 0; k < sc.members.size(); ++k) {
      const auto d = coset_decompose(g, sc.members[k], K);
      if (!d || !is_straight(g, d->x)) continue;
      if (!is_twisted_coxeter(g, d->u, K, d->x)) continue;
      MinCoxWitness m;
      m.K = K;
      m.member = sc.members[k];
      m.x = d->x;
      m.c_K = d->u;
      m.c_word = *word_in(g, d->u, K);
      m.shifts = sc.path_to(static_cast<int>(k));
      return m;
    }
  }
  return std::nullopt;
}

int parabolic_reflection_length(const AffineWeyl& g, const AffineElement& u,
                                const std::vector<int>& K, const AffineElement& x) {
  const RootDatum& d = g.datum();
  std::vector<Vec> basis;
  for (int i : K) basis.push_back(i == 0 ? d.theta_coroot() : d.simple_coroot(i));
  const Mat twist = mat_mul(x.finite, d.delta(), d.dim());
  return reflection_length_on(d, u.finite, twist, basis);
}

Classifier::Classifier(std::shared_ptr<const AffineWeyl> g, std::shared_ptr<const BgPoset> poset,
                       Caps caps)
    : g_(std::move(g)), poset_(std::move(poset)), caps_(caps) {}

const std::optional<MinCoxWitness>& Classifier::min_cox(const AffineElement& w) {
  auto it = mct_memo_.find(w);
  if (it != mct_memo_.end()) return it->second;
  return mct_memo_.emplace(w, is_minimal_coxeter_type(*g_, w, caps_.bfs)).first->second;
}

const ReductionTree& Classifier::tree(const AffineElement& w, std::uint64_t seed) {
  auto& per_seed = tree_memo_[w];
  auto it = per_seed.find(seed);
  if (it != per_seed.end()) return it->second;
  return per_seed.emplace(seed, build_tree(*g_, w, seed, caps_.bfs, &moves_)).first->second;
}

bool Classifier::strong_multiplicity_one(const AffineElement& w, std::uint64_t seed,
                                         std::optional<ClassInvariant>* offender) {
  const auto paths = enumerate_paths(*g_, tree(w, seed));
  std::set<ClassInvariant> seen;
  for (const auto& p : paths)
    if (!seen.insert(p.end_class).second) {
      if (offender) *offender = p.end_class;
      return false;
    }
  return true;
}

bool Classifier::geometric_coxeter_type(const AffineElement& w,
                                        const std::vector<std::uint64_t>& seeds) {
  for (std::uint64_t s : seeds) {
    if (!strong_multiplicity_one(w, s)) return false;
    const ReductionTree& t = tree(w, s);
    for (int e : t.endpoints())
      if (!min_cox(t.nodes[e])) return false;
  }
  return true;
}

const BgwMap& Classifier::bgw_seed0(const AffineElement& w) {
  auto it = bgw_memo_.find(w);
  if (it != bgw_memo_.end()) return it->second;
  return bgw_memo_.emplace(w, group_paths(enumerate_paths(*g_, tree(w, 0)))).first->second;
}

namespace {

std::vector<ClassInvariant> keys_of(const BgwMap& m) {
  std::vector<ClassInvariant> out;
  for (const auto& [c, paths] : m) out.push_back(c);
  return out;
}

std::pair<ClassInvariant, ClassInvariant> extrema_or_violation(const BgPoset& p,
                                                               const std::vector<ClassInvariant>& cs) {
  try {
    return p.extrema(cs);
  } catch (const NoExtremum& e) {
    throw InvariantViolation(std::string("B(G)_w without extremal class: ") + e.what());
  }
}

}  // namespace

Classifier::Formulas Classifier::formulas(const AffineElement& w, const BgwMap& m,
                                          const ClassInvariant& c) {
  if (!m.count(c)) throw ContractError("class is not met by this element");
  const RootDatum& d = g_->datum();
  const int lr = reflection_length(d, w.finite, d.delta());
  const int def = poset_->defect(c);
  const int l = g_->length(w);
  const auto [lo, hi] = extrema_or_violation(*poset_, keys_of(m));
  Formulas f;
  f.dim = (Rational(l + lr - def) - c.pairing_2rho) / 2;
  f.ell2 = (Rational(l - lr + def) - c.pairing_2rho) / 2;
  f.ell1 = d.count_delta_orbits(d.vanishing_simple_roots(lo.newton)) -
           d.count_delta_orbits(d.vanishing_simple_roots(c.newton));
  std::vector<int> diff;
  const auto in_c = d.vanishing_simple_roots(c.newton);
  for (int i : d.vanishing_simple_roots(lo.newton))
    if (std::find(in_c.begin(), in_c.end(), i) == in_c.end()) diff.push_back(i);
  f.ell1_orbit_diff = d.count_delta_orbits(diff);
  return f;
}

Rational Classifier::dim_formula(const AffineElement& w, const ClassInvariant& c) {
  return formulas(w, bgw_seed0(w), c).dim;
}

std::pair<Rational, Rational> Classifier::ell_formulas(const AffineElement& w,
                                                       const ClassInvariant& c) {
  const Formulas f = formulas(w, bgw_seed0(w), c);
  return {f.ell1, f.ell2};
}

std::string Classifier::shape_for(const ReductionTree& t, const ReductionPath& p,
                                  const Formulas& f) {
  std::string dl = "DL(?)";
  if (const auto& m = min_cox(t.nodes[p.end_node]))
    dl = "DL(K={" + join(m->K) + "}, c=" + g_->format_word(m->c_K) + ")";
  return dl + " x Gm^" + to_string(f.ell1) + " x A^" + to_string(f.ell2);
}

std::string Classifier::shape(const AffineElement& w, const ClassInvariant& c) {
  const BgwMap& m = bgw_seed0(w);
  const Formulas f = formulas(w, m, c);
  return shape_for(tree(w, 0), m.at(c).front(), f);
}

std::vector<ClassInvariant> Classifier::classes_below(const ReductionTree& t, int node) {
  std::set<ClassInvariant> out;
  std::vector<int> stack{node};
  std::set<int> seen;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    if (t.is_endpoint(v)) out.insert(class_invariant(*g_, t.nodes[v]));
    for (int e : t.out[v]) stack.push_back(t.edges[e].to);
  }
  return {out.begin(), out.end()};
}

PurityReport Classifier::purity_report(const AffineElement& w) {
  const ReductionTree& t = tree(w, 0);
  const std::vector<ClassInvariant> met = keys_of(bgw_seed0(w));
  const auto [lo, hi] = extrema_or_violation(*poset_, met);
  PurityReport r;
  for (const auto& c : poset_->interval(lo, hi))
    if (!std::binary_search(met.begin(), met.end(), c)) r.missing.push_back(c);
  for (const auto& c : met)
    if (!(poset_->leq(lo, c) && poset_->leq(c, hi)))
      throw InvariantViolation("met class outside its own extremal interval");
  r.saturated = r.missing.empty();

  const RootDatum& d = g_->datum();
  auto saturated = [&](const std::vector<ClassInvariant>& cs) {
    const auto [a, b] = extrema_or_violation(*poset_, cs);
    return poset_->interval(a, b).size() == cs.size();
  };
  // Paths from each node, to test multiplicity one below it.
  std::vector<std::map<ClassInvariant, long>> counts(t.nodes.size());
  std::vector<bool> done(t.nodes.size(), false);
  std::function<const std::map<ClassInvariant, long>&(int)> count_from =
      [&](int v) -> const std::map<ClassInvariant, long>& {
    if (done[v]) return counts[v];
    std::map<ClassInvariant, long> acc;
    if (t.is_endpoint(v)) {
      acc[class_invariant(*g_, t.nodes[v])] = 1;
    } else {
      for (int e : t.out[v])
        for (const auto& [c, n] : count_from(t.edges[e].to)) acc[c] += n;
    }
    counts[v] = std::move(acc);
    done[v] = true;
    return counts[v];
  };
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    if (t.is_endpoint(static_cast<int>(v))) continue;
    int c1 = -1, c2 = -1;
    for (int e : t.out[v]) (t.edges[e].kind == EdgeKind::I ? c1 : c2) = t.edges[e].to;
    HelperCheck h;
    h.node = g_->format_word(t.nodes[v]);
    const auto& cv = count_from(static_cast<int>(v));
    const bool smo = std::all_of(cv.begin(), cv.end(), [](const auto& kv) { return kv.second == 1; });
    const auto bv = classes_below(t, static_cast<int>(v));
    const auto b1 = classes_below(t, c1);
    const auto b2 = classes_below(t, c2);
    h.applicable = smo && saturated(bv) && saturated(b1) && saturated(b2);
    const auto ev = extrema_or_violation(*poset_, bv);
    const auto e1 = extrema_or_violation(*poset_, b1);
    const auto e2 = extrema_or_violation(*poset_, b2);
    h.min_follows_type_II = ev.first == e2.first;
    h.max_follows_type_I = ev.second == e1.second;
    const auto iv = d.vanishing_simple_roots(ev.first.newton);
    const auto i1 = d.vanishing_simple_roots(e1.first.newton);
    std::vector<int> drop;
    const bool nested = std::includes(iv.begin(), iv.end(), i1.begin(), i1.end());
    std::set_difference(iv.begin(), iv.end(), i1.begin(), i1.end(), std::back_inserter(drop));
    h.single_orbit_drop = nested && !drop.empty() && d.count_delta_orbits(drop) == 1;
    r.helpers.push_back(std::move(h));
  }
  return r;
}

MctInequality Classifier::mct_inequality(const AffineElement& w) {
  const RootDatum& d = g_->datum();
  const ClassInvariant c = class_invariant(*g_, w);
  MctInequality m;
  m.lhs = g_->length(w);
  m.rhs = c.pairing_2rho + reflection_length(d, w.finite, d.delta()) - poset_->defect(c);
  m.slack = m.lhs - m.rhs;
  m.equality = m.slack == Rational(0);
  if (m.slack < Rational(0))
    throw InvariantViolation("length below the Coxeter bound for " + g_->format(w));
  if (is_min_len(*g_, w, caps_.bfs).min_len && m.equality != min_cox(w).has_value())
    throw InvariantViolation("Coxeter bound equality disagrees with the witness search for " +
                             g_->format(w));
  return m;
}

ClassificationReport Classifier::classify(const AffineElement& w,
                                          const std::vector<std::uint64_t>& seeds_in) {
  const std::vector<std::uint64_t> seeds = seeds_in.empty() ? std::vector<std::uint64_t>{0} : seeds_in;
  const AffineWeyl& g = *g_;
  const RootDatum& d = g.datum();
  ClassificationReport r;
  r.datum = d.name();
  r.element = g.format(w);
  r.word = g.format_word(w);
  r.length = g.length(w);
  r.min_len_certificate = is_min_len(g, w, caps_.bfs);
  r.min_len = r.min_len_certificate.min_len;
  r.straight = is_straight(g, w);
  r.own_class = class_invariant(g, w);
  r.reflection_length = reflection_length(d, w.finite, d.delta());
  if (r.min_len) r.min_cox = min_cox(w);

  r.smo = true;
  r.geometric_coxeter = true;
  std::optional<std::vector<ClassInvariant>> first_keys;
  for (std::uint64_t s : seeds) {
    const ReductionTree& t = tree(w, s);
    const auto paths = enumerate_paths(g, t);
    SeedOutcome o;
    o.seed = s;
    o.nodes = t.nodes.size();
    o.paths = paths.size();
    std::set<ClassInvariant> seen;
    for (const auto& p : paths) {
      if (!seen.insert(p.end_class).second && o.smo) {
        o.smo = false;
        o.smo_offender = p.end_class;
      }
      o.signature.emplace_back(p.end_class, p.count_I, p.count_II);
    }
    std::sort(o.signature.begin(), o.signature.end());
    for (int e : t.endpoints())
      if (!min_cox(t.nodes[e])) {
        o.endpoints_min_cox = false;
        o.non_min_cox_endpoints.push_back(g.format_word(t.nodes[e]));
      }
    const std::vector<ClassInvariant> keys(seen.begin(), seen.end());
    if (!first_keys) {
      first_keys = keys;
    } else if (*first_keys != keys) {
      throw InvariantViolation("B(G)_w depends on the reduction tree for " + r.element);
    }
    if (!r.seeds.empty() && r.seeds.front().signature != o.signature)
      r.findings.push_back("seed " + std::to_string(s) +
                           " gives a different multiset of (class, I, II) than seed " +
                           std::to_string(seeds.front()));
    r.smo = r.smo && o.smo;
    r.geometric_coxeter = r.geometric_coxeter && o.smo && o.endpoints_min_cox;
    r.seeds.push_back(std::move(o));
  }

  const ReductionTree& t0 = tree(w, seeds.front());
  const BgwMap m = group_paths(enumerate_paths(g, t0));
  const auto [lo, hi] = extrema_or_violation(*poset_, keys_of(m));
  r.b_min = lo;
  r.b_max = hi;
  for (const auto& [c, paths] : m) {
    ClassRow row;
    row.cls = c;
    row.defect = poset_->defect(c);
    const Formulas f = formulas(w, m, c);
    row.ell1 = f.ell1;
    row.ell2 = f.ell2;
    row.dim = f.dim;
    row.ell1_orbit_diff = f.ell1_orbit_diff;
    bool first = true;
    for (const auto& p : paths) {
      row.path_counts.emplace_back(p.count_I, p.count_II);
      const Rational end_dim = Rational(g.length(t0.nodes[p.end_node])) - c.pairing_2rho;
      if (end_dim.denominator() != 1)
        throw IntegralityError("endpoint dimension is not an integer");
      const int td = p.count_I + p.count_II + static_cast<int>(end_dim.numerator());
      row.tree_dim = first ? td : std::max(row.tree_dim, td);
      first = false;
    }
    std::sort(row.path_counts.begin(), row.path_counts.end());
    row.chain_to_max = poset_->chain_length(c, hi);
    row.essential_gap_to_max = poset_->essential_gap(c, hi);
    if (r.geometric_coxeter) {
      // ell1 is compared against the tree by callers; a bad value is a finding, not a crash
      for (const Rational* q : {&f.ell2, &f.dim})
        if (q->denominator() != 1 || *q < Rational(0))
          throw IntegralityError("formula value " + to_string(*q) + " for " + r.element +
                                 " is not a nonnegative integer");
      if (f.ell2 != Rational(row.chain_to_max))
        throw InvariantViolation("ell2 " + to_string(f.ell2) + " differs from chain length " +
                                 std::to_string(row.chain_to_max) + " for " + r.element);
      if (f.ell1 < Rational(0))
        r.findings.push_back("closed ell1 is negative (" + to_string(f.ell1) + ") for class " +
                             describe(c));
    }
    row.shape = shape_for(t0, paths.front(), f);
    r.rows.push_back(std::move(row));
  }
  r.purity = purity_report(w);
  r.mct = mct_inequality(w);
  return r;
}

}  // namespace adlv
