#include "adlvkit/bg_poset.hpp"

#include <algorithm>

#include "adlvkit/errors.hpp"

namespace adlv {

BgPoset::BgPoset(std::shared_ptr<const AffineWeyl> g, std::size_t enum_budget)
    : g_(std::move(g)), budget_(enum_budget) {}

void BgPoset::check_same_datum(const ClassInvariant& a, const ClassInvariant& b) const {
  const std::size_t n = static_cast<std::size_t>(g_->dim());
  if (a.newton.size() != n || b.newton.size() != n) throw ContractError("datum mismatch");
}

bool BgPoset::leq(const ClassInvariant& a, const ClassInvariant& b) const {
  check_same_datum(a, b);
  if (a.kottwitz != b.kottwitz) return false;
  RationalVec d(a.newton.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = b.newton[i] - a.newton[i];
  const auto c = g_->datum().coroot_coordinates(d);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q >= 0; });
}

namespace {

std::int64_t half_integer(const Rational& twice, const char* what) {
  if (twice.denominator() != 1 || twice.numerator() % 2 != 0)
    throw IntegralityError(std::string(what) + " is not an integer: " + to_string(twice / 2));
  return twice.numerator() / 2;
}

}  // namespace

std::int64_t BgPoset::chain_length(const ClassInvariant& a, const ClassInvariant& b) const {
  if (!leq(a, b)) throw NotComparable("classes are not comparable");
  const Rational twice = b.pairing_2rho - a.pairing_2rho + defect(a) - defect(b);
  const std::int64_t v = half_integer(twice, "chain length");
  if (v < 0) throw InvariantViolation("negative chain length");
  return v;
}

std::int64_t BgPoset::essential_gap(const ClassInvariant& a, const ClassInvariant& b) const {
  if (!leq(a, b)) throw NotComparable("classes are not comparable");
  const Rational twice = b.pairing_2rho - a.pairing_2rho - defect(a) + defect(b);
  return half_integer(twice, "essential gap");
}

void BgPoset::explore(Sweep& s, const KottwitzKey& key, int up_to) const {
  const AffineWeyl& g = *g_;
  const RootDatum& d = g.datum();
  auto process = [&](const AffineElement& x) {
    const RationalVec nu = newton_point(g, x);
    const Rational p = d.pair_two_rho(nu);
    if (Rational(g.length(x)) != p) return;
    ++straight_seen_;
    ClassInvariant c = make_class_invariant(d, nu, kottwitz_point(g, x));
    const int def = reflection_length(d, x.finite, d.delta());
    auto it = s.records.find(c);
    if (it == s.records.end()) {
      s.records.emplace(c, ClassRecord{c, x, def});
    } else if (it->second.defect != def) {
      throw InvariantViolation("defect depends on the straight witness for " + describe(c));
    }
  };
  if (s.explored < 0) {
    const AffineElement tau = g.omega_element(d.lift_kottwitz_key(key));
    if (kottwitz_point(g, tau) != key) throw InvariantViolation("Kottwitz lift failed");
    s.seen.insert(tau);
    s.frontier = {tau};
    ++total_seen_;
    process(tau);
    s.explored = 0;
  }
  while (s.explored < up_to) {
    std::vector<AffineElement> next;
    for (const AffineElement& x : s.frontier)
      for (int i = 0; i < g.num_simple(); ++i) {
        AffineElement y = g.right_simple(x, i);
        if (g.length(y) != s.explored + 1) continue;
        if (!s.seen.insert(y).second) continue;
        if (++total_seen_ > budget_) throw CapExceeded("straight enumeration budget", budget_);
        next.push_back(std::move(y));
      }
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(next.size());
    for (std::size_t k = 0; k < next.size(); ++k) order.emplace_back(g.format(next[k]), k);
    std::sort(order.begin(), order.end());
    std::vector<AffineElement> sorted;
    sorted.reserve(next.size());
    for (const auto& [text, k] : order) sorted.push_back(next[k]);
    for (const AffineElement& x : sorted) process(x);
    s.frontier = std::move(sorted);
    ++s.explored;
  }
}

std::vector<ClassRecord> BgPoset::enumerate_straight(
    const Rational& max_pairing, const std::optional<KottwitzKey>& kottwitz) const {
  const RootDatum& d = g_->datum();
  std::vector<KottwitzKey> keys;
  if (kottwitz) {
    keys.push_back(*kottwitz);
  } else {
    if (!d.coinvariants_finite())
      throw UsageError("infinitely many Kottwitz values; give a Kottwitz filter");
    keys = d.all_kottwitz_keys();
  }
  const std::int64_t bound = boost::rational_cast<std::int64_t>(max_pairing) -
                             (max_pairing < 0 && max_pairing.denominator() != 1 ? 1 : 0);
  std::vector<ClassRecord> out;
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& key : keys) {
    if (key.size() != d.coinvariant_factors().size())
      throw UsageError("Kottwitz key has wrong length");
    if (bound < 0) continue;
    Sweep& s = sweeps_[key];
    explore(s, key, static_cast<int>(bound));
    for (const auto& [c, rec] : s.records)
      if (c.pairing_2rho <= max_pairing) out.push_back(rec);
  }
  std::sort(out.begin(), out.end(),
            [](const ClassRecord& a, const ClassRecord& b) { return a.invariant < b.invariant; });
  return out;
}

int BgPoset::defect(const ClassInvariant& c) const {
  for (const auto& rec : enumerate_straight(c.pairing_2rho, c.kottwitz))
    if (rec.invariant == c) return rec.defect;
  throw InvariantViolation("no straight representative for " + describe(c));
}

std::vector<ClassInvariant> BgPoset::interval(const ClassInvariant& lo,
                                              const ClassInvariant& hi) const {
  if (!leq(lo, hi)) throw NotComparable("interval endpoints are not comparable");
  std::vector<ClassInvariant> out;
  for (const auto& rec : enumerate_straight(hi.pairing_2rho, lo.kottwitz))
    if (leq(lo, rec.invariant) && leq(rec.invariant, hi)) out.push_back(rec.invariant);
  return out;
}

std::pair<ClassInvariant, ClassInvariant> BgPoset::extrema(
    const std::vector<ClassInvariant>& cs) const {
  if (cs.empty()) throw NoExtremum("empty set of classes");
  const ClassInvariant* lo = nullptr;
  const ClassInvariant* hi = nullptr;
  for (const auto& a : cs) {
    bool below = true, above = true;
    for (const auto& b : cs) {
      below = below && leq(a, b);
      above = above && leq(b, a);
    }
    if (below) lo = &a;
    if (above) hi = &a;
  }
  if (!lo || !hi) throw NoExtremum("set of classes has no unique minimum or maximum");
  return {*lo, *hi};
}

std::size_t BgPoset::straight_elements_seen() const {
  std::lock_guard<std::mutex> lock(mu_);
  return straight_seen_;
}

}  // namespace adlv
