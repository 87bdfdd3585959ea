// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "adlvkit/checks.hpp"
#include "adlvkit/classifier.hpp"

using namespace adlv;
using Clock = std::chrono::steady_clock;

namespace {

struct Line {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Line criterion_one() {
  struct Case {
    const char* datum;
    const char* element;
    std::vector<int> K;
    const char* x;
    const char* c;
  };
  const Case cases[] = {
      {"A5:gl", "s4 tau3", {1, 4}, "tau3", "s4"},
      {"C2:sc", "s1 tau2", {1}, "tau2", "s1"},
      {"2A4:sc", "s1 tau1", {0, 1}, "tau1", "s1"},
      {"A1:sc", "tau1", {}, "tau1", "1"},
      {"A2:sc", "tau1", {}, "tau1", "1"},
      {"A2:sc", "tau2", {}, "tau2", "1"},
      {"A3:gl", "tau1", {}, "tau1", "1"},
      {"A3:gl", "tau3", {}, "tau3", "1"},
      {"C2:sc", "tau2", {}, "tau2", "1"},
      {"2A3:sc", "tau2", {}, "tau2", "1"},
      {"A5:gl", "tau3", {}, "tau3", "1"},
  };
  Line line;
  double worst = 0;
  for (const Case& k : cases) {
    const auto t0 = Clock::now();
    auto g = AffineWeyl::make(k.datum);
    Classifier cl(g, std::make_shared<BgPoset>(g));
    const auto w = g->parse(k.element);
    const auto r = cl.classify(w, default_seeds());
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    std::string why;
    if (!r.min_cox)
      why = "no witness";
    else if (r.min_cox->K != k.K)
      why = "K differs";
    else if (r.min_cox->x != g->parse(k.x))
      why = "x = " + g->format(r.min_cox->x);
    else if (r.min_cox->c_K != g->parse(k.c))
      why = "c_K = " + g->format_word(r.min_cox->c_K);
    else if (dt >= 1.0)
      why = "took " + std::to_string(dt) + " s";
    if (!why.empty()) {
      line.ok = false;
      line.detail += std::string(k.datum) + " " + k.element + ": " + why + "; ";
    }
  }
  if (line.ok) {
    std::ostringstream s;
    s << sizeof(cases) / sizeof(cases[0]) << " witnesses exact, slowest " << worst << " s";
    line.detail = s.str();
  }
  return line;
}

struct Group {
  const char* datum;
  int max_length;
};

struct Totals {
  std::vector<SuiteResult> suites;
  double seconds = 0;

  // Sums the given checks across every datum; caps count as failures.
  Line combine(std::initializer_list<const char*> names) const {
    Line line;
    std::ostringstream s;
    std::size_t evaluated = 0, failures = 0, capped = 0;
    std::string first;
    for (const auto& r : suites) {
      capped += r.cap_exceeded;
      for (const char* n : names) {
        const CheckTally& t = r.get(n);
        evaluated += t.evaluated;
        failures += t.failures;
        if (first.empty() && !t.samples.empty()) first = r.datum + ": " + t.samples.front();
      }
    }
    line.ok = failures == 0 && capped == 0 && evaluated > 0;
    s << evaluated << " evaluations, " << failures << " failures";
    if (capped) s << ", " << capped << " elements over cap";
    if (!first.empty()) s << "; first: " << first;
    line.detail = s.str();
    return line;
  }
};

Totals run_corpus() {
  const Group groups[] = {{"A1", 8},    {"A2", 8},    {"C2:sc", 8},
                          {"G2:sc", 8}, {"A3:gl", 6}, {"2A3:sc", 6}};
  SuiteOptions opt;
  opt.seeds = default_seeds();
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  Totals t;
  const auto t0 = Clock::now();
  for (const Group& gr : groups) {
    auto g = AffineWeyl::make(gr.datum);
    const auto corpus = default_corpus(*g, gr.max_length, opt.caps.enumeration);
    SuiteResult r = run_suite(g, corpus, opt);
    std::cout << "# " << r.datum << " up to length " << gr.max_length << ": " << r.elements
              << " elements, " << r.geometric_coxeter << " geometric Coxeter type, "
              << r.minimal_coxeter << " minimal Coxeter type\n";
    t.suites.push_back(std::move(r));
  }
  t.seconds = seconds_since(t0);
  return t;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Line>> lines;
  lines.emplace_back("1 minimal Coxeter type witnesses", criterion_one());

  const Totals t = run_corpus();
  Line c2 = t.combine({check::kPathCounts});
  if (t.seconds >= 600) {
    c2.ok = false;
    c2.detail += "; corpus took " + std::to_string(t.seconds) + " s";
  }
  lines.emplace_back("2 path counts match closed formulas", c2);
  lines.emplace_back("3 dimension formula matches tree", t.combine({check::kDimension}));
  lines.emplace_back("4 saturation", t.combine({check::kSaturation}));
  lines.emplace_back("5 reflection length additivity", t.combine({check::kAdditivity}));
  lines.emplace_back("6 Coxeter bound and equality case", t.combine({check::kCoxeterBound}));
  lines.emplace_back("7 structural conservation",
                     t.combine({check::kConservation, check::kReplay, check::kSeedIndependence}));
  lines.emplace_back("8 integrality", t.combine({check::kIntegrality, check::kNoViolation}));

  bool all = true;
  for (const auto& [name, l] : lines) {
    std::cout << (l.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << l.detail << "\n";
    all = all && l.ok;
  }

  // Identities checked alongside the criteria.
  std::size_t mismatches = 0, helper_nodes = 0, helper_drops = 0;
  for (const auto& r : t.suites) {
    mismatches += r.orbit_difference_mismatches;
    helper_nodes += r.helper_nodes;
    helper_drops += r.helper_orbit_drop_failures;
  }
  std::cout << "note  ell2 equals chain length: " << t.combine({check::kChainIdentity}).detail << "\n"
            << "note  dimension drop equals essential gap: " << t.combine({check::kPurityGap}).detail
            << "\n"
            << "note  minimum of B(G)_w is the class of w: "
            << t.combine({check::kMinIsOwnClass}).detail << "\n"
            << "note  type I counts against orbits of I(nu_min) missing from I(nu_c): " << mismatches
            << " mismatches\n"
            << "note  helper nodes " << helper_nodes << ", single orbit drop fails at "
            << helper_drops << "\n"
            << "note  corpus time " << t.seconds << " s\n";
  return all ? 0 : 1;
}
