#include "adlvkit/cli.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "adlvkit/cache.hpp"
#include "adlvkit/checks.hpp"
#include "adlvkit/corpus.hpp"
#include "adlvkit/errors.hpp"
#include "adlvkit/report.hpp"

namespace adlv {

namespace {

constexpr const char* kElementGrammar =
    "element grammar: tokens sK (affine simple reflection, K = 0..rank), tauK (length-zero "
    "element), t(c1,...,cn) (translation in lattice coordinates) or 1, separated by spaces "
    "or '*', multiplied left to right";

struct RunConfig {
  std::string datum;
  std::vector<std::uint64_t> seed_list;
  std::string seed_range;
  std::size_t cap_bfs = kDefaultBfsCap;
  std::size_t cap_enum = kDefaultEnumBudget;
  std::string cache;
  std::string format;
  unsigned jobs = 0;
  double verify_fraction = 0.01;

  std::vector<std::uint64_t> seeds;
  Caps caps() const { return {cap_bfs, cap_enum}; }
};

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw UsageError("empty entry in --seeds");
    try {
      const auto dash = part.find('-');
      if (dash == std::string::npos) {
        out.push_back(std::stoull(part));
      } else {
        const auto a = std::stoull(part.substr(0, dash));
        const auto b = std::stoull(part.substr(dash + 1));
        if (b < a) throw UsageError("descending seed range " + part);
        for (auto s = a; s <= b; ++s) out.push_back(s);
      }
    } catch (const std::logic_error&) {
      throw UsageError("cannot read seed list '" + text + "'");
    }
  }
  return out;
}

void finalize(RunConfig& c) {
  if (!c.seed_range.empty()) c.seeds = parse_seed_range(c.seed_range);
  c.seeds.insert(c.seeds.end(), c.seed_list.begin(), c.seed_list.end());
  if (c.seeds.empty()) c.seeds = default_seeds();
  if (std::set<std::uint64_t>(c.seeds.begin(), c.seeds.end()).size() != c.seeds.size())
    throw UsageError("seeds must be distinct");
  if (c.cap_bfs == 0 || c.cap_enum == 0) throw UsageError("caps must be positive");
  if (c.verify_fraction < 0 || c.verify_fraction > 1)
    throw UsageError("--verify-fraction must lie in [0, 1]");
  if (c.jobs == 0) c.jobs = std::max(1u, std::thread::hardware_concurrency());
}

std::string format_or(const RunConfig& c, const char* fallback, std::initializer_list<const char*> allowed) {
  const std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not available for this command");
}

AffineElement parse_element(const AffineWeyl& g, const std::string& text) {
  try {
    return g.parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + kElementGrammar);
  }
}

// Rendered JSON report for one element, through the cache when configured.
class ReportSource {
 public:
  ReportSource(std::shared_ptr<const AffineWeyl> g, const RunConfig& cfg)
      : g_(std::move(g)), cfg_(cfg), poset_(std::make_shared<BgPoset>(g_, cfg.cap_enum)) {
    if (auto dir = resolve_cache_dir(cfg.cache.empty() ? std::nullopt
                                                       : std::optional<std::string>(cfg.cache)))
      cache_.emplace(*dir);
  }

  std::shared_ptr<const BgPoset> poset() const { return poset_; }

  nlohmann::ordered_json report(Classifier& cl, const AffineElement& w) const {
    const std::string text = g_->format(w);
    if (!cache_) return fresh(cl, w);
    const std::string key = ResultCache::key("classify", g_->datum().name(), text, cfg_.seeds,
                                             cfg_.cap_bfs, cfg_.cap_enum);
    if (auto hit = cache_->load(key)) {
      nlohmann::ordered_json j;
      try {
        j = nlohmann::ordered_json::parse(*hit);
      } catch (const nlohmann::json::exception&) {
        j = nullptr;  // torn or foreign file, recompute below
      }
      if (!j.is_null()) {
        if (ResultCache::sampled(key, cfg_.verify_fraction)) {
          const auto again = fresh(cl, w);
          if (render_json(again) != render_json(j))
            throw InvariantViolation("cached report for " + text + " differs from a fresh run");
        }
        return j;
      }
    }
    auto j = fresh(cl, w);
    cache_->store(key, render_json(j));
    return j;
  }

 private:
  nlohmann::ordered_json fresh(Classifier& cl, const AffineElement& w) const {
    return report_to_json(*g_, cl.classify(w, cfg_.seeds));
  }

  std::shared_ptr<const AffineWeyl> g_;
  const RunConfig& cfg_;
  std::shared_ptr<BgPoset> poset_;
  std::optional<ResultCache> cache_;
};

// Runs fn over 0..n-1 on a pool and emits results strictly in index order as they
// become available, so output is independent of scheduling.
void ordered_parallel(std::size_t n, unsigned jobs,
                      const std::function<std::string(std::size_t, Classifier&)>& fn,
                      const std::function<Classifier()>& make_classifier,
                      const std::function<void(const std::string&)>& emit) {
  std::vector<std::optional<std::string>> done(n);
  std::exception_ptr failure;
  std::size_t failed_at = n;
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Classifier cl = make_classifier();
    for (std::size_t i = next++; i < n; i = next++) {
      std::string s;
      try {
        s = fn(i, cl);
      } catch (...) {
        std::lock_guard lk(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
        cv.notify_all();
        continue;
      }
      std::lock_guard lk(mu);
      done[i] = std::move(s);
      cv.notify_all();
    }
  };
  const unsigned k = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
  std::size_t emitted = 0;
  {
    std::unique_lock lk(mu);
    while (emitted < n) {
      cv.wait(lk, [&] { return done[emitted].has_value() || failed_at == emitted; });
      if (failed_at == emitted) break;
      std::string s = std::move(*done[emitted]);
      ++emitted;
      lk.unlock();
      emit(s);
      lk.lock();
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

int cmd_classify(const RunConfig& cfg, const std::string& element, std::ostream& out) {
  const std::string fmt = format_or(cfg, "json", {"json", "table"});
  auto g = AffineWeyl::make(cfg.datum);
  const AffineElement w = parse_element(*g, element);
  ReportSource src(g, cfg);
  if (fmt == "json") {
    Classifier cl(g, src.poset(), cfg.caps());
    out << render_json(src.report(cl, w));
  } else {
    Classifier cl(g, src.poset(), cfg.caps());
    out << render_report_table(*g, cl.classify(w, cfg.seeds));
  }
  return kExitOk;
}

int cmd_bgw(const RunConfig& cfg, const std::string& element, std::ostream& out) {
  const std::string fmt = format_or(cfg, "table", {"json", "table"});
  auto g = AffineWeyl::make(cfg.datum);
  const AffineElement w = parse_element(*g, element);
  auto poset = std::make_shared<BgPoset>(g, cfg.cap_enum);
  Classifier cl(g, poset, cfg.caps());
  const ClassificationReport r = cl.classify(w, cfg.seeds);
  if (fmt == "json") {
    auto j = bgw_to_json(*g, r);
    nlohmann::ordered_json top;
    top["schema"] = kReportSchema;
    top["datum"] = r.datum;
    top["element"] = r.element;
    top["geometric_coxeter_type"] = r.geometric_coxeter;
    top["bgw"] = j;
    out << render_json(top);
  } else {
    out << render_bgw_table(r);
  }
  return kExitOk;
}

int cmd_tree(const RunConfig& cfg, const std::string& element, std::ostream& out) {
  const std::string fmt = format_or(cfg, "json", {"json", "dot"});
  auto g = AffineWeyl::make(cfg.datum);
  const AffineElement w = parse_element(*g, element);
  const ReductionTree t = build_tree(*g, w, cfg.seeds.front(), cfg.cap_bfs);
  out << (fmt == "json" ? export_tree_json(*g, t) : export_tree_dot(*g, t));
  return kExitOk;
}

bool keep_row(const std::string& filter, const nlohmann::ordered_json& j) {
  if (filter == "all") return true;
  if (filter == "geo-cox") return j["geometric_coxeter_type"].get<bool>();
  if (filter == "min-cox") return !j["minimal_coxeter_type"].is_null();
  if (filter == "min-len") return j["min_len"]["value"].get<bool>();
  if (filter == "straight-only") return j["straight"].get<bool>();
  throw UsageError("unknown filter " + filter);
}

int cmd_scan(const RunConfig& cfg, int max_length, const std::string& filter,
             std::optional<int> coset, std::ostream& out) {
  const std::string fmt = format_or(cfg, "table", {"json", "table"});
  if (max_length < 0) throw UsageError("--max-length must be nonnegative");
  static const std::set<std::string> kFilters{"all", "geo-cox", "min-cox", "min-len",
                                              "straight-only"};
  if (!kFilters.count(filter)) throw UsageError("unknown filter " + filter);
  auto g = AffineWeyl::make(cfg.datum);
  std::vector<AffineElement> omegas;
  if (coset) {
    const auto t = g->tau(*coset);
    if (!t) throw UsageError("tau" + std::to_string(*coset) + " does not exist for " + cfg.datum);
    omegas.push_back(*t);
  } else {
    omegas = omega_representatives(*g);
  }
  ReportSource src(g, cfg);
  if (fmt == "table") out << scan_header();
  for (int len = 0; len <= max_length; ++len) {
    std::vector<AffineElement> level;
    try {
      for (const auto& w : enumerate_elements(*g, len, omegas, cfg.cap_enum))
        if (g->length(w) == len) level.push_back(w);
    } catch (const CapExceeded& e) {
      out << (fmt == "table" ? "# " : "{\"marker\":\"") << "budget exceeded before length " << len
          << ": " << e.what() << (fmt == "table" ? "\n" : "\"}\n");
      out.flush();
      return kExitCap;
    }
    ordered_parallel(
        level.size(), cfg.jobs,
        [&](std::size_t i, Classifier& cl) {
          const auto j = src.report(cl, level[i]);
          if (!keep_row(filter, j)) return std::string();
          return fmt == "table" ? scan_row(j) : j.dump() + "\n";
        },
        [&] { return Classifier(g, src.poset(), cfg.caps()); },
        [&](const std::string& s) {
          out << s;
          out.flush();
        });
  }
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, int max_length, std::ostream& out) {
  format_or(cfg, "table", {"table"});
  if (max_length < 0) throw UsageError("--max-length must be nonnegative");
  auto g = AffineWeyl::make(cfg.datum);
  const auto corpus = default_corpus(*g, max_length, cfg.cap_enum);
  SuiteOptions opt;
  opt.seeds = cfg.seeds;
  opt.caps = cfg.caps();
  opt.jobs = cfg.jobs;
  const SuiteResult r = run_suite(g, corpus, opt);
  out << render_suite(r);
  if (r.cap_exceeded) return kExitCap;
  return r.passed() ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deligne-Lusztig reduction trees and Coxeter type classification", "adlvkit"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--datum", cfg.datum, "root datum, e.g. A2, C2:sc, 2A4:sc, A5:gl")->required();
  app.add_option("--seed", cfg.seed_list, "tree seed; repeatable");
  app.add_option("--seeds", cfg.seed_range, "seed list such as 0-9 or 0,3,5");
  app.add_option("--cap-bfs", cfg.cap_bfs, "cap on cyclic-shift class sizes");
  app.add_option("--cap-enum", cfg.cap_enum, "budget for element and straight enumerations");
  app.add_option("--cache", cfg.cache, "result cache directory (ADLVKIT_CACHE overrides)");
  app.add_option("--format", cfg.format, "json, dot or table");
  app.add_option("--jobs", cfg.jobs, "worker threads for scan and check");
  app.add_option("--verify-fraction", cfg.verify_fraction,
                 "fraction of cache hits recomputed and compared");

  std::string element;
  auto* classify = app.add_subcommand("classify", "classify one element");
  classify->add_option("element", element, kElementGrammar)->required();
  auto* tree = app.add_subcommand("tree", "reduction tree for the first seed");
  tree->add_option("element", element, kElementGrammar)->required();
  auto* bgw = app.add_subcommand("bgw", "classes met by the element, with path counts");
  bgw->add_option("element", element, kElementGrammar)->required();

  int max_length = 0;
  std::string filter = "all";
  std::optional<int> coset;
  auto* scan = app.add_subcommand("scan", "classify every element up to a length");
  scan->add_option("--max-length", max_length)->required();
  scan->add_option("--filter", filter, "all, geo-cox, min-cox, min-len or straight-only");
  scan->add_option("--coset", coset, "restrict to the coset of tauK");
  auto* check = app.add_subcommand("check", "run the invariant suites on a corpus");
  check->add_option("--max-length", max_length)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    finalize(cfg);
    if (*classify) return cmd_classify(cfg, element, out);
    if (*tree) return cmd_tree(cfg, element, out);
    if (*bgw) return cmd_bgw(cfg, element, out);
    if (*scan) return cmd_scan(cfg, max_length, filter, coset, out);
    if (*check) return cmd_check(cfg, max_length, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvariantViolation& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace adlv
