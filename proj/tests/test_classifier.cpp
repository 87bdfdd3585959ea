#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adlvkit/checks.hpp"
#include "adlvkit/classifier.hpp"

using namespace adlv;

namespace {

struct Fixture {
  std::shared_ptr<const AffineWeyl> g;
  std::shared_ptr<const BgPoset> poset;
  Classifier cl;
  explicit Fixture(const char* name)
      : g(AffineWeyl::make(name)), poset(std::make_shared<BgPoset>(g)), cl(g, poset) {}
};

}  // namespace

TEST_CASE("spherical subsets are ordered by size then lexicographically") {
  auto g = AffineWeyl::make("A2");
  const auto ks = spherical_subsets(*g);
  const std::vector<std::vector<int>> want{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  CHECK(ks == want);
}

TEST_CASE("minimal Coxeter type examples") {
  struct Case {
    const char* datum;
    const char* element;
    std::vector<int> K;
    const char* x;
    std::vector<int> c_word;
  };
  const Case cases[] = {
      {"A5:gl", "s4 tau3", {1, 4}, "tau3", {4}},
      {"C2:sc", "s1 tau2", {1}, "tau2", {1}},
      {"2A4:sc", "s1 tau1", {0, 1}, "tau1", {1}},
      {"A1:sc", "tau1", {}, "tau1", {}},
      {"A2:sc", "tau2", {}, "tau2", {}},
  };
  for (const Case& k : cases) {
    CAPTURE(k.datum);
    CAPTURE(k.element);
    Fixture f(k.datum);
    const auto w = f.g->parse(k.element);
    REQUIRE(is_min_len(*f.g, w).min_len);
    const auto m = is_minimal_coxeter_type(*f.g, w);
    REQUIRE(m.has_value());
    CHECK(m->K == k.K);
    CHECK(m->x == f.g->parse(k.x));
    CHECK(m->c_word == k.c_word);
    CHECK(f.g->multiply(m->c_K, m->x) == m->member);
    CHECK(is_twisted_coxeter(*f.g, m->c_K, m->K, m->x));
    CHECK(is_straight(*f.g, m->x));
    const auto r = f.cl.classify(w, {0, 1, 2});
    CHECK(r.geometric_coxeter);
    CHECK(r.smo);
    CHECK(r.mct.slack == Rational(0));
    CHECK(r.mct.equality);
  }
}

TEST_CASE("twisted Coxeter elements of a parabolic") {
  auto g = AffineWeyl::make("A5:gl");
  const auto x = g->parse("tau3");
  // Ad(tau3) swaps 1 and 4, so one reflection from the pair is a twisted Coxeter element.
  CHECK(is_twisted_coxeter(*g, g->simple(4), {1, 4}, x));
  CHECK(is_twisted_coxeter(*g, g->simple(1), {1, 4}, x));
  CHECK_FALSE(is_twisted_coxeter(*g, g->parse("s1 s4"), {1, 4}, x));
  CHECK_FALSE(is_twisted_coxeter(*g, g->identity(), {1, 4}, x));
  CHECK(is_twisted_coxeter(*g, g->identity(), {}, x));
  auto a2 = AffineWeyl::make("A2");
  const auto id = a2->identity();
  CHECK(is_twisted_coxeter(*a2, a2->parse("s1 s2"), {1, 2}, id));
  CHECK(is_twisted_coxeter(*a2, a2->parse("s2 s1"), {1, 2}, id));
  CHECK_FALSE(is_twisted_coxeter(*a2, a2->parse("s1 s2 s1"), {1, 2}, id));
  CHECK_FALSE(is_twisted_coxeter(*a2, a2->parse("s1"), {1, 2}, id));
}

TEST_CASE("coset decomposition") {
  auto g = AffineWeyl::make("A5:gl");
  const auto d = coset_decompose(*g, g->parse("s4 tau3"), {1, 4});
  REQUIRE(d.has_value());
  CHECK(d->x == g->parse("tau3"));
  CHECK(d->u == g->simple(4));
  CHECK(d->u_word == std::vector<int>{4});
  CHECK(d->twist.at(1) == 4);
  CHECK(d->twist.at(4) == 1);
}

TEST_CASE("rank one element of length three") {
  Fixture f("A1");
  const auto w = f.g->parse("s0 s1 s0");
  const auto r = f.cl.classify(w, default_seeds());
  CHECK_FALSE(r.min_cox.has_value());
  CHECK(r.geometric_coxeter);
  CHECK(r.mct.slack == Rational(2));
  CHECK_FALSE(r.mct.equality);
  REQUIRE(r.rows.size() == 2);
  const ClassRow& basic = r.rows[0];
  const ClassRow& top = r.rows[1];
  CHECK(basic.cls.pairing_2rho == Rational(0));
  CHECK(basic.dim == Rational(2));
  CHECK(basic.ell1 == Rational(0));
  CHECK(basic.ell2 == Rational(1));
  CHECK(basic.path_counts == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(top.dim == Rational(1));
  CHECK(top.ell1 == Rational(1));
  CHECK(top.ell2 == Rational(0));
  CHECK(top.path_counts == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(r.b_min == basic.cls);
  CHECK(r.b_max == top.cls);
  CHECK(r.purity.saturated);
  CHECK(r.purity.missing.empty());
  CHECK(f.cl.dim_formula(w, basic.cls) == Rational(2));
  CHECK(f.cl.ell_formulas(w, top.cls) == std::pair{Rational(1), Rational(0)});
}

TEST_CASE("Coxeter bound and dimension on small corpora") {
  for (const char* name : {"A1", "A2", "C2:sc", "2A3:sc"}) {
    CAPTURE(name);
    Fixture f(name);
    for (const auto& w : default_corpus(*f.g, 5, kDefaultEnumBudget)) {
      CAPTURE(f.g->format(w));
      const auto r = f.cl.classify(w, {0, 3});
      CHECK(r.mct.slack >= Rational(0));
      if (r.min_cox) CHECK(r.smo);
      if (!r.geometric_coxeter) continue;
      for (const auto& row : r.rows) {
        CHECK(row.dim == Rational(row.tree_dim));
        CHECK(row.ell2 == Rational(row.chain_to_max));
        CHECK(row.dim.denominator() == 1);
      }
      CHECK(r.b_min == r.own_class);
      CHECK(r.purity.saturated);
    }
  }
}
