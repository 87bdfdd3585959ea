#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "adlvkit/errors.hpp"
#include "adlvkit/root_datum.hpp"

using namespace adlv;

namespace {

const std::vector<std::string> kData = {"A1", "A2", "A3:sc", "A5:gl", "B3", "B3:sc", "C2:sc",
                                        "C3", "D4", "D5:sc", "E6", "E7:sc", "F4", "G2:sc",
                                        "2A4:sc", "2A3:sc", "2D4", "3D4:sc", "2E6:sc", "2A3:gl"};

// Breadth-first closure of the reflections; returns element -> word length.
std::map<std::vector<int>, int> weyl_group_by_words(const RootDatum& d) {
  auto key = [&](const Mat& m) { return std::vector<int>(m.e.begin(), m.e.end()); };
  std::map<std::vector<int>, int> dist;
  std::vector<Mat> frontier{identity_matrix(d.dim())};
  dist[key(frontier[0])] = 0;
  for (int len = 1; !frontier.empty(); ++len) {
    std::vector<Mat> next;
    for (const Mat& m : frontier)
      for (int i = 1; i <= d.rank(); ++i) {
        Mat p = mat_mul(d.reflection(i), m, d.dim());
        if (dist.emplace(key(p), len).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return dist;
}

Vec random_vec(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> u(-4, 4);
  Vec v{};
  for (int i = 0; i < dim; ++i) v[i] = u(rng);
  return v;
}

}  // namespace

TEST_CASE("Cartan matrix is recovered from the pairing") {
  for (const auto& name : kData) {
    CAPTURE(name);
    auto d = RootDatum::make(name);
    for (int i = 1; i <= d->rank(); ++i)
      for (int j = 1; j <= d->rank(); ++j)
        CHECK(d->pair(d->simple_coroot(i), d->simple_root(j)) == d->cartan()[i - 1][j - 1]);
  }
  // Bourbaki: alpha_1 short in C2 and G2, so <alpha_1-check, alpha_2> is -2 resp. -3.
  auto c2 = RootDatum::make("C2");
  CHECK(c2->cartan() == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  auto g2 = RootDatum::make("G2");
  CHECK(g2->cartan() == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
}

TEST_CASE("positive root counts") {
  const std::map<std::string, std::size_t> expect = {
      {"A1", 1}, {"A2", 3}, {"A5:gl", 15}, {"B3", 9}, {"C2", 4},  {"D4", 12},
      {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [name, n] : expect) {
    CAPTURE(name);
    CHECK(RootDatum::make(name)->positive_roots().size() == n);
  }
}

TEST_CASE("longest element length equals the number of positive roots") {
  const std::map<std::string, std::size_t> order = {
      {"A2", 6}, {"A3:sc", 24}, {"B3", 48}, {"C2:sc", 8}, {"G2", 12}, {"A3:gl", 24}};
  for (const auto& [name, n] : order) {
    CAPTURE(name);
    auto d = RootDatum::make(name);
    const auto words = weyl_group_by_words(*d);
    CHECK(words.size() == n);
    int longest = 0;
    for (const auto& [m, len] : words) longest = std::max(longest, len);
    CHECK(static_cast<std::size_t>(longest) == d->positive_roots().size());
    for (const auto& [m, len] : words) {
      Mat z{};
      std::copy(m.begin(), m.end(), z.e.begin());
      CHECK(d->finite_length(z) == len);
      CHECK(static_cast<int>(d->reduced_word(z).size()) == len);
      CHECK(d->weyl_from_word(d->reduced_word(z)) == z);
    }
  }
}

TEST_CASE("structural invariants of every datum") {
  for (const auto& name : kData) {
    CAPTURE(name);
    auto d = RootDatum::make(name);
    const int n = d->dim();
    for (int i = 1; i <= d->rank(); ++i) {
      CHECK(d->pair(d->simple_coroot(i), d->two_rho()) == 2);
      CHECK(d->pair(d->simple_coroot(i), d->theta()) >= 0);
    }
    for (const auto& a : d->positive_roots()) {
      CAPTURE(a[0]);
      CHECK(d->pair(d->theta_coroot(), a) <= 2);
    }
    // delta: permutes simple data, finite order, preserves the pairing and dominance.
    Mat p = identity_matrix(n);
    for (int k = 0; k < d->spec().twist_order; ++k) p = mat_mul(d->delta(), p, n);
    CHECK(is_identity(p, n));
    for (int i = 1; i <= d->rank(); ++i) {
      const int j = d->delta_index(i);
      CHECK(mat_apply(d->delta(), d->simple_coroot(i), n) == d->simple_coroot(j));
      CHECK(covec_apply(d->simple_root(i), d->delta_inverse(), n) == d->simple_root(j));
    }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Vec v = random_vec(rng, n);
      const Vec a = d->positive_roots()[trial % d->positive_roots().size()];
      CHECK(d->pair(mat_apply(d->delta(), v, n), covec_apply(a, d->delta_inverse(), n)) ==
            d->pair(v, a));
      for (int i = 1; i <= d->rank(); ++i)
        CHECK(d->pair(d->apply_weyl(d->reflection(i), v), d->apply_weyl_covector(d->reflection(i), a)) ==
              d->pair(v, a));
      const Vec dom = d->dominant_integral(v);
      CHECK(d->is_dominant(d->to_rational(mat_apply(d->delta(), dom, n))));
    }
  }
}

TEST_CASE("examples in rank one and two") {
  auto a1 = RootDatum::make("A1");
  CHECK(a1->positive_roots().size() == 1);
  CHECK(a1->pair(a1->simple_coroot(1), a1->simple_root(1)) == 2);
  CHECK(a1->pair(a1->simple_coroot(1), a1->two_rho()) == 2);
  CHECK(a1->pair(a1->to_rational(Vec{}), a1->two_rho()) == Rational(0));

  const Vec minus = vec_scale(a1->simple_coroot(1), -1);
  const DominantResult r = a1->dominant_representative(a1->to_rational(minus));
  CHECK(r.vector == a1->to_rational(a1->simple_coroot(1)));
  CHECK(r.weyl == a1->reflection(1));
  const DominantResult fixed = a1->dominant_representative(a1->to_rational(a1->simple_coroot(1)));
  CHECK(is_identity(fixed.weyl, 1));

  CHECK(a1->apply_weyl_covector(a1->reflection(1), a1->simple_root(1)) ==
        vec_scale(a1->simple_root(1), -1));
  CHECK(a1->apply_weyl(a1->reflection(1), a1->simple_coroot(1)) == minus);

  auto a2 = RootDatum::make("A2");
  const Vec v = vec_sub(a2->simple_coroot(1), a2->simple_coroot(2));
  const DominantResult dv = a2->dominant_representative(a2->to_rational(v));
  CHECK(a2->pair(dv.vector, a2->simple_root(1)) == Rational(0));
  CHECK(a2->pair(dv.vector, a2->simple_root(2)) == Rational(3));
  CHECK(dv.weyl == a2->reflection(2));
  const Mat s1s2 = a2->weyl_from_word({1, 2});
  CHECK(a2->apply_weyl_covector(s1s2, a2->simple_root(1)) == a2->simple_root(2));
}

TEST_CASE("gl and twisted realizations") {
  auto gl6 = RootDatum::make("A5:gl");
  CHECK(gl6->dim() == 6);
  Vec theta{};
  theta[0] = 1;
  theta[5] = -1;
  CHECK(gl6->theta() == theta);

  auto a4 = RootDatum::make("2A4:sc");
  CHECK(a4->delta_index(1) == 4);
  CHECK(a4->delta_index(2) == 3);
  CHECK(a4->delta_index(3) == 2);
  CHECK(a4->delta_index(4) == 1);

  auto d4 = RootDatum::make("3D4:sc");
  std::set<int> orbit{1, d4->delta_index(1), d4->delta_index(d4->delta_index(1))};
  CHECK(orbit == std::set<int>{1, 3, 4});
  CHECK(d4->delta_index(2) == 2);
}

TEST_CASE("datum text round trip and rejection") {
  for (const auto& name : kData) {
    const CartanSpec s = CartanSpec::parse(name);
    CHECK(CartanSpec::parse(s.str()).str() == s.str());
  }
  CHECK(CartanSpec::parse("A2").str() == "A2:adj");
  for (const char* bad : {"A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "B3:gl", "2A1", "3A4",
                          "2B3", "3D5", "X2", "A", "A2:foo", "A2:", "", "A9", "D9:sc"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CartanSpec::parse(bad), DatumError);
  }
}

TEST_CASE("Kottwitz keys") {
  CHECK(RootDatum::make("A2")->all_kottwitz_keys().size() == 1);
  CHECK(RootDatum::make("A2:sc")->all_kottwitz_keys().size() == 3);
  CHECK(RootDatum::make("C2:sc")->all_kottwitz_keys().size() == 2);
  CHECK(RootDatum::make("2A4:sc")->all_kottwitz_keys().size() == 1);
  CHECK_FALSE(RootDatum::make("A3:gl")->coinvariants_finite());
  auto sc = RootDatum::make("A3:sc");
  for (const auto& k : sc->all_kottwitz_keys()) CHECK(sc->kottwitz_key(sc->lift_kottwitz_key(k)) == k);
  for (int i = 1; i <= 3; ++i)
    CHECK(sc->kottwitz_key(vec_add(*sc->integral_fundamental_coweight(i), sc->simple_coroot(2))) ==
          sc->kottwitz_key(*sc->integral_fundamental_coweight(i)));
}
