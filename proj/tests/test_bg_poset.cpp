#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adlvkit/bg_poset.hpp"
#include "adlvkit/errors.hpp"

using namespace adlv;

TEST_CASE("rank one classes") {
  auto g = AffineWeyl::make("A1");
  BgPoset p(g);
  const auto recs = p.enumerate_straight(Rational(4), std::nullopt);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].invariant.pairing_2rho == Rational(0));
  CHECK(recs[1].invariant.pairing_2rho == Rational(2));
  CHECK(recs[2].invariant.pairing_2rho == Rational(4));
  for (const auto& r : recs) {
    CHECK(is_straight(*g, r.witness));
    CHECK(class_invariant(*g, r.witness) == r.invariant);
    CHECK(r.defect == 0);
  }
  const auto& basic = recs[0].invariant;
  const auto& one = recs[1].invariant;
  CHECK(p.leq(basic, one));
  CHECK_FALSE(p.leq(one, basic));
  CHECK(p.chain_length(basic, one) == 1);
  CHECK(p.essential_gap(basic, one) == 1);
  CHECK(p.chain_length(basic, recs[2].invariant) == 2);
  CHECK(p.interval(basic, recs[2].invariant).size() == 3);
  const auto [lo, hi] = p.extrema({one, basic, recs[2].invariant});
  CHECK(lo == basic);
  CHECK(hi == recs[2].invariant);
}

TEST_CASE("partial order axioms and additive chains") {
  for (const char* name : {"A2", "A2:sc", "C2:sc", "G2:sc", "2A3:sc", "2A4:sc"}) {
    CAPTURE(name);
    auto g = AffineWeyl::make(name);
    BgPoset p(g);
    const auto recs = p.enumerate_straight(Rational(8), std::nullopt);
    CHECK(recs.size() > 2);
    for (const auto& a : recs) {
      CHECK(p.leq(a.invariant, a.invariant));
      CHECK(p.defect(a.invariant) == a.defect);
      CHECK(a.defect >= 0);
      CHECK(a.defect <= g->rank());
      for (const auto& b : recs) {
        if (p.leq(a.invariant, b.invariant) && p.leq(b.invariant, a.invariant))
          CHECK(a.invariant == b.invariant);
        if (!p.leq(a.invariant, b.invariant)) continue;
        const auto ab = p.chain_length(a.invariant, b.invariant);
        CHECK(ab >= 0);
        CHECK(p.essential_gap(a.invariant, b.invariant) >= 0);
        for (const auto& c : recs) {
          if (!p.leq(b.invariant, c.invariant)) continue;
          CHECK(p.leq(a.invariant, c.invariant));
          CHECK(p.chain_length(a.invariant, c.invariant) ==
                ab + p.chain_length(b.invariant, c.invariant));
        }
      }
    }
    CHECK(p.straight_elements_seen() > 0);
  }
}

TEST_CASE("defect of basic classes") {
  // The trivial class of the twisted A4 is the quasi-split form itself.
  auto a4 = AffineWeyl::make("2A4:sc");
  BgPoset p4(a4);
  const auto recs = p4.enumerate_straight(Rational(0), std::nullopt);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].defect == 0);
  // GL6 with slope 1/2: centralizer is GL3 over a quaternion algebra, defect 3.
  auto gl = AffineWeyl::make("A5:gl");
  BgPoset pg(gl);
  const auto c = class_invariant(*gl, gl->parse("s4 tau3"));
  CHECK(pg.defect(c) == 3);
  // A1 with nontrivial Kottwitz point: basic class is the quaternion one, defect 1.
  auto a1 = AffineWeyl::make("A1:sc");
  BgPoset p1(a1);
  CHECK(p1.defect(class_invariant(*a1, *a1->tau(1))) == 1);
}

TEST_CASE("contract errors") {
  auto g = AffineWeyl::make("A2:sc");
  BgPoset p(g);
  const auto a = class_invariant(*g, g->identity());
  const auto b = class_invariant(*g, *g->tau(1));
  CHECK_FALSE(p.leq(a, b));
  CHECK_THROWS_AS(p.chain_length(a, b), NotComparable);
  CHECK_THROWS_AS(p.extrema({a, b}), NoExtremum);
  auto gl = AffineWeyl::make("A2:gl");
  BgPoset pg(gl);
  CHECK_THROWS_AS(pg.enumerate_straight(Rational(2), std::nullopt), UsageError);
  CHECK(pg.enumerate_straight(Rational(2), class_invariant(*gl, gl->identity()).kottwitz).size() >= 1);
}
