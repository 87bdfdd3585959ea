#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adlvkit/affine_weyl.hpp"

namespace adlv {

inline constexpr std::size_t kDefaultBfsCap = 1'000'000;

struct ShiftMove {
  int index;
  AffineElement before;
  AffineElement after;  // s_i before sigma(s_i)
  int length_change;    // 0 or -2
};

// One length-nonincreasing move; throws ContractError when the move would lengthen.
ShiftMove cyclic_shift(const AffineWeyl& g, const AffineElement& x, int i);

// Elements reachable by length-preserving moves, in breadth-first order.
struct ShiftClass {
  std::vector<AffineElement> members;
  std::vector<int> parent;      // index of predecessor, -1 for the start
  std::vector<int> move_index;  // simple index used to reach the member
  std::vector<int> path_to(int member) const;  // simple indices from the start
};

ShiftClass shift_class(const AffineWeyl& g, const AffineElement& x,
                       std::size_t cap = kDefaultBfsCap,
                       const std::vector<int>* order = nullptr);

struct MinLenResult {
  bool min_len = true;
  std::vector<int> shifts;  // moves from x to the element that admits a decrease
  int decreasing_index = -1;
  std::optional<AffineElement> shorter;
};
MinLenResult is_min_len(const AffineWeyl& g, const AffineElement& x,
                        std::size_t cap = kDefaultBfsCap);

RationalVec newton_point(const AffineWeyl& g, const AffineElement& x);
KottwitzKey kottwitz_point(const AffineWeyl& g, const AffineElement& x);
bool is_straight(const AffineWeyl& g, const AffineElement& x);

// dim V^twist - dim V^(z twist), V the rational span of the lattice.
int reflection_length(const RootDatum& d, const Mat& z, const Mat& twist);
// Same on the subspace spanned by the given vectors (which z and twist must preserve).
int reflection_length_on(const RootDatum& d, const Mat& z, const Mat& twist,
                         const std::vector<Vec>& basis);

struct ClassInvariant {
  RationalVec newton;  // dominant
  KottwitzKey kottwitz;
  Rational pairing_2rho{0};

  friend bool operator==(const ClassInvariant& a, const ClassInvariant& b) {
    return a.newton == b.newton && a.kottwitz == b.kottwitz;
  }
  // Sorted by <nu, 2 rho>, then Kottwitz key, then Newton coordinates.
  friend bool operator<(const ClassInvariant& a, const ClassInvariant& b);
};

ClassInvariant make_class_invariant(const RootDatum& d, RationalVec newton, KottwitzKey kottwitz);
ClassInvariant class_invariant(const AffineWeyl& g, const AffineElement& x);
bool same_class(const AffineWeyl& g, const AffineElement& x, const AffineElement& y);
std::string describe(const ClassInvariant& c);

}  // namespace adlv
