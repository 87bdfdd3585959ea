#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlvkit/bg_poset.hpp"
#include "adlvkit/reduction_tree.hpp"

namespace adlv {

struct Caps {
  std::size_t bfs = kDefaultBfsCap;
  std::size_t enumeration = kDefaultEnumBudget;
};

// All proper subsets of the affine simple indices, by size then lexicographically.
std::vector<std::vector<int>> spherical_subsets(const AffineWeyl& g);

struct CosetDecomposition {
  AffineElement u;           // in W_K
  AffineElement x;           // minimal in W_K w, also minimal in x W_sigma(K)
  std::vector<int> u_word;   // reduced word of u in K
  std::map<int, int> twist;  // i -> j with x sigma(s_i) x^{-1} = s_j
};

// w = u x with the normalising conditions on x; nullopt if they fail.
std::optional<CosetDecomposition> coset_decompose(const AffineWeyl& g, const AffineElement& w,
                                                  const std::vector<int>& K);

// Whether u in W_K is a product of one simple reflection from each orbit of
// Ad(x) o sigma on K.
bool is_twisted_coxeter(const AffineWeyl& g, const AffineElement& u, const std::vector<int>& K,
                        const AffineElement& x);

struct MinCoxWitness {
  std::vector<int> K;
  AffineElement member;       // element of the shift class equal to c_K x
  AffineElement x;
  AffineElement c_K;
  std::vector<int> c_word;
  std::vector<int> shifts;    // length-preserving moves from w to member
};

// Requires w of minimal length.
std::optional<MinCoxWitness> is_minimal_coxeter_type(const AffineWeyl& g, const AffineElement& w,
                                                     std::size_t cap = kDefaultBfsCap);

// Twisted reflection length of u in W_K for the twist Ad(x) o sigma, on the span of
// the coroots of cl(K).
int parabolic_reflection_length(const AffineWeyl& g, const AffineElement& u,
                                const std::vector<int>& K, const AffineElement& x);

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::size_t nodes = 0;
  std::size_t paths = 0;
  bool smo = true;
  std::optional<ClassInvariant> smo_offender;
  bool endpoints_min_cox = true;
  std::vector<std::string> non_min_cox_endpoints;
  // (class, count_I, count_II) for every path, sorted.
  std::vector<std::tuple<ClassInvariant, int, int>> signature;
};

struct ClassRow {
  ClassInvariant cls;
  int defect = 0;
  std::vector<std::pair<int, int>> path_counts;  // (I, II) per path, sorted
  Rational ell1{0}, ell2{0}, dim{0};             // closed formulas
  int ell1_orbit_diff = 0;                        // orbits of I(nu_min) not in I(nu_c); diagnostic
  int tree_dim = 0;                              // max over paths of I + II + dim of endpoint
  std::int64_t chain_to_max = 0;
  std::optional<std::int64_t> essential_gap_to_max;
  std::string shape;
};

struct HelperCheck {
  std::string node;
  bool applicable = false;  // node has SMO and its three sets are saturated
  bool min_follows_type_II = false;
  bool max_follows_type_I = false;
  bool single_orbit_drop = false;
  bool holds() const { return min_follows_type_II && max_follows_type_I && single_orbit_drop; }
};

struct PurityReport {
  bool saturated = false;
  std::vector<ClassInvariant> missing;  // in the interval but not met
  std::vector<HelperCheck> helpers;
};

struct MctInequality {
  Rational lhs{0};
  Rational rhs{0};
  Rational slack{0};
  bool equality = false;
};

struct ClassificationReport {
  std::string datum;
  std::string element;
  std::string word;
  int length = 0;
  bool min_len = false;
  MinLenResult min_len_certificate;
  bool straight = false;
  ClassInvariant own_class;
  int reflection_length = 0;  // of cl(w) for the twist
  std::optional<MinCoxWitness> min_cox;
  bool smo = false;           // in every seed
  bool geometric_coxeter = false;
  std::vector<SeedOutcome> seeds;
  std::vector<ClassRow> rows;  // from the first seed
  ClassInvariant b_min, b_max;
  PurityReport purity;
  MctInequality mct;
  std::vector<std::string> findings;
};

// Holds per-thread memo tables; share the poset across threads.
class Classifier {
 public:
  Classifier(std::shared_ptr<const AffineWeyl> g, std::shared_ptr<const BgPoset> poset,
             Caps caps = {});

  const AffineWeyl& group() const { return *g_; }
  const BgPoset& poset() const { return *poset_; }

  ClassificationReport classify(const AffineElement& w, const std::vector<std::uint64_t>& seeds);

  const std::optional<MinCoxWitness>& min_cox(const AffineElement& w);
  const ReductionTree& tree(const AffineElement& w, std::uint64_t seed);
  bool strong_multiplicity_one(const AffineElement& w, std::uint64_t seed,
                               std::optional<ClassInvariant>* offender = nullptr);
  bool geometric_coxeter_type(const AffineElement& w, const std::vector<std::uint64_t>& seeds);

  // Closed formulas; c must lie in B(G)_w (computed with seed 0).
  Rational dim_formula(const AffineElement& w, const ClassInvariant& c);
  std::pair<Rational, Rational> ell_formulas(const AffineElement& w, const ClassInvariant& c);
  std::string shape(const AffineElement& w, const ClassInvariant& c);
  PurityReport purity_report(const AffineElement& w);
  MctInequality mct_inequality(const AffineElement& w);

 private:
  struct Formulas {
    Rational ell1, ell2, dim;
    int ell1_orbit_diff = 0;
  };
  Formulas formulas(const AffineElement& w, const BgwMap& m, const ClassInvariant& c);
  std::vector<ClassInvariant> classes_below(const ReductionTree& t, int node);
  const BgwMap& bgw_seed0(const AffineElement& w);
  std::string shape_for(const ReductionTree& t, const ReductionPath& p, const Formulas& f);

  std::shared_ptr<const AffineWeyl> g_;
  std::shared_ptr<const BgPoset> poset_;
  Caps caps_;
  MoveCache moves_;
  std::unordered_map<AffineElement, std::optional<MinCoxWitness>, AffineElementHash> mct_memo_;
  std::unordered_map<AffineElement, std::unordered_map<std::uint64_t, ReductionTree>,
                     AffineElementHash>
      tree_memo_;
  std::unordered_map<AffineElement, BgwMap, AffineElementHash> bgw_memo_;
};

std::vector<std::uint64_t> default_seeds();

}  // namespace adlv
