#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adlvkit/kernels.hpp"
#include "adlvkit/linalg.hpp"

namespace adlv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// adj: cocharacter lattice spanned by the simple coroots.
// sc:  cocharacter lattice spanned by the fundamental coweights.
// gl:  Z^{rank+1} with roots e_i - e_j (type A only).
enum class LatticePreset { adjoint, simply_connected, gl };

struct CartanSpec {
  Family family = Family::A;
  int rank = 1;
  LatticePreset lattice = LatticePreset::adjoint;
  int twist_order = 1;

  // Grammar: [twist digit][family][rank]:[adj|sc|gl], e.g. "2A4:sc", "G2:sc", "A5:gl".
  static CartanSpec parse(std::string_view text);
  std::string str() const;
};

using KottwitzKey = std::vector<std::int64_t>;

struct DominantResult {
  RationalVec vector;
  Mat weyl;  // weyl applied to the input gives vector
};

class RootDatum {
 public:
  explicit RootDatum(const CartanSpec& spec);
  static std::shared_ptr<const RootDatum> make(std::string_view text);

  const CartanSpec& spec() const { return spec_; }
  std::string name() const { return spec_.str(); }
  int dim() const { return dim_; }
  int rank() const { return spec_.rank; }

  // cartan()[i][j] = <alpha_i-check, alpha_j>, 0-based.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Simple data indexed 1..rank.
  const Vec& simple_root(int i) const { return simple_roots_[i - 1]; }
  const Vec& simple_coroot(int i) const { return simple_coroots_[i - 1]; }

  const std::vector<Vec>& positive_roots() const { return pos_roots_; }
  const std::vector<Vec>& positive_coroots() const { return pos_coroots_; }
  const std::vector<int>& root_heights() const { return heights_; }
  const Vec& theta() const { return pos_roots_[theta_index_]; }
  const Vec& theta_coroot() const { return pos_coroots_[theta_index_]; }
  const Vec& two_rho() const { return two_rho_; }
  const Vec& two_rho_check() const { return two_rho_check_; }
  const RootTable& root_table() const { return table_; }

  // Coroot of a root given as covector; nullopt if the covector is not a root.
  std::optional<Vec> coroot_of(const Vec& root) const;

  const Mat& delta() const { return delta_; }
  const Mat& delta_inverse() const { return delta_inv_; }
  // Diagram permutation on 1..rank induced by delta.
  int delta_index(int i) const { return delta_perm_[i - 1]; }

  // Fundamental coweight as rational coordinates in the lattice basis.
  RationalVec fundamental_coweight(int i) const;
  std::optional<Vec> integral_fundamental_coweight(int i) const;

  // Finite Weyl group, elements kept as lattice automorphisms.
  const Mat& reflection(int i) const { return reflections_[i - 1]; }
  Mat root_reflection(const Vec& root, const Vec& coroot) const;
  Mat weyl_from_word(const std::vector<int>& word) const;
  int finite_length(const Mat& z) const;
  bool is_left_descent(const Mat& z, int i) const;  // l(s_i z) < l(z)
  std::vector<int> reduced_word(const Mat& z) const;
  Mat weyl_inverse(const Mat& z) const;
  Vec apply_weyl(const Mat& z, const Vec& v) const { return mat_apply(z, v, dim_); }
  // Action on covectors: (z a)(v) = a(z^{-1} v).
  Vec apply_weyl_covector(const Mat& z, const Vec& a) const;
  bool is_weyl_element(const Mat& m) const;

  std::int64_t pair(const Vec& v, const Vec& a) const { return dot(v, a, dim_); }
  Rational pair(const RationalVec& v, const Vec& a) const;
  Rational pair_two_rho(const RationalVec& v) const { return pair(v, two_rho_); }

  DominantResult dominant_representative(const RationalVec& v) const;
  Vec dominant_integral(const Vec& v, Mat* weyl = nullptr) const;
  bool is_dominant(const RationalVec& v) const;

  // Coefficients of v in the simple coroot basis; nullopt if v is outside their span.
  std::optional<RationalVec> coroot_coordinates(const RationalVec& v) const;
  // Indices of simple roots vanishing on v.
  std::vector<int> vanishing_simple_roots(const RationalVec& v) const;
  // Number of delta-orbits in a delta-stable set of simple indices.
  int count_delta_orbits(const std::vector<int>& indices) const;

  // Coinvariants of the lattice modulo coroots, twisted by delta.
  KottwitzKey kottwitz_key(const Vec& lambda) const;
  Vec lift_kottwitz_key(const KottwitzKey& key) const;
  bool coinvariants_finite() const;
  std::vector<KottwitzKey> all_kottwitz_keys() const;  // only when finite
  const std::vector<std::int64_t>& coinvariant_factors() const { return coinv_factors_; }

  RationalVec to_rational(const Vec& v) const;

 private:
  void build_cartan();
  void build_lattice();
  void build_roots();
  void build_delta();
  void build_coinvariants();

  CartanSpec spec_;
  int dim_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Vec> simple_roots_, simple_coroots_;
  std::vector<Vec> pos_roots_, pos_coroots_;
  std::vector<int> heights_;
  int theta_index_ = 0;
  Vec two_rho_{}, two_rho_check_{};
  RootTable table_;
  std::vector<Mat> reflections_;
  Mat delta_, delta_inv_;
  std::vector<int> delta_perm_;
  RMatrix coroot_matrix_;  // dim x rank, columns are simple coroots
  std::vector<std::int64_t> coinv_factors_;  // nontrivial Smith factors (0 = free)
  std::vector<int> coinv_rows_;              // rows of U carrying those factors
  IMatrix coinv_U_;
  Mat coinv_U_inv_;
};

}  // namespace adlv
