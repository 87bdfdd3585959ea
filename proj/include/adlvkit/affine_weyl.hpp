#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adlvkit/root_datum.hpp"

namespace adlv {

// t^translation * finite, acting on the apartment by v -> translation + finite(v).
struct AffineElement {
  Vec translation{};
  Mat finite{};
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

struct AffineElementHash {
  std::size_t operator()(const AffineElement& x) const noexcept;
};

// Lexicographic order on raw coordinates; only used for deterministic containers.
bool raw_less(const AffineElement& a, const AffineElement& b);

struct DescentTable {
  std::vector<int> left;     // -1 if l(s_i x) < l(x), else +1
  std::vector<int> right;    // -1 if l(x s_i) < l(x), else +1
  std::vector<int> twisted;  // l(s_i x sigma(s_i)) - l(x), in {-2, 0, 2}
};

class AffineWeyl {
 public:
  explicit AffineWeyl(std::shared_ptr<const RootDatum> datum);
  static std::shared_ptr<const AffineWeyl> make(std::string_view datum_text);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  int dim() const { return datum_->dim(); }
  int rank() const { return datum_->rank(); }
  // Affine simple reflections are indexed 0..rank.
  int num_simple() const { return datum_->rank() + 1; }

  AffineElement identity() const;
  AffineElement translation(const Vec& lambda) const;
  AffineElement finite(const Mat& z) const;
  const AffineElement& simple(int i) const { return simples_.at(i); }

  AffineElement multiply(const AffineElement& a, const AffineElement& b) const;
  AffineElement inverse(const AffineElement& a) const;
  AffineElement left_simple(int i, const AffineElement& x) const { return multiply(simples_[i], x); }
  AffineElement right_simple(const AffineElement& x, int i) const { return multiply(x, simples_[i]); }
  AffineElement from_word(const std::vector<int>& affine_word) const;

  int length(const AffineElement& x) const;
  bool is_left_descent(const AffineElement& x, int i) const;
  bool is_right_descent(const AffineElement& x, int i) const;
  DescentTable descents(const AffineElement& x) const;

  AffineElement sigma(const AffineElement& x) const;
  AffineElement sigma_inverse(const AffineElement& x) const;
  int sigma_index(int i) const { return sigma_perm_[i]; }

  // s_a for the affine root a = (level, gradient); gradient must be a root.
  AffineElement affine_reflection(int level, const Vec& gradient) const;

  // The length-zero element of W_a t^lambda.
  AffineElement omega_element(const Vec& lambda) const;
  // tau_i: omega element of the coset of the i-th fundamental coweight; tau_0 = 1.
  std::optional<AffineElement> tau(int i) const;
  // Index j with x = tau_j, if any.
  std::optional<int> tau_index(const AffineElement& x) const;
  bool in_affine_weyl(const AffineElement& x) const;

  // Lexicographically least reduced word in the affine simple reflections, with the
  // length-zero part: x = s_{w[0]} ... s_{w[k-1]} * omega.
  std::vector<int> reduced_affine_word(const AffineElement& x, AffineElement* omega) const;

  // Text forms. parse accepts tokens sK, tauK, t(c1,...,cn) and "1", read left to right.
  AffineElement parse(std::string_view text) const;
  std::string format(const AffineElement& x) const;       // t(...) then finite reduced word
  std::string format_word(const AffineElement& x) const;  // affine reduced word then tauK

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<AffineElement> simples_;
  std::vector<int> sigma_perm_;
  std::vector<std::optional<AffineElement>> taus_;
  LengthKernel kernel_;
};

}  // namespace adlv
