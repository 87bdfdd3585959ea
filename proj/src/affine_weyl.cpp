#include "adlvkit/affine_weyl.hpp"

#include <algorithm>

#include "adlvkit/errors.hpp"

namespace adlv {

std::size_t AffineElementHash::operator()(const AffineElement& x) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int32_t v) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ULL;
  };
  for (std::int32_t v : x.translation) mix(v);
  for (std::int32_t v : x.finite.e) mix(v);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool raw_less(const AffineElement& a, const AffineElement& b) {
  if (a.translation != b.translation) return a.translation < b.translation;
  return a.finite.e < b.finite.e;
}

AffineWeyl::AffineWeyl(std::shared_ptr<const RootDatum> datum)
    : datum_(std::move(datum)), kernel_(active_length_kernel()) {
  const RootDatum& d = *datum_;
  simples_.push_back(affine_reflection(1, d.theta()));
  for (int i = 1; i <= d.rank(); ++i) simples_.push_back(finite(d.reflection(i)));
  sigma_perm_.push_back(0);
  for (int i = 1; i <= d.rank(); ++i) sigma_perm_.push_back(d.delta_index(i));
  for (int i = 0; i < num_simple(); ++i)
    if (sigma(simples_[i]) != simples_[sigma_perm_[i]])
      throw InvariantViolation("twist does not permute affine simple reflections");
  taus_.push_back(identity());
  for (int i = 1; i <= d.rank(); ++i) {
    auto w = d.integral_fundamental_coweight(i);
    taus_.push_back(w ? std::optional<AffineElement>(omega_element(*w)) : std::nullopt);
  }
}

std::shared_ptr<const AffineWeyl> AffineWeyl::make(std::string_view datum_text) {
  return std::make_shared<const AffineWeyl>(RootDatum::make(datum_text));
}

AffineElement AffineWeyl::identity() const { return finite(identity_matrix(dim())); }

AffineElement AffineWeyl::translation(const Vec& lambda) const {
  AffineElement x = identity();
  x.translation = lambda;
  return x;
}

AffineElement AffineWeyl::finite(const Mat& z) const {
  AffineElement x;
  x.finite = z;
  return x;
}

AffineElement AffineWeyl::multiply(const AffineElement& a, const AffineElement& b) const {
  const int n = dim();
  AffineElement c;
  c.translation = vec_add(a.translation, mat_apply(a.finite, b.translation, n));
  c.finite = mat_mul(a.finite, b.finite, n);
  return c;
}

AffineElement AffineWeyl::inverse(const AffineElement& a) const {
  AffineElement r;
  r.finite = datum_->weyl_inverse(a.finite);
  r.translation = vec_scale(mat_apply(r.finite, a.translation, dim()), -1);
  return r;
}

AffineElement AffineWeyl::from_word(const std::vector<int>& affine_word) const {
  AffineElement x = identity();
  for (int i : affine_word) {
    if (i < 0 || i >= num_simple()) throw UsageError("affine simple index out of range");
    x = multiply(x, simples_[i]);
  }
  return x;
}

int AffineWeyl::length(const AffineElement& x) const {
  const Vec mu = mat_apply(x.finite, datum_->two_rho_check(), dim());
  return static_cast<int>(kernel_(datum_->root_table(), x.translation.data(), mu.data()));
}

bool AffineWeyl::is_left_descent(const AffineElement& x, int i) const {
  return length(left_simple(i, x)) < length(x);
}

bool AffineWeyl::is_right_descent(const AffineElement& x, int i) const {
  return length(right_simple(x, i)) < length(x);
}

DescentTable AffineWeyl::descents(const AffineElement& x) const {
  DescentTable t;
  const int l = length(x);
  for (int i = 0; i < num_simple(); ++i) {
    const AffineElement sx = left_simple(i, x);
    t.left.push_back(length(sx) < l ? -1 : 1);
    t.right.push_back(length(right_simple(x, i)) < l ? -1 : 1);
    const int d = length(multiply(sx, simples_[sigma_perm_[i]])) - l;
    if (d != -2 && d != 0 && d != 2)
      throw InvariantViolation("double move changed length by " + std::to_string(d));
    t.twisted.push_back(d);
  }
  return t;
}

AffineElement AffineWeyl::sigma(const AffineElement& x) const {
  const RootDatum& d = *datum_;
  AffineElement r;
  r.translation = mat_apply(d.delta(), x.translation, dim());
  r.finite = mat_mul(mat_mul(d.delta(), x.finite, dim()), d.delta_inverse(), dim());
  return r;
}

AffineElement AffineWeyl::sigma_inverse(const AffineElement& x) const {
  const RootDatum& d = *datum_;
  AffineElement r;
  r.translation = mat_apply(d.delta_inverse(), x.translation, dim());
  r.finite = mat_mul(mat_mul(d.delta_inverse(), x.finite, dim()), d.delta(), dim());
  return r;
}

AffineElement AffineWeyl::affine_reflection(int level, const Vec& gradient) const {
  const auto coroot = datum_->coroot_of(gradient);
  if (!coroot) throw ContractError("gradient is not a root");
  AffineElement x;
  x.translation = vec_scale(*coroot, level);
  x.finite = datum_->root_reflection(gradient, *coroot);
  return x;
}

AffineElement AffineWeyl::omega_element(const Vec& lambda) const {
  AffineElement x = translation(lambda);
  int l = length(x);
  while (l > 0) {
    bool moved = false;
    for (int i = 0; i < num_simple(); ++i) {
      AffineElement y = left_simple(i, x);
      const int ly = length(y);
      if (ly < l) {
        x = y;
        l = ly;
        moved = true;
        break;
      }
    }
    if (!moved) throw InvariantViolation("positive-length element without a left descent");
  }
  return x;
}

std::optional<AffineElement> AffineWeyl::tau(int i) const {
  if (i < 0 || i >= static_cast<int>(taus_.size())) return std::nullopt;
  return taus_[i];
}

std::optional<int> AffineWeyl::tau_index(const AffineElement& x) const {
  for (std::size_t i = 0; i < taus_.size(); ++i)
    if (taus_[i] && *taus_[i] == x) return static_cast<int>(i);
  return std::nullopt;
}

bool AffineWeyl::in_affine_weyl(const AffineElement& x) const {
  const auto c = datum_->coroot_coordinates(datum_->to_rational(x.translation));
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.denominator() == 1; });
}

std::vector<int> AffineWeyl::reduced_affine_word(const AffineElement& x,
                                                 AffineElement* omega) const {
  std::vector<int> word;
  AffineElement cur = x;
  int l = length(cur);
  while (l > 0) {
    bool moved = false;
    for (int i = 0; i < num_simple(); ++i) {
      AffineElement y = left_simple(i, cur);
      const int ly = length(y);
      if (ly < l) {
        word.push_back(i);
        cur = y;
        l = ly;
        moved = true;
        break;
      }
    }
    if (!moved) throw InvariantViolation("positive-length element without a left descent");
  }
  if (omega) *omega = cur;
  return word;
}

}  // namespace adlv
