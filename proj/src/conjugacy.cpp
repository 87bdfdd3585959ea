#include "adlvkit/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "adlvkit/errors.hpp"

namespace adlv {

ShiftMove cyclic_shift(const AffineWeyl& g, const AffineElement& x, int i) {
  if (i < 0 || i >= g.num_simple()) throw UsageError("simple index out of range");
  const AffineElement y = g.multiply(g.left_simple(i, x), g.simple(g.sigma_index(i)));
  const int d = g.length(y) - g.length(x);
  if (d == 2) throw ContractError("move s" + std::to_string(i) + " increases length");
  if (d != 0 && d != -2)
    throw InvariantViolation("double move changed length by " + std::to_string(d));
  return {i, x, y, d};
}

std::vector<int> ShiftClass::path_to(int member) const {
  std::vector<int> path;
  for (int k = member; parent[k] >= 0; k = parent[k]) path.push_back(move_index[k]);
  std::reverse(path.begin(), path.end());
  return path;
}

ShiftClass shift_class(const AffineWeyl& g, const AffineElement& x, std::size_t cap,
                       const std::vector<int>* order) {
  std::vector<int> idx(g.num_simple());
  std::iota(idx.begin(), idx.end(), 0);
  if (order) idx = *order;
  ShiftClass sc;
  std::unordered_map<AffineElement, int, AffineElementHash> seen;
  sc.members.push_back(x);
  sc.parent.push_back(-1);
  sc.move_index.push_back(-1);
  seen.emplace(x, 0);
  const int l = g.length(x);
  for (std::size_t head = 0; head < sc.members.size(); ++head) {
    const AffineElement cur = sc.members[head];
    for (int i : idx) {
      const AffineElement y = g.multiply(g.left_simple(i, cur), g.simple(g.sigma_index(i)));
      if (g.length(y) != l) continue;
      if (seen.emplace(y, static_cast<int>(sc.members.size())).second) {
        if (sc.members.size() >= cap) throw CapExceeded("shift-class search", cap);
        sc.members.push_back(y);
        sc.parent.push_back(static_cast<int>(head));
        sc.move_index.push_back(i);
      }
    }
  }
  return sc;
}

MinLenResult is_min_len(const AffineWeyl& g, const AffineElement& x, std::size_t cap) {
  const ShiftClass sc = shift_class(g, x, cap);
  MinLenResult r;
  for (std::size_t k = 0; k < sc.members.size(); ++k) {
    const AffineElement& w = sc.members[k];
    const int l = g.length(w);
    for (int i = 0; i < g.num_simple(); ++i) {
      const AffineElement y = g.multiply(g.left_simple(i, w), g.simple(g.sigma_index(i)));
      if (g.length(y) < l) {
        r.min_len = false;
        r.shifts = sc.path_to(static_cast<int>(k));
        r.decreasing_index = i;
        r.shorter = y;
        return r;
      }
    }
  }
  return r;
}

namespace {

// Order of z delta as a lattice automorphism.
int twisted_order(const RootDatum& d, const Mat& zd) {
  Mat p = zd;
  for (int k = 1; k <= 10000; ++k) {
    if (is_identity(p, d.dim())) return k;
    p = mat_mul(p, zd, d.dim());
  }
  throw InvariantViolation("twisted finite part has no finite order");
}

}  // namespace

RationalVec newton_point(const AffineWeyl& g, const AffineElement& x) {
  const RootDatum& d = g.datum();
  const int n = d.dim();
  const Mat zd = mat_mul(x.finite, d.delta(), n);
  const int order = twisted_order(d, zd);
  // (x sigma)^order = t^S with S = sum_k (z delta)^k lambda.
  Vec s{};
  Vec term = x.translation;
  for (int k = 0; k < order; ++k) {
    s = vec_add(s, term);
    term = mat_apply(zd, term, n);
  }
  const Vec dom = d.dominant_integral(s);
  RationalVec nu(n);
  for (int i = 0; i < n; ++i) nu[i] = Rational(dom[i], order);
  return nu;
}

KottwitzKey kottwitz_point(const AffineWeyl& g, const AffineElement& x) {
  return g.datum().kottwitz_key(x.translation);
}

bool is_straight(const AffineWeyl& g, const AffineElement& x) {
  return Rational(g.length(x)) == g.datum().pair_two_rho(newton_point(g, x));
}

namespace {

int fixed_dimension(const RootDatum& d, const Mat& m, const std::vector<Vec>& basis) {
  IMatrix img(d.dim(), std::vector<std::int64_t>(basis.size()));
  const Mat a = mat_sub_identity(m, d.dim());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Vec v = mat_apply(a, basis[c], d.dim());
    for (int r = 0; r < d.dim(); ++r) img[r][c] = v[r];
  }
  IMatrix span(d.dim(), std::vector<std::int64_t>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (int r = 0; r < d.dim(); ++r) span[r][c] = basis[c][r];
  return rank(span) - rank(img);
}

}  // namespace

int reflection_length_on(const RootDatum& d, const Mat& z, const Mat& twist,
                         const std::vector<Vec>& basis) {
  return fixed_dimension(d, twist, basis) - fixed_dimension(d, mat_mul(z, twist, d.dim()), basis);
}

int reflection_length(const RootDatum& d, const Mat& z, const Mat& twist) {
  std::vector<Vec> basis(d.dim(), Vec{});
  for (int i = 0; i < d.dim(); ++i) basis[i][i] = 1;
  return reflection_length_on(d, z, twist, basis);
}

bool operator<(const ClassInvariant& a, const ClassInvariant& b) {
  if (a.pairing_2rho != b.pairing_2rho) return a.pairing_2rho < b.pairing_2rho;
  if (a.kottwitz != b.kottwitz) return a.kottwitz < b.kottwitz;
  return a.newton < b.newton;
}

ClassInvariant make_class_invariant(const RootDatum& d, RationalVec newton, KottwitzKey kottwitz) {
  ClassInvariant c;
  c.pairing_2rho = d.pair_two_rho(newton);
  c.newton = std::move(newton);
  c.kottwitz = std::move(kottwitz);
  return c;
}

ClassInvariant class_invariant(const AffineWeyl& g, const AffineElement& x) {
  return make_class_invariant(g.datum(), newton_point(g, x), kottwitz_point(g, x));
}

bool same_class(const AffineWeyl& g, const AffineElement& x, const AffineElement& y) {
  return class_invariant(g, x) == class_invariant(g, y);
}

std::string describe(const ClassInvariant& c) {
  std::string out = "nu=(";
  for (std::size_t i = 0; i < c.newton.size(); ++i) {
    if (i) out += ',';
    out += to_string(c.newton[i]);
  }
  out += ") kappa=(";
  for (std::size_t i = 0; i < c.kottwitz.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.kottwitz[i]);
  }
  return out + ")";
}

}  // namespace adlv
