#include "adlvkit/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "adlvkit/errors.hpp"

namespace adlv {

CartanSpec CartanSpec::parse(std::string_view text) {
  CartanSpec s;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw DatumError("bad datum '" + std::string(text) + "': " + why);
  };
  if (pos < text.size() && (text[pos] == '2' || text[pos] == '3')) {
    s.twist_order = text[pos] - '0';
    ++pos;
  }
  if (pos >= text.size()) fail("missing family");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos) fail("unknown family");
  s.family = static_cast<Family>(f);
  ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) fail("missing rank");
  s.rank = std::stoi(std::string(text.substr(digits, pos - digits)));
  std::string preset = "adj";
  if (pos < text.size()) {
    if (text[pos] != ':') fail("expected ':'");
    preset = std::string(text.substr(pos + 1));
  }
  if (preset == "adj")
    s.lattice = LatticePreset::adjoint;
  else if (preset == "sc")
    s.lattice = LatticePreset::simply_connected;
  else if (preset == "gl")
    s.lattice = LatticePreset::gl;
  else
    fail("unknown lattice preset '" + preset + "'");

  const int r = s.rank;
  bool ok = false;
  switch (s.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) fail("rank out of range for family");
  if (s.lattice == LatticePreset::gl && s.family != Family::A) fail("gl preset needs type A");
  const int dim = s.lattice == LatticePreset::gl ? r + 1 : r;
  if (dim > kMaxDim) fail("lattice dimension above " + std::to_string(kMaxDim));
  if (s.twist_order == 2) {
    const bool admissible = (s.family == Family::A && r >= 2) ||
                            (s.family == Family::D && r >= 4) ||
                            (s.family == Family::E && r == 6);
    if (!admissible) fail("no order-2 diagram automorphism");
  } else if (s.twist_order == 3) {
    if (!(s.family == Family::D && r == 4)) fail("order-3 twist exists only for D4");
  }
  return s;
}

std::string CartanSpec::str() const {
  std::string out;
  if (twist_order > 1) out += std::to_string(twist_order);
  out += static_cast<char>(family);
  out += std::to_string(rank);
  out += ':';
  switch (lattice) {
    case LatticePreset::adjoint: out += "adj"; break;
    case LatticePreset::simply_connected: out += "sc"; break;
    case LatticePreset::gl: out += "gl"; break;
  }
  return out;
}

RootDatum::RootDatum(const CartanSpec& spec) : spec_(spec) {
  dim_ = spec_.lattice == LatticePreset::gl ? spec_.rank + 1 : spec_.rank;
  build_cartan();
  build_lattice();
  build_roots();
  build_delta();
  build_coinvariants();
}

std::shared_ptr<const RootDatum> RootDatum::make(std::string_view text) {
  return std::make_shared<const RootDatum>(CartanSpec::parse(text));
}

void RootDatum::build_cartan() {
  const int r = spec_.rank;
  cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simply laced edge
    cartan_[i - 1][j - 1] = -1;
    cartan_[j - 1][i - 1] = -1;
  };
  switch (spec_.family) {
    case Family::A:
      for (int i = 1; i < r; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < r; ++i) link(i, i + 1);
      cartan_[r - 1][r - 2] = -2;
      break;
    case Family::C:
      for (int i = 1; i < r; ++i) link(i, i + 1);
      cartan_[r - 2][r - 1] = -2;
      break;
    case Family::D:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < r; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(3, 4);
      cartan_[1][2] = -1;
      cartan_[2][1] = -2;
      break;
    case Family::G:
      cartan_[0][1] = -3;
      cartan_[1][0] = -1;
      break;
  }
}

void RootDatum::build_lattice() {
  const int r = spec_.rank;
  simple_roots_.assign(r, Vec{});
  simple_coroots_.assign(r, Vec{});
  for (int i = 0; i < r; ++i) {
    switch (spec_.lattice) {
      case LatticePreset::adjoint:
        simple_coroots_[i][i] = 1;
        for (int k = 0; k < r; ++k) simple_roots_[i][k] = cartan_[k][i];
        break;
      case LatticePreset::simply_connected:
        simple_roots_[i][i] = 1;
        for (int k = 0; k < r; ++k) simple_coroots_[i][k] = cartan_[i][k];
        break;
      case LatticePreset::gl:
        simple_roots_[i][i] = 1;
        simple_roots_[i][i + 1] = -1;
        simple_coroots_[i] = simple_roots_[i];
        break;
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (dot(simple_coroots_[i], simple_roots_[j], dim_) != cartan_[i][j])
        throw InvariantViolation("lattice realisation disagrees with Cartan matrix");
  coroot_matrix_.assign(dim_, RationalVec(r));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < r; ++j) coroot_matrix_[i][j] = simple_coroots_[j][i];
}

void RootDatum::build_roots() {
  const int r = spec_.rank;
  using Coeffs = std::vector<int>;
  // Roots in simple-root coordinates paired with coroots in simple-coroot coordinates.
  std::map<Coeffs, Coeffs> found;
  std::queue<Coeffs> todo;
  for (int i = 0; i < r; ++i) {
    Coeffs c(r, 0);
    c[i] = 1;
    found[c] = c;
    todo.push(c);
  }
  while (!todo.empty()) {
    const Coeffs c = todo.front();
    todo.pop();
    const Coeffs d = found[c];
    for (int j = 0; j < r; ++j) {
      int cj = 0, dj = 0;
      for (int i = 0; i < r; ++i) {
        cj += c[i] * cartan_[j][i];
        dj += d[i] * cartan_[i][j];
      }
      Coeffs c2 = c, d2 = d;
      c2[j] -= cj;
      d2[j] -= dj;
      if (found.emplace(c2, d2).second) todo.push(c2);
    }
  }
  struct Entry {
    int height;
    Coeffs c, d;
  };
  std::vector<Entry> pos;
  for (const auto& [c, d] : found) {
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }))
      pos.push_back({std::accumulate(c.begin(), c.end(), 0), c, d});
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    return a.height != b.height ? a.height < b.height : a.c < b.c;
  });
  for (const auto& e : pos) {
    Vec root{}, coroot{};
    for (int i = 0; i < r; ++i) {
      root = vec_add(root, vec_scale(simple_roots_[i], e.c[i]));
      coroot = vec_add(coroot, vec_scale(simple_coroots_[i], e.d[i]));
    }
    if (dot(coroot, root, dim_) != 2) throw InvariantViolation("root/coroot pairing is not 2");
    pos_roots_.push_back(root);
    pos_coroots_.push_back(coroot);
    heights_.push_back(e.height);
    two_rho_ = vec_add(two_rho_, root);
    two_rho_check_ = vec_add(two_rho_check_, coroot);
  }
  theta_index_ = static_cast<int>(pos_roots_.size()) - 1;
  if (pos_roots_.size() > 1 && heights_[theta_index_] == heights_[theta_index_ - 1])
    throw InvariantViolation("highest root is not unique");

  table_.dim = dim_;
  table_.count = static_cast<int>(pos_roots_.size());
  table_.coords.assign(static_cast<std::size_t>(dim_) * table_.count, 0);
  for (int k = 0; k < table_.count; ++k)
    for (int j = 0; j < dim_; ++j) table_.coords[j * table_.count + k] = pos_roots_[k][j];

  for (int i = 0; i < r; ++i)
    reflections_.push_back(root_reflection(simple_roots_[i], simple_coroots_[i]));
}

Mat RootDatum::root_reflection(const Vec& root, const Vec& coroot) const {
  // v -> v - <v, root> coroot
  Mat m = identity_matrix(dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) m.at(a, b) -= coroot[a] * root[b];
  return m;
}

void RootDatum::build_delta() {
  const int r = spec_.rank;
  delta_perm_.resize(r);
  std::iota(delta_perm_.begin(), delta_perm_.end(), 1);
  if (spec_.twist_order == 2) {
    switch (spec_.family) {
      case Family::A:
        for (int i = 1; i <= r; ++i) delta_perm_[i - 1] = r + 1 - i;
        break;
      case Family::D:
        std::swap(delta_perm_[r - 2], delta_perm_[r - 1]);
        break;
      case Family::E:
        delta_perm_ = {6, 2, 5, 4, 3, 1};
        break;
      default:
        break;
    }
  } else if (spec_.twist_order == 3) {
    delta_perm_ = {3, 2, 4, 1};
  }
  delta_ = Mat{};
  if (spec_.lattice == LatticePreset::gl) {
    if (spec_.twist_order == 1) {
      delta_ = identity_matrix(dim_);
    } else {
      for (int i = 0; i < dim_; ++i) delta_.at(dim_ - 1 - i, i) = -1;
    }
  } else {
    for (int i = 0; i < r; ++i) delta_.at(delta_perm_[i] - 1, i) = 1;
  }
  delta_inv_ = mat_inverse(delta_, dim_);
  for (int i = 1; i <= r; ++i) {
    const int j = delta_index(i);
    if (mat_apply(delta_, simple_coroot(i), dim_) != simple_coroot(j) ||
        covec_apply(simple_root(i), delta_inv_, dim_) != simple_root(j))
      throw InvariantViolation("twist does not permute simple roots");
  }
  Mat p = identity_matrix(dim_);
  for (int k = 0; k < spec_.twist_order; ++k) p = mat_mul(p, delta_, dim_);
  if (!is_identity(p, dim_)) throw InvariantViolation("twist has wrong order");
}

void RootDatum::build_coinvariants() {
  const int r = spec_.rank;
  IMatrix m(dim_, std::vector<std::int64_t>(r + dim_, 0));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = simple_coroots_[j][i];
    for (int j = 0; j < dim_; ++j) m[i][r + j] = delta_.at(i, j) - (i == j ? 1 : 0);
  }
  const SmithForm snf = smith_normal_form(m);
  coinv_U_ = snf.U;
  for (int i = 0; i < dim_; ++i) {
    if (snf.diag[i] != 1) {
      coinv_rows_.push_back(i);
      coinv_factors_.push_back(snf.diag[i]);
    }
  }
  Mat u;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) u.at(i, j) = static_cast<std::int32_t>(snf.U[i][j]);
  coinv_U_inv_ = mat_inverse(u, dim_);
}

KottwitzKey RootDatum::kottwitz_key(const Vec& lambda) const {
  KottwitzKey key;
  key.reserve(coinv_rows_.size());
  for (std::size_t k = 0; k < coinv_rows_.size(); ++k) {
    std::int64_t y = 0;
    for (int j = 0; j < dim_; ++j) y += coinv_U_[coinv_rows_[k]][j] * lambda[j];
    const std::int64_t d = coinv_factors_[k];
    if (d > 1) y = ((y % d) + d) % d;
    key.push_back(y);
  }
  return key;
}

Vec RootDatum::lift_kottwitz_key(const KottwitzKey& key) const {
  if (key.size() != coinv_rows_.size()) throw UsageError("Kottwitz key has wrong length");
  Vec y{};
  for (std::size_t k = 0; k < key.size(); ++k)
    y[coinv_rows_[k]] = static_cast<std::int32_t>(key[k]);
  return mat_apply(coinv_U_inv_, y, dim_);
}

bool RootDatum::coinvariants_finite() const {
  return std::none_of(coinv_factors_.begin(), coinv_factors_.end(),
                      [](std::int64_t d) { return d == 0; });
}

std::vector<KottwitzKey> RootDatum::all_kottwitz_keys() const {
  if (!coinvariants_finite()) throw UsageError("coinvariant group is infinite");
  std::vector<KottwitzKey> out{KottwitzKey{}};
  for (std::int64_t d : coinv_factors_) {
    std::vector<KottwitzKey> next;
    for (const auto& k : out)
      for (std::int64_t v = 0; v < d; ++v) {
        auto k2 = k;
        k2.push_back(v);
        next.push_back(std::move(k2));
      }
    out = std::move(next);
  }
  return out;
}

std::optional<Vec> RootDatum::coroot_of(const Vec& root) const {
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
    if (pos_roots_[k] == root) return pos_coroots_[k];
    if (vec_scale(pos_roots_[k], -1) == root) return vec_scale(pos_coroots_[k], -1);
  }
  return std::nullopt;
}

RationalVec RootDatum::fundamental_coweight(int i) const {
  const int r = spec_.rank;
  RationalVec out(dim_, Rational(0));
  switch (spec_.lattice) {
    case LatticePreset::simply_connected:
      out[i - 1] = 1;
      break;
    case LatticePreset::gl:
      for (int k = 0; k < i; ++k) out[k] = 1;
      break;
    case LatticePreset::adjoint: {
      RMatrix a(r, RationalVec(r));
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) a[j][k] = cartan_[k][j];
      RationalVec b(r, Rational(0));
      b[i - 1] = 1;
      out = *solve(a, b);
      break;
    }
  }
  return out;
}

std::optional<Vec> RootDatum::integral_fundamental_coweight(int i) const {
  if (i < 1 || i > spec_.rank) return std::nullopt;
  const RationalVec w = fundamental_coweight(i);
  Vec v{};
  for (int k = 0; k < dim_; ++k) {
    if (w[k].denominator() != 1) return std::nullopt;
    v[k] = static_cast<std::int32_t>(w[k].numerator());
  }
  return v;
}

Mat RootDatum::weyl_from_word(const std::vector<int>& word) const {
  Mat m = identity_matrix(dim_);
  for (int i : word) {
    if (i < 1 || i > spec_.rank) throw UsageError("finite reflection index out of range");
    m = mat_mul(m, reflections_[i - 1], dim_);
  }
  return m;
}

int RootDatum::finite_length(const Mat& z) const {
  const Vec mu = mat_apply(z, two_rho_check_, dim_);
  const Vec zero{};
  return static_cast<int>(active_length_kernel()(table_, zero.data(), mu.data()));
}

bool RootDatum::is_left_descent(const Mat& z, int i) const {
  const Vec mu = mat_apply(z, two_rho_check_, dim_);
  return dot(mu, simple_roots_[i - 1], dim_) < 0;
}

std::vector<int> RootDatum::reduced_word(const Mat& z) const {
  std::vector<int> word;
  Mat cur = z;
  const int bound = static_cast<int>(pos_roots_.size());
  for (;;) {
    int found = 0;
    for (int i = 1; i <= spec_.rank; ++i)
      if (is_left_descent(cur, i)) {
        found = i;
        break;
      }
    if (found == 0) break;
    word.push_back(found);
    cur = mat_mul(reflections_[found - 1], cur, dim_);
    if (static_cast<int>(word.size()) > bound) break;
  }
  if (!is_identity(cur, dim_)) throw ContractError("matrix is not a Weyl group element");
  return word;
}

Mat RootDatum::weyl_inverse(const Mat& z) const {
  auto word = reduced_word(z);
  std::reverse(word.begin(), word.end());
  return weyl_from_word(word);
}

bool RootDatum::is_weyl_element(const Mat& m) const {
  try {
    reduced_word(m);
    return true;
  } catch (const ContractError&) {
    return false;
  }
}

Vec RootDatum::apply_weyl_covector(const Mat& z, const Vec& a) const {
  return covec_apply(a, weyl_inverse(z), dim_);
}

Rational RootDatum::pair(const RationalVec& v, const Vec& a) const {
  Rational s(0);
  for (int i = 0; i < dim_; ++i) s += v[i] * a[i];
  return s;
}

Vec RootDatum::dominant_integral(const Vec& v, Mat* weyl) const {
  Vec cur = v;
  Mat w = identity_matrix(dim_);
  for (;;) {
    int bad = 0;
    for (int i = 1; i <= spec_.rank; ++i)
      if (dot(cur, simple_roots_[i - 1], dim_) < 0) {
        bad = i;
        break;
      }
    if (bad == 0) break;
    cur = mat_apply(reflections_[bad - 1], cur, dim_);
    w = mat_mul(reflections_[bad - 1], w, dim_);
  }
  if (weyl) *weyl = w;
  return cur;
}

DominantResult RootDatum::dominant_representative(const RationalVec& v) const {
  std::int64_t den = 1;
  for (int i = 0; i < dim_; ++i) den = std::lcm(den, v[i].denominator());
  Vec scaled{};
  for (int i = 0; i < dim_; ++i)
    scaled[i] = static_cast<std::int32_t>((v[i] * den).numerator());
  DominantResult out;
  const Vec dom = dominant_integral(scaled, &out.weyl);
  out.vector.resize(dim_);
  for (int i = 0; i < dim_; ++i) out.vector[i] = Rational(dom[i], den);
  return out;
}

bool RootDatum::is_dominant(const RationalVec& v) const {
  for (int i = 1; i <= spec_.rank; ++i)
    if (pair(v, simple_root(i)) < 0) return false;
  return true;
}

std::optional<RationalVec> RootDatum::coroot_coordinates(const RationalVec& v) const {
  return solve(coroot_matrix_, v);
}

std::vector<int> RootDatum::vanishing_simple_roots(const RationalVec& v) const {
  std::vector<int> out;
  for (int i = 1; i <= spec_.rank; ++i)
    if (pair(v, simple_root(i)) == 0) out.push_back(i);
  return out;
}

int RootDatum::count_delta_orbits(const std::vector<int>& indices) const {
  std::set<int> left(indices.begin(), indices.end());
  int orbits = 0;
  while (!left.empty()) {
    int i = *left.begin();
    ++orbits;
    while (left.erase(i)) i = delta_index(i);
  }
  return orbits;
}

RationalVec RootDatum::to_rational(const Vec& v) const {
  RationalVec out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = v[i];
  return out;
}

}  // namespace adlv
