#include "adlvkit/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "adlvkit/errors.hpp"

namespace adlv {

Mat identity_matrix(int n) {
  Mat m;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat c;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::int32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mat_apply(const Mat& m, const Vec& v, int n) {
  Vec r{};
  for (int i = 0; i < n; ++i) {
    std::int32_t s = 0;
    for (int j = 0; j < n; ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Vec covec_apply(const Vec& a, const Mat& m, int n) {
  Vec r{};
  for (int j = 0; j < n; ++j) {
    std::int32_t s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * m.at(i, j);
    r[j] = s;
  }
  return r;
}

Mat mat_sub_identity(const Mat& m, int n) {
  Mat r = m;
  for (int i = 0; i < n; ++i) r.at(i, i) -= 1;
  return r;
}

bool is_identity(const Mat& m, int n) { return m == identity_matrix(n); }

Mat mat_inverse(const Mat& m, int n) {
  RMatrix a(n, RationalVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  auto inv = inverse(a);
  if (!inv) throw InvariantViolation("singular lattice automorphism");
  Mat r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& q = (*inv)[i][j];
      if (q.denominator() != 1) throw InvariantViolation("non-integral inverse");
      r.at(i, j) = static_cast<std::int32_t>(q.numerator());
    }
  return r;
}

std::int64_t dot(const Vec& v, const Vec& a, int n) {
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) s += static_cast<std::int64_t>(v[i]) * a[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Vec& a, std::int32_t k) {
  Vec r;
  for (int i = 0; i < kMaxDim; ++i) r[i] = a[i] * k;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int32_t x) { return x == 0; });
}

namespace {

// Row echelon form in place; returns the pivot columns.
std::vector<int> echelon(RMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RMatrix m) { return static_cast<int>(echelon(m).size()); }

int rank(const IMatrix& m) {
  RMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) r.emplace_back(row.begin(), row.end());
  return rank(std::move(r));
}

std::optional<RationalVec> solve(const RMatrix& a, const RationalVec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  RMatrix aug(rows, RationalVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  const auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVec x(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

std::optional<RMatrix> inverse(const RMatrix& a) {
  const int n = static_cast<int>(a.size());
  RMatrix aug(n, RationalVec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  RMatrix inv(n, RationalVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

SmithForm smith_normal_form(const IMatrix& input) {
  IMatrix a = input;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  SmithForm out;
  out.U.assign(rows, std::vector<std::int64_t>(rows, 0));
  out.V.assign(cols, std::vector<std::int64_t>(cols, 0));
  for (int i = 0; i < rows; ++i) out.U[i][i] = 1;
  for (int j = 0; j < cols; ++j) out.V[j][j] = 1;
  IMatrix& U = out.U;
  IMatrix& V = out.V;

  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
  };
  auto add_row = [&](int dst, int src, std::int64_t f) {  // row dst += f * row src
    for (int j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    for (int j = 0; j < rows; ++j) U[dst][j] += f * U[src][j];
  };
  auto add_col = [&](int dst, int src, std::int64_t f) {
    for (int i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
    for (int i = 0; i < cols; ++i) V[i][dst] += f * V[i][src];
  };

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      std::int64_t best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pr = i;
            pc = j;
          }
      if (pr < 0) break;
      if (pr != t) swap_rows(pr, t);
      if (pc != t) swap_cols(pc, t);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(t, bad, 1);
    }
    if (a[t][t] < 0) {
      for (int j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (int j = 0; j < rows; ++j) U[t][j] = -U[t][j];
    }
  }
  out.diag.resize(steps);
  for (int t = 0; t < steps; ++t) out.diag[t] = a[t][t];
  return out;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'", 0);
  }
}

}  // namespace adlv
