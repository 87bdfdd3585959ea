#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74 recurses forever when comparing rational<int64_t> with a plain int;
// these exact-match overloads take precedence over its templates.
namespace boost {
#define ADLV_RATIONAL_INT_CMP(op)                                                      \
  inline bool operator op(const rational<std::int64_t>& a, int b) {                   \
    return a op rational<std::int64_t>(b);                                             \
  }                                                                                    \
  inline bool operator op(int a, const rational<std::int64_t>& b) {                   \
    return rational<std::int64_t>(a) op b;                                             \
  }
ADLV_RATIONAL_INT_CMP(==)
ADLV_RATIONAL_INT_CMP(!=)
ADLV_RATIONAL_INT_CMP(<)
ADLV_RATIONAL_INT_CMP(>)
ADLV_RATIONAL_INT_CMP(<=)
ADLV_RATIONAL_INT_CMP(>=)
#undef ADLV_RATIONAL_INT_CMP
}  // namespace boost

namespace adlv {

inline constexpr int kMaxDim = 8;

using Rational = boost::rational<std::int64_t>;
using RationalVec = std::vector<Rational>;

// Lattice vectors and covectors share one fixed-size representation; entries past
// the lattice dimension stay zero so that comparisons and hashes are well defined.
using Vec = std::array<std::int32_t, kMaxDim>;

struct Mat {
  std::array<std::int32_t, kMaxDim * kMaxDim> e{};

  std::int32_t& at(int r, int c) { return e[r * kMaxDim + c]; }
  std::int32_t at(int r, int c) const { return e[r * kMaxDim + c]; }
  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat identity_matrix(int n);
Mat mat_mul(const Mat& a, const Mat& b, int n);
Vec mat_apply(const Mat& m, const Vec& v, int n);
// Row covector times matrix: the covector a o m.
Vec covec_apply(const Vec& a, const Mat& m, int n);
Mat mat_sub_identity(const Mat& m, int n);
bool is_identity(const Mat& m, int n);
// Exact inverse of an integer matrix with integer inverse; throws otherwise.
Mat mat_inverse(const Mat& m, int n);

std::int64_t dot(const Vec& v, const Vec& a, int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, std::int32_t k);
bool is_zero(const Vec& v);

using RMatrix = std::vector<RationalVec>;
using IMatrix = std::vector<std::vector<std::int64_t>>;

int rank(RMatrix m);
int rank(const IMatrix& m);
// Solves A x = b exactly (A given as rows). Returns nullopt when inconsistent.
std::optional<RationalVec> solve(const RMatrix& a, const RationalVec& b);
std::optional<RMatrix> inverse(const RMatrix& a);

// U * A * V = diag(d), U and V unimodular, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IMatrix U;
  IMatrix V;
  std::vector<std::int64_t> diag;  // length min(rows, cols)
};
SmithForm smith_normal_form(const IMatrix& a);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace adlv
