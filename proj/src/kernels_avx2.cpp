#include <immintrin.h>

#include <cstdlib>

#include "adlvkit/kernels.hpp"

namespace adlv {

std::int64_t length_kernel_avx2(const RootTable& t, const std::int32_t* lambda,
                                const std::int32_t* mu) {
  const int n = t.count;
  const std::int32_t* base = t.coords.data();
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi32(1);
  int k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i p = zero, q = zero;
    for (int j = 0; j < t.dim; ++j) {
      const __m256i c =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + j * n + k));
      p = _mm256_add_epi32(p, _mm256_mullo_epi32(c, _mm256_set1_epi32(lambda[j])));
      q = _mm256_add_epi32(q, _mm256_mullo_epi32(c, _mm256_set1_epi32(mu[j])));
    }
    const __m256i pos = _mm256_cmpgt_epi32(q, zero);
    const __m256i a = _mm256_abs_epi32(p);
    const __m256i b = _mm256_abs_epi32(_mm256_sub_epi32(p, one));
    acc = _mm256_add_epi32(acc, _mm256_blendv_epi8(b, a, pos));
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t total = 0;
  for (std::int32_t v : lanes) total += v;
  for (; k < n; ++k) {
    std::int32_t p = 0, q = 0;
    for (int j = 0; j < t.dim; ++j) {
      const std::int32_t c = base[j * n + k];
      p += c * lambda[j];
      q += c * mu[j];
    }
    total += q > 0 ? std::abs(p) : std::abs(p - 1);
  }
  return total;
}

}  // namespace adlv
