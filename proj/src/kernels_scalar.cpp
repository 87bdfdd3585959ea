#include <cstdlib>

#include "adlvkit/kernels.hpp"

namespace adlv {

std::int64_t length_kernel_scalar(const RootTable& t, const std::int32_t* lambda,
                                  const std::int32_t* mu) {
  std::int64_t total = 0;
  for (int k = 0; k < t.count; ++k) {
    std::int32_t p = 0, q = 0;
    for (int j = 0; j < t.dim; ++j) {
      const std::int32_t c = t.coords[j * t.count + k];
      p += c * lambda[j];
      q += c * mu[j];
    }
    total += q > 0 ? std::abs(p) : std::abs(p - 1);
  }
  return total;
}

}  // namespace adlv
