#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace adlv {

// Positive roots stored column-major: coords[j * count + k] is the j-th coordinate of root k.
struct RootTable {
  int dim = 0;
  int count = 0;
  std::vector<std::int32_t> coords;
};

// Sum over roots a of  |<lambda,a>|      if <mu,a> > 0
//                      |<lambda,a> - 1|  otherwise.
// With mu = z(2 rho-check) this is the length of t^lambda z.
using LengthKernel = std::int64_t (*)(const RootTable&, const std::int32_t* lambda,
                                      const std::int32_t* mu);

std::int64_t length_kernel_scalar(const RootTable&, const std::int32_t* lambda,
                                  const std::int32_t* mu);
#if defined(ADLV_HAVE_AVX2)
std::int64_t length_kernel_avx2(const RootTable&, const std::int32_t* lambda,
                                const std::int32_t* mu);
#endif

// Picks AVX2 when the CPU has it. ADLVKIT_KERNEL=scalar|avx2 overrides.
LengthKernel active_length_kernel();
std::string_view active_length_kernel_name();
bool avx2_available();

}  // namespace adlv
