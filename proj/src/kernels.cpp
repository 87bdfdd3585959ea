#include <cstdlib>
#include <string>

#include "adlvkit/kernels.hpp"

namespace adlv {

bool avx2_available() {
#if defined(ADLV_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

struct Choice {
  LengthKernel fn;
  std::string_view name;
};

Choice choose() {
  const char* env = std::getenv("ADLVKIT_KERNEL");
  const std::string want = env ? env : "";
#if defined(ADLV_HAVE_AVX2)
  if (want != "scalar" && avx2_available()) return {&length_kernel_avx2, "avx2"};
#endif
  return {&length_kernel_scalar, "scalar"};
}

const Choice& chosen() {
  static const Choice c = choose();
  return c;
}

}  // namespace

LengthKernel active_length_kernel() { return chosen().fn; }
std::string_view active_length_kernel_name() { return chosen().name; }

}  // namespace adlv
