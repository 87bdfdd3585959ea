#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "adlvkit/kernels.hpp"
#include "adlvkit/root_datum.hpp"

using namespace adlv;

namespace {

// Direct transcription of the length sum, no blocking.
std::int64_t reference_length(const RootDatum& d, const Vec& lambda, const Vec& mu) {
  std::int64_t total = 0;
  for (const Vec& a : d.positive_roots()) {
    const std::int64_t p = d.pair(lambda, a);
    const std::int64_t q = d.pair(mu, a);
    total += q > 0 ? std::llabs(p) : std::llabs(p - 1);
  }
  return total;
}

}  // namespace

// The choice is made once per process, so this case must run before any other use.
TEST_CASE("scalar override is honoured") {
  setenv("ADLVKIT_KERNEL", "scalar", 1);
  CHECK(active_length_kernel_name() == "scalar");
  CHECK(active_length_kernel() == &length_kernel_scalar);
  unsetenv("ADLVKIT_KERNEL");
}

TEST_CASE("kernels agree with the reference on random input") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (const char* name : {"A1", "A3:gl", "B4", "D5:sc", "E6", "E7", "E8", "F4", "G2"}) {
    CAPTURE(name);
    auto d = RootDatum::make(name);
    const RootTable& t = d->root_table();
    for (int trial = 0; trial < 300; ++trial) {
      Vec lambda{}, mu{};
      for (int i = 0; i < d->dim(); ++i) {
        lambda[i] = coord(rng);
        mu[i] = coord(rng) % 3;
      }
      const std::int64_t want = reference_length(*d, lambda, mu);
      CHECK(length_kernel_scalar(t, lambda.data(), mu.data()) == want);
#if defined(ADLV_HAVE_AVX2)
      if (avx2_available()) CHECK(length_kernel_avx2(t, lambda.data(), mu.data()) == want);
#endif
      CHECK(active_length_kernel()(t, lambda.data(), mu.data()) == want);
    }
  }
}
