#pragma once

#include <cstddef>
#include <vector>

#include "adlvkit/affine_weyl.hpp"

namespace adlv {

// Distinct tau_0, ..., tau_rank that exist in the lattice.
std::vector<AffineElement> omega_representatives(const AffineWeyl& g);

// All y * tau with y in the affine Weyl group, tau among the given length-zero
// elements, and length at most max_length, sorted by canonical text.
std::vector<AffineElement> enumerate_elements(const AffineWeyl& g, int max_length,
                                              const std::vector<AffineElement>& omegas,
                                              std::size_t budget);

}  // namespace adlv
