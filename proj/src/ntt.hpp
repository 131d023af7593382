#pragma once

#include <cstdint>
#include <vector>

namespace qcount::detail {

// Exact cyclic convolution of two equal-length vectors of non-negative
// counts, via number-theoretic transforms modulo two primes and CRT.
// Requires every true coefficient < 2^56. Length may be arbitrary
// (power-of-two lengths transform in place, others go through a padded
// linear convolution folded back).
std::vector<uint64_t> cyclic_convolution(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);

}  // namespace qcount::detail
