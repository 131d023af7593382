#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qcount {

// deterministic Miller-Rabin over the full uint64 range
bool is_prime_u64(uint64_t n);

// prime factorization, sorted by prime; Pollard rho with Brent cycle
// detection behind a restart budget (FactorizationTimeoutError on exhaustion)
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n, int retry_budget = 64);

// r2(m): number of ordered pairs (x, y) in Z^2 with x^2 + y^2 = m.
// r2(0) = 1; m < 0 contributes 0. Computed from the factorization:
// zero if some prime = 3 mod 4 divides m to an odd power, else
// 4 * prod (e_p + 1) over p = 1 mod 4.
int64_t r2_count(int64_t m, int retry_budget = 64);

// independent oracle: exhaustive loop over x
int64_t r2_exhaustive(int64_t m);

// all ordered representations (x, y) with x^2 + y^2 = m, enumerated from
// the Gaussian-integer divisors given by the factorization of m
std::vector<std::pair<int64_t, int64_t>> two_square_representations(uint64_t m,
                                                                    int retry_budget = 64);

}  // namespace qcount
