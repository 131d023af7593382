#pragma once

#include "qcount/forms.hpp"

#include <cstdint>
#include <vector>

namespace qcount {

struct CountResult {
    double T = 0;
    int64_t count = 0;
    enum class Method { GenericScan, FamilyR2 } method = Method::GenericScan;
    int64_t elapsed_ms = 0;
};

struct EnumOptions {
    double t_guard = 1'000'000;  // width guard for the generic scan
    int retry_budget = 64;       // factorization restarts per m
    int threads = 0;
};

// Exact N(f, a, T) by scanning (x, z) over the integer box and solving the
// remaining quadratic in y with an integer discriminant square test.
CountResult count_generic(const TernaryForm& f, const Target& a, double T,
                          const NormSpec& norm = NormSpec::euclidean(),
                          const EnumOptions& opts = {});
int64_t count_generic_serial(const TernaryForm& f, const Target& a, double T,
                             const NormSpec& norm = NormSpec::euclidean(),
                             const EnumOptions& opts = {});

// Exact N(f, a, T) for f = x^2 + y^2 - delta z^2: one pass over z, with the
// two-square representation count r2(a + delta z^2) from the factorization.
// Under the Euclidean norm the ball constraint collapses to a z-range test;
// under the sup norm representations near the corners are enumerated from
// the Gaussian divisors and filtered.
CountResult count_family_fast(int64_t delta, const Target& a, double T,
                              const NormSpec& norm = NormSpec::euclidean(),
                              const EnumOptions& opts = {});
int64_t count_family_fast_serial(int64_t delta, const Target& a, double T,
                                 const NormSpec& norm = NormSpec::euclidean(),
                                 const EnumOptions& opts = {});

// true iff both enumerators agree at every integer T <= t_max
// (MismatchError pinpoints the first divergence)
bool cross_check(const TernaryForm& f, const Target& a, int64_t t_max,
                 const NormSpec& norm = NormSpec::euclidean(), const EnumOptions& opts = {});

// solution listing for small T (debug aid); generic scan order
std::vector<std::array<int64_t, 3>> list_points(const TernaryForm& f, const Target& a, double T,
                                                const NormSpec& norm = NormSpec::euclidean());

}  // namespace qcount
