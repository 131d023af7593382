#pragma once

#include "qcount/forms.hpp"
#include "qcount/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qcount {

struct DensityOptions {
    int64_t pk_cap = 10'000'000;  // largest modulus p^k we will count
    int threads = 0;              // 0 = library default
};

// Exact p-adic local density alpha_p(f, a) = lim count(p^k) / p^(2k),
// with how it was obtained: stabilized brute-force counting (k_used holds
// the first stabilized k) or one of the closed-form cases for the family
// x^2 + y^2 - delta z^2 at a = 1.
struct LocalDensity {
    int64_t p = 0;
    Rat value;
    enum class Method { BruteForce, ClosedFormCase } method = Method::BruteForce;
    int k_used = 0;
    std::string case_tag;
    bool stabilized = false;
};

// residue r mod p^k  ->  #{ w mod p^k : w^2 = r }, as a dense table of
// size p^k; row sum over all residues equals p^k
std::vector<uint32_t> sqrt_count_table(int64_t p, int k, const DensityOptions& opts = {});

// All strategies count #{ (x,y,z) mod p^k : f(x,y,z) = a } exactly.
//   TripleEnum   full enumeration, any form (the serial reference)
//   XYScan       (x,y) scan reading the z^2-count from a residue table
//   Convolution  per-axis square distributions combined by exact cyclic
//                convolution, for large moduli
enum class CountStrategy { Auto, TripleEnum, XYScan, Convolution };

// Diagonal forms use the z^2-count table over an (x,y) scan (distribution
// convolution once the modulus is large); general forms fall back to full
// triple enumeration.
int64_t count_mod_pk(const TernaryForm& f, const Target& a, int64_t p, int k,
                     const DensityOptions& opts = {}, CountStrategy strategy = CountStrategy::Auto);

// serial reference: plain triple enumeration, any form
int64_t count_mod_pk_serial(const TernaryForm& f, const Target& a, int64_t p, int k,
                            const DensityOptions& opts = {});

// primes dividing 2 * a * det(2*Gram); always contains 2
std::vector<int64_t> ramified_primes(const TernaryForm& f, const Target& a);

// first k >= k_min := 2 v_p(2 a det(2 Gram)) + 1 with
// count(p^(k+1)) = p^2 count(p^k) and count(p^(k+2)) = p^2 count(p^(k+1));
// returns count(p^k) / p^(2k)
LocalDensity alpha_p_brute(const TernaryForm& f, const Target& a, int64_t p,
                           const DensityOptions& opts = {});

// the closed-form cases for f = x^2 + y^2 - delta z^2, a = 1
LocalDensity alpha_p_closed_family(int64_t delta, int64_t p);

// 1 + 1/p, valid in the square case for p not dividing 2 a det(2 Gram)
LocalDensity alpha_p_unramified_square_case(int64_t p);

}  // namespace qcount
