#pragma once

#include "qcount/rational.hpp"

#include <cstdint>
#include <vector>

namespace qcount {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = m > 1 ? 1 : 0;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// floor(sqrt(n)), exact for the full uint64 range
uint64_t isqrt_u64(uint64_t n);

// floor(sqrt(n)), exact for unsigned 128-bit values
unsigned __int128 isqrt_u128(unsigned __int128 n);

inline bool is_square_u128(unsigned __int128 n, unsigned __int128* root = nullptr) {
    unsigned __int128 r = isqrt_u128(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// Kronecker symbol (a|n), defined for all a and n.
int kronecker(int64_t a, int64_t n);

// Legendre symbol (a|p) for odd prime p.
inline int legendre(int64_t a, int64_t p) { return kronecker(a, p); }

// primes <= bound, by sieve
std::vector<int64_t> primes_up_to(int64_t bound);

// p-adic valuation v_p(n) for n != 0
int valuation(Int n, const Int& p);

// p^k as int64, throwing if it exceeds `cap`
int64_t pow_checked(int64_t p, int k, int64_t cap);

}  // namespace qcount
