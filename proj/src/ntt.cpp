#include "ntt.hpp"

#include <bit>
#include <stdexcept>

namespace qcount::detail {

namespace {

// both primes have 2-adicity >= 25, enough for moduli up to 10^7 padded
constexpr uint64_t kMod1 = 167772161;   // 5 * 2^25 + 1, g = 3
constexpr uint64_t kMod2 = 469762049;   // 7 * 2^26 + 1, g = 3

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

void ntt(std::vector<uint64_t>& a, bool invert, uint64_t mod) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        uint64_t w = powmod(3, (mod - 1) / len, mod);
        if (invert) w = powmod(w, mod - 2, mod);
        const size_t half = len >> 1;
#pragma omp parallel for schedule(static) if (n >= (1u << 16))
        for (size_t i = 0; i < n; i += len) {
            uint64_t wn = 1;
            for (size_t j = 0; j < half; ++j) {
                const uint64_t u = a[i + j];
                const uint64_t v = a[i + j + half] * wn % mod;
                a[i + j] = u + v < mod ? u + v : u + v - mod;
                a[i + j + half] = u >= v ? u - v : u + mod - v;
                wn = wn * w % mod;
            }
        }
    }
    if (invert) {
        const uint64_t inv_n = powmod(n, mod - 2, mod);
        for (auto& x : a) x = x * inv_n % mod;
    }
}

std::vector<uint64_t> convolve_mod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                   size_t transform_len, uint64_t mod) {
    std::vector<uint64_t> fa(transform_len, 0), fb(transform_len, 0);
    for (size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % mod;
    for (size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % mod;
    ntt(fa, false, mod);
    ntt(fb, false, mod);
    for (size_t i = 0; i < transform_len; ++i) fa[i] = fa[i] * fb[i] % mod;
    ntt(fa, true, mod);
    return fa;
}

uint64_t crt2(uint64_t r1, uint64_t r2) {
    // x = r1 mod kMod1, x = r2 mod kMod2, 0 <= x < kMod1*kMod2 (~7.9e16)
    static const uint64_t inv1 = powmod(kMod1 % kMod2, kMod2 - 2, kMod2);
    const uint64_t d = (r2 + kMod2 - r1 % kMod2) % kMod2;
    return r1 + kMod1 * (d * inv1 % kMod2);
}

}  // namespace

std::vector<uint64_t> cyclic_convolution(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
    const size_t n = a.size();
    if (b.size() != n || n == 0) throw std::invalid_argument("cyclic_convolution: size mismatch");
    const bool pow2 = std::has_single_bit(n);
    const size_t len = pow2 ? n : std::bit_ceil(2 * n - 1);
    if (len > (1u << 25)) throw std::length_error("cyclic_convolution: transform too large");

    const auto c1 = convolve_mod(a, b, len, kMod1);
    const auto c2 = convolve_mod(a, b, len, kMod2);
    std::vector<uint64_t> out(n);
    for (size_t r = 0; r < n; ++r) {
        uint64_t v = crt2(c1[r], c2[r]);
        if (!pow2 && r + n < len) v += crt2(c1[r + n], c2[r + n]);
        out[r] = v;
    }
    return out;
}

}  // namespace qcount::detail
