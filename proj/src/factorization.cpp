#include "qcount/factorization.hpp"

#include "qcount/errors.hpp"
#include "qcount/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace qcount {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // this base set is deterministic for all n < 3.3 * 10^24
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

// Brent's variant; returns a nontrivial factor of composite odd n, or 0
// when this (x0, c) choice cycles without finding one.
uint64_t pollard_brent_once(uint64_t n, uint64_t x0, uint64_t c) {
    auto step = [n, c](uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
    uint64_t y = x0, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const uint64_t m = 128;
    while (g == 1) {
        x = y;
        for (uint64_t i = 0; i < r; ++i) y = step(y);
        uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const uint64_t lim = std::min(m, r - k);
            for (uint64_t i = 0; i < lim; ++i) {
                y = step(y);
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = gcd_u64(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = step(ys);
            g = gcd_u64(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

void factor_rec(uint64_t n, std::vector<uint64_t>& primes, int& budget) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        if (n % p == 0) {
            primes.push_back(p);
            factor_rec(n / p, primes, budget);
            return;
        }
    }
    uint64_t d = 0;
    uint64_t c = 1, x0 = 2;
    while (d == 0) {
        if (budget-- <= 0)
            throw FactorizationTimeoutError("pollard rho retry budget exhausted for n=" +
                                            std::to_string(n));
        d = pollard_brent_once(n, x0, c);
        ++c;
        x0 += 3;
    }
    factor_rec(d, primes, budget);
    factor_rec(n / d, primes, budget);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n, int retry_budget) {
    std::vector<uint64_t> primes;
    int budget = retry_budget;
    factor_rec(n, primes, budget);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

int64_t r2_count(int64_t m, int retry_budget) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    int64_t reps = 4;
    for (auto [p, e] : factorize(static_cast<uint64_t>(m), retry_budget)) {
        if (p == 2) continue;
        if (p % 4 == 1)
            reps *= (e + 1);
        else if (e % 2 != 0)
            return 0;
    }
    return reps;
}

int64_t r2_exhaustive(int64_t m) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    int64_t count = 0;
    const int64_t xmax = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(m)));
    for (int64_t x = 0; x <= xmax; ++x) {
        const int64_t rest = m - x * x;
        const auto y = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(rest)));
        if (y * y != rest) continue;
        // ordered signed pairs from the unsigned solution (x, y)
        int64_t orbit = 4;
        if (x == 0 || y == 0) orbit = 2;
        if (x == 0 && y == 0) orbit = 1;
        count += orbit;
    }
    return count;
}

namespace {

struct Gaussian {
    __int128 re, im;
    Gaussian operator*(const Gaussian& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

// a + bi with a^2 + b^2 = p for prime p = 1 mod 4 (Hermite-Serret descent)
Gaussian gaussian_prime(uint64_t p) {
    // t^2 = -1 mod p from a quadratic non-residue
    uint64_t q = 2;
    while (powmod_u64(q, (p - 1) / 2, p) != p - 1) ++q;
    uint64_t t = powmod_u64(q, (p - 1) / 4, p);
    uint64_t a = p, b = t;
    const uint64_t bound = isqrt_u64(p);
    while (b > bound) {
        uint64_t r = a % b;
        a = b;
        b = r;
    }
    const uint64_t a2 = p - b * b;
    return {static_cast<__int128>(b), static_cast<__int128>(isqrt_u64(a2))};
}

}  // namespace

std::vector<std::pair<int64_t, int64_t>> two_square_representations(uint64_t m, int retry_budget) {
    std::vector<std::pair<int64_t, int64_t>> out;
    if (m == 0) {
        out.emplace_back(0, 0);
        return out;
    }
    int e2 = 0;
    Gaussian fixed{1, 0};
    std::vector<std::pair<Gaussian, int>> split;  // (pi, exponent) for p = 1 mod 4
    for (auto [p, e] : factorize(m, retry_budget)) {
        if (p == 2) {
            e2 = e;
        } else if (p % 4 == 3) {
            if (e % 2 != 0) return out;  // no representations
            __int128 q = 1;
            for (int i = 0; i < e / 2; ++i) q *= static_cast<__int128>(p);
            fixed = fixed * Gaussian{q, 0};
        } else {
            split.emplace_back(gaussian_prime(p), e);
        }
    }
    for (int i = 0; i < e2; ++i) fixed = fixed * Gaussian{1, 1};

    std::vector<Gaussian> products{fixed};
    for (auto& [pi, e] : split) {
        const Gaussian bar{pi.re, -pi.im};
        std::vector<Gaussian> next;
        next.reserve(products.size() * (e + 1));
        for (const auto& z : products) {
            Gaussian w = z;
            for (int j = 0; j <= e; ++j) {
                Gaussian v = w;
                for (int l = 0; l < e - j; ++l) v = v * bar;
                next.push_back(v);
                if (j < e) w = w * pi;
            }
        }
        products = std::move(next);
    }
    out.reserve(products.size() * 4);
    for (const auto& z : products) {
        const auto x = static_cast<int64_t>(z.re);
        const auto y = static_cast<int64_t>(z.im);
        out.emplace_back(x, y);
        out.emplace_back(-y, x);
        out.emplace_back(-x, -y);
        out.emplace_back(y, -x);
    }
    return out;
}

}  // namespace qcount
