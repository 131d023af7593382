#include "qcount/numtheory.hpp"

#include "qcount/errors.hpp"

#include <cmath>

namespace qcount {

uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

unsigned __int128 isqrt_u128(unsigned __int128 n) {
    if (n <= UINT64_MAX) return isqrt_u64(static_cast<uint64_t>(n));
    auto r = static_cast<unsigned __int128>(sqrtl(static_cast<long double>(n)));
    // one Newton step then exact fixup
    r = (r + n / r) >> 1;
    while (r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

int kronecker(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        // pull out factors of 2 from n: (a|2) = (2|a) for odd a
        while (n % 2 == 0) {
            n /= 2;
            int64_t r = a % 8;
            if (r < 0) r += 8;
            if (r == 3 || r == 5) sign = -sign;
        }
    }
    a %= n;
    if (a < 0) a += n;
    // now n odd positive, 0 <= a < n: standard Jacobi loop
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

std::vector<int64_t> primes_up_to(int64_t bound) {
    std::vector<int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    for (int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (int64_t j = i * i; j <= bound; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

int valuation(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int64_t pow_checked(int64_t p, int k, int64_t cap) {
    int64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > cap / p)
            throw CapExceededError("p^k exceeds cap " + std::to_string(cap) + " (p=" +
                                   std::to_string(p) + ", k=" + std::to_string(k) + ")");
        r *= p;
    }
    return r;
}

}  // namespace qcount
