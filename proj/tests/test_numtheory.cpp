#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcount/errors.hpp"
#include "qcount/factorization.hpp"
#include "qcount/numtheory.hpp"

#include <random>
#include <set>

using namespace qcount;

TEST_CASE("integer square roots are exact") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const uint64_t n = rng();
        const uint64_t r = isqrt_u64(n);
        CHECK(static_cast<unsigned __int128>(r) * r <= n);
        CHECK(static_cast<unsigned __int128>(r + 1) * (r + 1) > n);
    }
    for (uint64_t r : {0ull, 1ull, 2ull, 3037000499ull, 4294967295ull}) {
        CHECK(isqrt_u64(r * r) == r);
        if (r > 1) CHECK(isqrt_u64(r * r - 1) == r - 1);
    }
    for (int i = 0; i < 500; ++i) {
        const unsigned __int128 n = (static_cast<unsigned __int128>(rng()) << 64) | rng();
        const auto r = isqrt_u128(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
    unsigned __int128 root = 0;
    CHECK(is_square_u128(static_cast<unsigned __int128>(94906265) * 94906265, &root));
    CHECK(root == 94906265);
    CHECK_FALSE(is_square_u128(static_cast<unsigned __int128>(94906265) * 94906265 + 1));
}

TEST_CASE("kronecker symbol basics") {
    // (-1|p) and (2|p) patterns
    CHECK(kronecker(-1, 5) == 1);
    CHECK(kronecker(-1, 3) == -1);
    CHECK(kronecker(-1, 13) == 1);
    CHECK(kronecker(-1, 7) == -1);
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(2, 17) == 1);
    CHECK(kronecker(2, 3) == -1);
    CHECK(kronecker(2, 5) == -1);
    CHECK(kronecker(6, 3) == 0);
    CHECK(kronecker(8, 3) == -1);
    CHECK(kronecker(8, 5) == -1);
    CHECK(kronecker(8, 7) == 1);
}

TEST_CASE("kronecker matches the Euler criterion at odd primes") {
    for (int64_t p : primes_up_to(97)) {
        if (p == 2) continue;
        for (int64_t a = -20; a <= 20; ++a) {
            const int sym = kronecker(a, p);
            int64_t am = a % p;
            if (am < 0) am += p;
            if (am == 0) {
                CHECK(sym == 0);
                continue;
            }
            const uint64_t e = powmod_u64(static_cast<uint64_t>(am),
                                          static_cast<uint64_t>((p - 1) / 2),
                                          static_cast<uint64_t>(p));
            CHECK(sym == (e == 1 ? 1 : -1));
        }
    }
}

TEST_CASE("kronecker is totally multiplicative in the top argument") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int64_t> d(-40, 40);
    for (int64_t n : {8, 12, 5, 24, 40, 44, 13, 15}) {
        for (int i = 0; i < 100; ++i) {
            const int64_t a = d(rng), b = d(rng);
            CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
        }
    }
}

TEST_CASE("sieve and valuation") {
    const auto p50 = primes_up_to(50);
    CHECK(p50.size() == 15);
    CHECK(p50.front() == 2);
    CHECK(p50.back() == 47);
    CHECK(valuation(Int(-48), Int(2)) == 4);
    CHECK(valuation(Int(48), Int(3)) == 1);
    CHECK(valuation(Int(7), Int(5)) == 0);
    CHECK(pow_checked(3, 4, 100) == 81);
    CHECK_THROWS_AS(pow_checked(10, 8, 10'000'000), CapExceededError);
}

TEST_CASE("deterministic Miller-Rabin") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));    // Carmichael
    CHECK_FALSE(is_prime_u64(6601));   // Carmichael
    CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    CHECK(is_prime_u64(999999999999999989ull));
    CHECK_FALSE(is_prime_u64(999999999999999987ull));
    const auto primes = primes_up_to(2000);
    std::set<int64_t> pset(primes.begin(), primes.end());
    for (int64_t n = 2; n < 2000; ++n) CHECK(is_prime_u64(n) == pset.count(n));
}

TEST_CASE("factorize reassembles and reports primes") {
    std::mt19937_64 rng(321);
    for (int i = 0; i < 300; ++i) {
        const uint64_t n = rng() % 1'000'000'000'000'000ull + 2;
        unsigned __int128 prod = 1;
        uint64_t prev = 0;
        for (auto [p, e] : factorize(n)) {
            CHECK(is_prime_u64(p));
            CHECK(p > prev);
            prev = p;
            for (int j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == n);
    }
    const auto f = factorize(1ull << 60);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == std::pair<uint64_t, int>{2, 60});
    const auto g = factorize(1000003ull * 1000033ull);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(g[1].first == 1000033);
}

TEST_CASE("factorization budget can time out") {
    CHECK_THROWS_AS(factorize(1000003ull * 1000033ull, 0), FactorizationTimeoutError);
}

TEST_CASE("r2 spot values") {
    CHECK(r2_count(25) == 12);
    CHECK(r2_count(21) == 0);
    CHECK(r2_count(2) == 4);
    CHECK(r2_count(0) == 1);
    CHECK(r2_count(1) == 4);
    CHECK(r2_count(-5) == 0);
}

TEST_CASE("r2 from factorization equals exhaustive counting") {
    for (int64_t m = 0; m <= 5000; ++m) CHECK(r2_count(m) == r2_exhaustive(m));
    std::mt19937_64 rng(654);
    for (int i = 0; i < 200; ++i) {
        const int64_t m = static_cast<int64_t>(rng() % 10'000'000);
        CHECK(r2_count(m) == r2_exhaustive(m));
    }
}

TEST_CASE("two-square representations are complete and valid") {
    std::mt19937_64 rng(777);
    for (int64_t m = 0; m <= 600; ++m) {
        const auto reps = two_square_representations(static_cast<uint64_t>(m));
        CHECK(static_cast<int64_t>(reps.size()) == r2_count(m));
        std::set<std::pair<int64_t, int64_t>> distinct;
        for (auto [x, y] : reps) {
            CHECK(x * x + y * y == m);
            distinct.emplace(x, y);
        }
        CHECK(distinct.size() == reps.size());
    }
    for (int i = 0; i < 50; ++i) {
        const int64_t m = static_cast<int64_t>(rng() % 50'000'000);
        const auto reps = two_square_representations(static_cast<uint64_t>(m));
        CHECK(static_cast<int64_t>(reps.size()) == r2_count(m));
        for (auto [x, y] : reps) CHECK(x * x + y * y == m);
    }
}
