#include "qcount/local_density.hpp"

#include "qcount/errors.hpp"
#include "qcount/factorization.hpp"
#include "qcount/numtheory.hpp"
#include "qcount/parallel.hpp"
#include "ntt.hpp"

#include <algorithm>
#include <limits>

namespace qcount {

namespace {

// largest modulus for which the (x,y)-scan (O(N^2)) is preferred
constexpr int64_t kXYScanLimit = 16384;
// largest modulus for which general forms are enumerated (O(N^3))
constexpr int64_t kTripleLimit = 1600;

uint64_t coeff_mod(int64_t c, uint64_t n) {
    int64_t r = c % static_cast<int64_t>(n);
    if (r < 0) r += static_cast<int64_t>(n);
    return static_cast<uint64_t>(r);
}

// distribution of coef * w^2 over residues mod n
std::vector<uint32_t> square_dist(int64_t coef, uint64_t n) {
    std::vector<uint32_t> table(n, 0);
    const uint64_t c = coeff_mod(coef, n);
    for (uint64_t w = 0; w < n; ++w) table[c * (w * w % n) % n]++;
    return table;
}

int64_t count_triple_enum(const TernaryForm& f, const Target& a, uint64_t n, int threads) {
    const uint64_t c11 = coeff_mod(f.coeffs[0], n), c22 = coeff_mod(f.coeffs[1], n),
                   c33 = coeff_mod(f.coeffs[2], n), c12 = coeff_mod(f.coeffs[3], n),
                   c13 = coeff_mod(f.coeffs[4], n), c23 = coeff_mod(f.coeffs[5], n);
    const uint64_t amod = coeff_mod(a.a, n);
    std::vector<uint64_t> zq(n);
    for (uint64_t z = 0; z < n; ++z) zq[z] = c33 * (z * z % n) % n;
    int64_t total = 0;
    const auto nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt) reduction(+ : total)
    for (uint64_t x = 0; x < n; ++x) {
        const uint64_t x2 = c11 * (x * x % n) % n;
        const uint64_t xl = c13 * x % n;
        for (uint64_t y = 0; y < n; ++y) {
            const uint64_t base =
                (x2 + c22 * (y * y % n) + c12 * (x * y % n) + amod * (n - 1)) % n;
            // base == (x-part + y-part - a) mod n; solutions are base + z-part == 0
            const uint64_t lin = (xl + c23 * y) % n;
            for (uint64_t z = 0; z < n; ++z)
                if ((base + zq[z] + lin * z) % n == 0) ++total;
        }
    }
    return total;
}

int64_t count_xy_scan(const TernaryForm& f, const Target& a, uint64_t n, int threads) {
    const auto ztab = square_dist(f.coeffs[2], n);
    std::vector<uint32_t> yq(n);
    const uint64_t c22 = coeff_mod(f.coeffs[1], n);
    for (uint64_t y = 0; y < n; ++y) yq[y] = static_cast<uint32_t>(c22 * (y * y % n) % n);
    const uint64_t c11 = coeff_mod(f.coeffs[0], n);
    const uint64_t amod = coeff_mod(a.a, n);
    int64_t total = 0;
    const auto nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt) reduction(+ : total)
    for (uint64_t x = 0; x < n; ++x) {
        const uint64_t xq = c11 * (x * x % n) % n;
        uint64_t local = 0;
        for (uint64_t y = 0; y < n; ++y) {
            uint64_t r = amod + (n - xq) + (n - yq[y]);
            if (r >= n) r -= n;
            if (r >= n) r -= n;
            local += ztab[r];
        }
        total += static_cast<int64_t>(local);
    }
    return total;
}

int64_t count_convolution(const TernaryForm& f, const Target& a, uint64_t n) {
    const auto xdist = square_dist(f.coeffs[0], n);
    const auto ydist = square_dist(f.coeffs[1], n);
    const auto zdist = square_dist(f.coeffs[2], n);
    const auto xy = detail::cyclic_convolution(xdist, ydist);
    const uint64_t amod = coeff_mod(a.a, n);
    unsigned __int128 total = 0;
    for (uint64_t r = 0; r < n; ++r) {
        const uint64_t zr = (amod + n - r % n) % n;
        total += static_cast<unsigned __int128>(xy[r]) * zdist[zr];
    }
    if (total > static_cast<unsigned __int128>(std::numeric_limits<int64_t>::max()))
        throw WidthOverflowError("count_mod_pk: count exceeds 64-bit width");
    return static_cast<int64_t>(total);
}

}  // namespace

std::vector<uint32_t> sqrt_count_table(int64_t p, int k, const DensityOptions& opts) {
    const auto n = static_cast<uint64_t>(pow_checked(p, k, opts.pk_cap));
    return square_dist(1, n);
}

int64_t count_mod_pk(const TernaryForm& f, const Target& a, int64_t p, int k,
                     const DensityOptions& opts, CountStrategy strategy) {
    const int64_t n = pow_checked(p, k, opts.pk_cap);
    const auto un = static_cast<uint64_t>(n);
    if (strategy == CountStrategy::Auto)
        strategy = f.is_diagonal()
                       ? (n <= kXYScanLimit ? CountStrategy::XYScan : CountStrategy::Convolution)
                       : CountStrategy::TripleEnum;
    switch (strategy) {
        case CountStrategy::XYScan:
            if (!f.is_diagonal())
                throw DomainError("count_mod_pk: XYScan requires a diagonal form");
            return count_xy_scan(f, a, un, opts.threads);
        case CountStrategy::Convolution:
            if (!f.is_diagonal())
                throw DomainError("count_mod_pk: Convolution requires a diagonal form");
            return count_convolution(f, a, un);
        case CountStrategy::TripleEnum:
        default:
            if (n > kTripleLimit)
                throw CapExceededError("count_mod_pk: modulus " + std::to_string(n) +
                                       " too large for triple enumeration");
            return count_triple_enum(f, a, un, opts.threads);
    }
}

int64_t count_mod_pk_serial(const TernaryForm& f, const Target& a, int64_t p, int k,
                            const DensityOptions& opts) {
    const int64_t n = pow_checked(p, k, std::min<int64_t>(opts.pk_cap, 2048));
    return count_triple_enum(f, a, static_cast<uint64_t>(n), 1);
}

std::vector<int64_t> ramified_primes(const TernaryForm& f, const Target& a) {
    Int d = 2 * Int(a.a) * f.det2gram();
    if (d < 0) d = -d;
    if (d > std::numeric_limits<uint64_t>::max())
        throw WidthOverflowError("ramified_primes: discriminant data exceeds 64-bit width");
    std::vector<int64_t> out;
    for (auto [prime, e] : factorize(d.convert_to<uint64_t>()))
        out.push_back(static_cast<int64_t>(prime));
    return out;
}

LocalDensity alpha_p_brute(const TernaryForm& f, const Target& a, int64_t p,
                           const DensityOptions& opts) {
    const Int disc_data = 2 * Int(a.a) * f.det2gram();
    const int k_min = 2 * valuation(disc_data, Int(p)) + 1;
    // two consecutive doubling confirmations are required before accepting k
    int64_t probe = 1;
    for (int i = 0; i < k_min + 2; ++i) {
        if (probe > opts.pk_cap / p)
            throw CapExceededError("alpha_p_brute: p^(k_min+2) exceeds cap at p=" +
                                   std::to_string(p));
        probe *= p;
    }
    int k = k_min;
    int64_t c0 = count_mod_pk(f, a, p, k, opts);
    int64_t c1 = count_mod_pk(f, a, p, k + 1, opts);
    int64_t c2 = count_mod_pk(f, a, p, k + 2, opts);
    const auto psq = static_cast<__int128>(p) * p;
    while (true) {
        if (static_cast<__int128>(c1) == psq * c0 && static_cast<__int128>(c2) == psq * c1) {
            LocalDensity d;
            d.p = p;
            Int denom = 1;
            for (int i = 0; i < 2 * k; ++i) denom *= p;
            d.value = Rat(Int(c0), denom);
            d.method = LocalDensity::Method::BruteForce;
            d.k_used = k;
            d.stabilized = true;
            return d;
        }
        bool room = true;
        int64_t next = 1;
        for (int i = 0; i < k + 3 && room; ++i) {
            if (next > opts.pk_cap / p) room = false;
            next *= p;
        }
        if (!room) throw NotStabilizedError(p, k + 2);
        c0 = c1;
        c1 = c2;
        c2 = count_mod_pk(f, a, p, k + 3, opts);
        ++k;
    }
}

LocalDensity alpha_p_closed_family(int64_t delta, int64_t p) {
    if (delta <= 0) throw DomainError("alpha_p_closed_family: delta must be positive");
    LocalDensity d;
    d.p = p;
    d.method = LocalDensity::Method::ClosedFormCase;
    d.stabilized = true;
    if (p == 2) {
        const int64_t m8 = delta % 8;
        if (delta % 4 == 0 || m8 == 1) {
            d.value = 2;
            d.case_tag = "p2_4div_or_1mod8";
        } else if (m8 == 3 || m8 == 7) {
            d.value = Rat(3, 2);
            d.case_tag = "p2_3or7mod8";
        } else {  // 2 || delta, or delta = 5 mod 8
            d.value = 1;
            d.case_tag = "p2_2strict_or_5mod8";
        }
        return d;
    }
    if (delta % p != 0) {
        d.value = Rat(p + legendre(delta, p), p);
        d.case_tag = "odd_coprime";
    } else {
        d.value = Rat(p - legendre(-1, p), p);
        d.case_tag = "odd_dividing";
    }
    return d;
}

LocalDensity alpha_p_unramified_square_case(int64_t p) {
    LocalDensity d;
    d.p = p;
    d.value = Rat(p + 1, p);
    d.method = LocalDensity::Method::ClosedFormCase;
    d.case_tag = "unramified";
    d.stabilized = true;
    return d;
}

}  // namespace qcount
