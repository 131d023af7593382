#include "qcount/enumeration.hpp"

#include "qcount/errors.hpp"
#include "qcount/factorization.hpp"
#include "qcount/numtheory.hpp"
#include "qcount/parallel.hpp"

#include <array>
#include <chrono>
#include <cmath>

namespace qcount {

namespace {

using i128 = __int128;

int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

// shared ball predicate: |v|^2 <= T^2, evaluated in long double so both
// enumerators agree bit-for-bit (exact for the guarded ranges)
bool norm_sq_within(i128 sq, double T) {
    return static_cast<long double>(sq) <= static_cast<long double>(T) * T;
}

// largest z >= 0 with base + coef z^2 <= T^2 (coef > 0)
int64_t zrange_max(int64_t base, int64_t coef, double T) {
    const long double t2 = static_cast<long double>(T) * T;
    if (static_cast<long double>(base) > t2) return -1;
    const long double guess = std::sqrt(std::max(0.0L, (t2 - base) / coef));
    auto z = static_cast<int64_t>(guess);
    while (z > 0 && static_cast<long double>(base) + static_cast<long double>(coef) * z * z > t2)
        --z;
    while (static_cast<long double>(base) +
               static_cast<long double>(coef) * (z + 1) * (z + 1) <=
           t2)
        ++z;
    return z;
}

// y solutions of A y^2 + B y + C = 0 for fixed (x, z), pushed through `emit`
template <typename Emit>
void solve_y(int64_t A, i128 B, i128 C, Emit&& emit) {
    if (A != 0) {
        const i128 disc = B * B - 4 * static_cast<i128>(A) * C;
        if (disc < 0) return;
        unsigned __int128 root;
        if (!is_square_u128(static_cast<unsigned __int128>(disc), &root)) return;
        const auto s = static_cast<i128>(root);
        for (const i128 num : {-B + s, -B - s}) {
            if (num % (2 * static_cast<i128>(A)) != 0) continue;
            emit(num / (2 * static_cast<i128>(A)));
            if (s == 0) break;  // double root
        }
    } else if (B != 0) {
        if (C % B == 0) emit(-C / B);
    }
    // A == B == 0 with C == 0 cannot happen for a nondegenerate form with
    // a != 0 unless y is absent from f entirely, which parse_form rejects
}

int64_t generic_scan(const TernaryForm& f, const Target& a, double T, const NormSpec& norm,
                     const EnumOptions& opts, int threads) {
    if (T < 0) return 0;
    if (T > opts.t_guard)
        throw WidthOverflowError("count_generic: T exceeds the width guard " +
                                 std::to_string(opts.t_guard));
    const auto& c = f.coeffs;
    const auto xmax = static_cast<int64_t>(std::floor(static_cast<long double>(T)));
    int64_t total = 0;
    const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt) reduction(+ : total)
    for (int64_t x = -xmax; x <= xmax; ++x) {
        for (int64_t z = -xmax; z <= xmax; ++z) {
            if (norm.kind == NormKind::Euclidean &&
                !norm_sq_within(static_cast<i128>(x) * x + static_cast<i128>(z) * z, T))
                continue;
            const i128 B = static_cast<i128>(c[3]) * x + static_cast<i128>(c[5]) * z;
            const i128 C = static_cast<i128>(c[0]) * x * x + static_cast<i128>(c[2]) * z * z +
                           static_cast<i128>(c[4]) * x * z - a.a;
            solve_y(c[1], B, C, [&](i128 y) {
                if (norm.kind == NormKind::Euclidean) {
                    if (norm_sq_within(static_cast<i128>(x) * x + y * y + static_cast<i128>(z) * z,
                                       T))
                        ++total;
                } else {
                    if (y >= -xmax && y <= xmax) ++total;
                }
            });
        }
    }
    return total;
}

// representations of x^2 + y^2 = m with max(|x|, |y|) <= T
int64_t r2_bounded_sup(int64_t m, double T, int retry_budget) {
    if (m < 0) return 0;
    const long double t2 = static_cast<long double>(T) * T;
    if (static_cast<long double>(m) <= t2) return r2_count(m, retry_budget);
    if (static_cast<long double>(m) > 2 * t2) return 0;
    int64_t kept = 0;
    for (auto [x, y] : two_square_representations(static_cast<uint64_t>(m), retry_budget)) {
        if (static_cast<long double>(std::abs(x)) * std::abs(x) <= t2 &&
            static_cast<long double>(std::abs(y)) * std::abs(y) <= t2)
            ++kept;
    }
    return kept;
}

int64_t family_scan(int64_t delta, const Target& a, double T, const NormSpec& norm,
                    const EnumOptions& opts, int threads) {
    if (delta <= 0) throw DomainError("count_family_fast: delta must be positive");
    if (T < 0) return 0;
    const long double m_peak = static_cast<long double>(std::abs(a.a)) +
                               static_cast<long double>(delta) * T * T;
    if (m_peak > 9.0e18)
        throw WidthOverflowError("count_family_fast: a + delta T^2 exceeds 64-bit width");

    int64_t zmax;
    if (norm.kind == NormKind::Euclidean) {
        // |v|^2 = a + (delta + 1) z^2, so the ball constraint is a z-range
        zmax = zrange_max(a.a, delta + 1, T);
    } else {
        zmax = static_cast<int64_t>(std::floor(static_cast<long double>(T)));
    }
    if (zmax < 0) return 0;

    const int nt = resolve_threads(threads);
    int64_t total = 0;
    if (norm.kind == NormKind::Euclidean) {
        total = r2_count(a.a, opts.retry_budget);
#pragma omp parallel for schedule(dynamic, 256) num_threads(nt) reduction(+ : total)
        for (int64_t z = 1; z <= zmax; ++z) total += 2 * r2_count(a.a + delta * z * z, opts.retry_budget);
    } else {
        total = r2_bounded_sup(a.a, T, opts.retry_budget);
#pragma omp parallel for schedule(dynamic, 256) num_threads(nt) reduction(+ : total)
        for (int64_t z = 1; z <= zmax; ++z)
            total += 2 * r2_bounded_sup(a.a + delta * z * z, T, opts.retry_budget);
    }
    return total;
}

}  // namespace

CountResult count_generic(const TernaryForm& f, const Target& a, double T, const NormSpec& norm,
                          const EnumOptions& opts) {
    const int64_t t0 = now_ms();
    CountResult r;
    r.T = T;
    r.method = CountResult::Method::GenericScan;
    r.count = generic_scan(f, a, T, norm, opts, opts.threads);
    r.elapsed_ms = now_ms() - t0;
    return r;
}

int64_t count_generic_serial(const TernaryForm& f, const Target& a, double T,
                             const NormSpec& norm, const EnumOptions& opts) {
    return generic_scan(f, a, T, norm, opts, 1);
}

CountResult count_family_fast(int64_t delta, const Target& a, double T, const NormSpec& norm,
                              const EnumOptions& opts) {
    const int64_t t0 = now_ms();
    CountResult r;
    r.T = T;
    r.method = CountResult::Method::FamilyR2;
    r.count = family_scan(delta, a, T, norm, opts, opts.threads);
    r.elapsed_ms = now_ms() - t0;
    return r;
}

int64_t count_family_fast_serial(int64_t delta, const Target& a, double T, const NormSpec& norm,
                                 const EnumOptions& opts) {
    return family_scan(delta, a, T, norm, opts, 1);
}

bool cross_check(const TernaryForm& f, const Target& a, int64_t t_max, const NormSpec& norm,
                 const EnumOptions& opts) {
    const auto delta = f.family_delta();
    if (!delta) throw NotApplicableError("cross_check requires the family x^2+y^2-delta z^2");
    for (int64_t T = 1; T <= t_max; ++T) {
        const int64_t g = generic_scan(f, a, static_cast<double>(T), norm, opts, opts.threads);
        const int64_t q = family_scan(*delta, a, static_cast<double>(T), norm, opts, opts.threads);
        if (g != q) throw MismatchError(T, g, q);
    }
    return true;
}

std::vector<std::array<int64_t, 3>> list_points(const TernaryForm& f, const Target& a, double T,
                                                const NormSpec& norm) {
    if (T > 100) throw DomainError("list_points: supported only for T <= 100");
    std::vector<std::array<int64_t, 3>> pts;
    const auto xmax = static_cast<int64_t>(std::floor(T));
    const auto& c = f.coeffs;
    for (int64_t x = -xmax; x <= xmax; ++x)
        for (int64_t z = -xmax; z <= xmax; ++z) {
            const i128 B = static_cast<i128>(c[3]) * x + static_cast<i128>(c[5]) * z;
            const i128 C = static_cast<i128>(c[0]) * x * x + static_cast<i128>(c[2]) * z * z +
                           static_cast<i128>(c[4]) * x * z - a.a;
            solve_y(c[1], B, C, [&](i128 y) {
                const i128 nsq = static_cast<i128>(x) * x + y * y + static_cast<i128>(z) * z;
                const bool inside = norm.kind == NormKind::Euclidean
                                        ? norm_sq_within(nsq, T)
                                        : (y >= -xmax && y <= xmax);
                if (inside) pts.push_back({x, static_cast<int64_t>(y), z});
            });
        }
    return pts;
}

}  // namespace qcount
