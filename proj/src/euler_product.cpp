#include "qcount/euler_product.hpp"

#include "qcount/errors.hpp"
#include "qcount/factorization.hpp"
#include "qcount/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>

namespace qcount {

namespace {

constexpr double kPi = std::numbers::pi;

// log((x + y sqrt(D)) / 2) for x, y > 0, stable for units too large for double
double log_half_quadratic(const Int& x, const Int& y, int64_t D) {
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits <= 900)
        return std::log(to_double(x) + to_double(y) * std::sqrt(static_cast<double>(D))) -
               std::numbers::ln2;
    const double top = (x >> (bits - 52)).convert_to<double>();  // in [2^52, 2^53)
    const double log_x = std::log(top) + static_cast<double>(bits - 52) * std::numbers::ln2;
    const double ratio = to_double(Rat(y, x)) * std::sqrt(static_cast<double>(D));
    return log_x + std::log1p(ratio) - std::numbers::ln2;
}

}  // namespace

EulerConstant finite_constant_square_case(const TernaryForm& f, const Target& a,
                                          AlphaSource source, const DensityOptions& opts) {
    const auto regime = classify(f, a);
    if (regime.tag != Regime::SquareCase)
        throw NotApplicableError("finite_constant_square_case: -a det(f) is not a square");
    EulerConstant out;
    out.ramified = ramified_primes(f, a);
    const auto family = f.family_delta();
    out.ramified_factor = 1;
    for (int64_t p : out.ramified) {
        LocalDensity alpha;
        switch (source) {
            case AlphaSource::Brute:
                alpha = alpha_p_brute(f, a, p, opts);
                break;
            case AlphaSource::Closed:
                if (!family || a.a != 1)
                    throw NotApplicableError(
                        "closed-form local densities apply only to x^2+y^2-delta z^2 with a=1");
                alpha = alpha_p_closed_family(*family, p);
                break;
            case AlphaSource::Both: {
                alpha = alpha_p_brute(f, a, p, opts);
                if (family && a.a == 1) {
                    const auto closed = alpha_p_closed_family(*family, p);
                    if (closed.value != alpha.value)
                        throw DisagreementError("alpha_" + std::to_string(p) +
                                                ": brute-force and closed form disagree");
                }
                break;
            }
        }
        out.alphas.push_back(alpha);
        const Rat pr(p);
        out.ramified_factor *= (1 - 1 / pr) * alpha.value / (1 - 1 / (pr * pr));
    }
    const double rf = to_double(out.ramified_factor);
    out.value = rf * 6.0 / (kPi * kPi);
    // conversion and product roundoff is within a few ulps; 1e-13 relative
    // is a safe enclosure and far inside the 1e-12 contract
    const double pad = 1e-13 * std::abs(out.value);
    out.lo = out.value - pad;
    out.hi = out.value + pad;
    return out;
}

namespace {

// ---- continued fraction of the quadratic order of discriminant D ----

struct FundamentalUnit {
    Int x, y;   // unit = (x + y sqrt(D)) / 2
    int norm;   // (x^2 - D y^2) / 4
};

// PQa expansion of (b + sqrt(D)) / 2 with b the largest integer of the
// parity of D below sqrt(D); this quadratic irrational is reduced, so its
// expansion is purely periodic and one period yields the fundamental
// automorphism q_{l-1} alpha + q_{l-2} of the order of discriminant D.
FundamentalUnit fundamental_unit(int64_t D) {
    const auto sq = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(D)));
    int64_t b = sq;
    if ((b & 1) != (D & 1)) --b;
    const int64_t P0 = b, Q0 = 2;
    int64_t P = P0, Q = Q0;
    Int q_mm = 1, q_m = 0;  // q_{-2}, q_{-1}
    int length = 0;
    while (true) {
        const int64_t ai = (P + sq) / Q;
        const Int q_i = ai * q_m + q_mm;  // q_{length}
        q_mm = q_m;
        q_m = q_i;
        ++length;
        P = ai * Q - P;
        Q = (D - P * P) / Q;
        if (P == P0 && Q == Q0) break;
    }
    // period l = length; q_m = q_{l-1}, q_mm = q_{l-2}
    FundamentalUnit u;
    u.x = q_m * b + 2 * q_mm;
    u.y = q_m;
    const Int norm4 = u.x * u.x - D * u.y * u.y;
    if (norm4 == 4)
        u.norm = 1;
    else if (norm4 == -4)
        u.norm = -1;
    else
        throw Error("fundamental unit: norm check failed");
    return u;
}

// ---- reduced indefinite binary quadratic forms of discriminant D ----

struct BinForm {
    int64_t a, b, c;
    bool operator<(const BinForm& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
    bool operator==(const BinForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

// (a,b,c) with b^2 - 4ac = D is reduced iff |sqrt(D) - 2|a|| < b < sqrt(D),
// i.e. 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b. With sqrt(D)
// irrational the strict bounds become 2|a| > sq - b and 2|a| <= sq + b for
// sq = floor(sqrt(D)).
std::vector<BinForm> reduced_forms(int64_t D) {
    std::vector<BinForm> forms;
    const auto sq = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(D)));
    for (int64_t b = 1; b <= sq; ++b) {
        if ((b & 1) != (D & 1)) continue;
        const int64_t ac = (b * b - D) / 4;  // < 0
        const int64_t M = -ac;
        for (int64_t d = 1; d <= M; ++d) {
            if (M % d != 0) continue;
            if (!(2 * d > sq - b && 2 * d <= sq + b)) continue;
            for (int64_t a : {d, -d}) {
                const int64_t c = ac / a;
                if (std::gcd(std::gcd(a, b), c) == 1) forms.push_back({a, b, c});
            }
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

// reduction neighbour: (a,b,c) -> (c, b', (b'^2-D)/(4c)) with b' the largest
// integer = -b (mod 2|c|) not exceeding floor(sqrt(D))
BinForm rho(const BinForm& f, int64_t D, int64_t sq) {
    const int64_t m = 2 * std::abs(f.c);
    int64_t t = (-f.b) % m;
    if (t < 0) t += m;
    const int64_t bp = sq - (sq - t) % m;
    const int64_t cp = (bp * bp - D) / (4 * f.c);
    return {f.c, bp, cp};
}

int64_t count_cycles(int64_t D) {
    const auto forms = reduced_forms(D);
    const auto sq = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(D)));
    std::set<BinForm> remaining(forms.begin(), forms.end());
    int64_t cycles = 0;
    while (!remaining.empty()) {
        ++cycles;
        const BinForm start = *remaining.begin();
        BinForm cur = start;
        do {
            remaining.erase(cur);
            cur = rho(cur, D, sq);
            if (!std::binary_search(forms.begin(), forms.end(), cur))
                throw Error("class number: rho left the reduced set");
        } while (!(cur == start));
    }
    return cycles;
}

bool is_squarefree(int64_t n) {
    for (auto [p, e] : factorize(static_cast<uint64_t>(n)))
        if (e > 1) return false;
    return true;
}

}  // namespace

LValue dirichlet_L1(int64_t delta0) {
    if (delta0 <= 1 || !is_squarefree(delta0))
        throw NotApplicableError("dirichlet_L1: delta0 must be squarefree and > 1");
    LValue out;
    out.delta0 = delta0;
    out.D = delta0 % 4 == 1 ? delta0 : 4 * delta0;
    const int64_t D = out.D;

    // method a: truncated series sum chi(n)/n. With N a multiple of the
    // period D, partial summation leaves the exact correction
    // (A/D)/(N+1) with A the sum of the periodic partial sums, and a
    // remainder bounded by max|V| / ((N+1)(N+2)).
    std::vector<int> chi(D);
    for (int64_t n = 0; n < D; ++n) chi[n] = kronecker(D, n);
    std::vector<int64_t> S(D + 1, 0);
    for (int64_t n = 1; n <= D; ++n) S[n] = S[n - 1] + chi[n % D];
    if (S[D] != 0) throw Error("dirichlet_L1: character not mean-zero");
    int64_t A = 0;
    for (int64_t n = 1; n <= D; ++n) A += S[n];
    // remainder after the mean correction: bounded by the largest partial
    // sum of S(n) - A/D over one period
    double max_v = 0;
    {
        double v = 0;
        const double mean = static_cast<double>(A) / D;
        for (int64_t n = 1; n <= D; ++n) {
            v += static_cast<double>(S[n]) - mean;
            max_v = std::max(max_v, std::abs(v));
        }
    }
    int64_t N = 2'000'000;
    N -= N % D;  // full periods
    long double sum = 0;
    for (int64_t n = N; n >= 1; --n)
        if (chi[n % D] != 0) sum += static_cast<long double>(chi[n % D]) / n;
    sum += static_cast<long double>(A) / D / (N + 1);
    out.method_a = static_cast<double>(sum);
    out.tail_bound = max_v / (static_cast<double>(N + 1) * (N + 2));

    // method b: 2 h log(eps) / sqrt(D). Reduced-form cycles give the
    // narrow class number; it equals h when the unit has norm -1 and
    // 2h when it has norm +1.
    const auto unit = fundamental_unit(D);
    out.unit_x = unit.x;
    out.unit_y = unit.y;
    out.unit_norm = unit.norm;
    out.h_narrow = count_cycles(D);
    if (unit.norm == 1) {
        if (out.h_narrow % 2 != 0) throw Error("dirichlet_L1: narrow class number parity");
        out.h = out.h_narrow / 2;
    } else {
        out.h = out.h_narrow;
    }
    out.log_unit = log_half_quadratic(unit.x, unit.y, D);
    out.method_b = 2.0 * static_cast<double>(out.h) * out.log_unit / std::sqrt(static_cast<double>(D));
    out.value = out.method_b;
    if (std::abs(out.method_a - out.method_b) > 1e-8)
        throw DisagreementError("dirichlet_L1: series and class number formula disagree at delta0=" +
                                std::to_string(delta0));
    return out;
}

double nonsquare_constant_family(int64_t delta) {
    if (delta <= 0) throw DomainError("nonsquare_constant_family: delta must be positive");
    int64_t delta0 = 1, delta1 = 1;
    for (auto [p, e] : factorize(static_cast<uint64_t>(delta))) {
        const auto pp = static_cast<int64_t>(p);
        if (e % 2 != 0) delta0 *= pp;
        for (int i = 0; i < e / 2; ++i) delta1 *= pp;
    }
    if (delta0 == 1)
        throw NotApplicableError("nonsquare_constant_family: delta is a perfect square");

    int64_t c;
    const bool even_delta = delta % 2 == 0;
    if (delta0 % 2 == 0) {
        c = delta1 % 2 == 0 ? 32 : 16;
    } else if (delta0 % 8 == 1) {
        c = 16;
    } else if (delta0 % 8 == 5) {
        c = even_delta ? 48 : 24;
    } else {  // delta0 = 3, 7 mod 8
        c = even_delta ? 32 : 24;
    }

    Rat correction = 1;
    for (auto [p, e] : factorize(static_cast<uint64_t>(delta1))) {
        const auto pp = static_cast<int64_t>(p);
        if (pp == 2 || delta0 % pp == 0) continue;  // S excludes p | 2 delta0
        correction *= (Rat(pp) - legendre(-1, pp)) / (Rat(pp) + legendre(delta0, pp));
    }
    for (auto [p, e] : factorize(static_cast<uint64_t>(delta0))) {
        const auto pp = static_cast<int64_t>(p);
        if (pp == 2) continue;
        correction /= 1 + Rat(legendre(-1, pp), pp);
    }

    const double L = dirichlet_L1(delta0).value;
    return static_cast<double>(c) / (kPi * std::sqrt(1.0 + static_cast<double>(delta))) * L *
           to_double(correction);
}

double prefactor_numberfield(int r, int s, int w, int64_t d, double R, int64_t h) {
    if (r < 0 || s < 0 || r + s < 1 || w < 2 || h < 1 || R <= 0 || d == 0)
        throw DomainError("prefactor_numberfield: invalid field invariants");
    return std::pow(2.0, r) * std::pow(2.0 * kPi, s) /
           (static_cast<double>(w) * std::sqrt(std::abs(static_cast<double>(d)))) * R *
           static_cast<double>(h);
}

}  // namespace qcount
