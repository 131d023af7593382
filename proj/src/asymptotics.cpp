#include "qcount/asymptotics.hpp"

#include "qcount/errors.hpp"
#include "qcount/factorization.hpp"
#include "qcount/parallel.hpp"

#include <chrono>
#include <cmath>

namespace qcount {

namespace {

int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

double arch_value(const TernaryForm& f, const Target& a, double T, const NormSpec& norm,
                  const PredictOptions& opts) {
    const auto family = f.family_delta();
    const bool closed_ok = family && a.a == 1 && norm.kind == NormKind::Euclidean;
    switch (opts.arch) {
        case PredictOptions::Arch::Closed:
            if (!closed_ok)
                throw NotApplicableError(
                    "closed-form integral applies only to the family with a=1, Euclidean norm");
            return closed_form_family(*family, T).value;
        case PredictOptions::Arch::Quadrature:
            return leray_quadrature(f, a, T, norm, opts.quadrature).value;
        case PredictOptions::Arch::Auto:
        default:
            if (closed_ok) return closed_form_family(*family, T).value;
            return leray_quadrature(f, a, T, norm, opts.quadrature).value;
    }
}

// incremental Euclidean-family counter: rungs reuse earlier z ranges
struct FamilyAccumulator {
    int64_t delta;
    int64_t a;
    int retry_budget;
    int threads;
    int64_t z_done = -1;
    int64_t total = 0;

    int64_t count_up_to(double T) {
        const long double t2 = static_cast<long double>(T) * T;
        const long double coef = static_cast<long double>(delta) + 1;
        if (static_cast<long double>(a) > t2) return 0;  // ladder is increasing; z_done stays
        auto zmax = static_cast<int64_t>(std::sqrt(std::max(0.0L, (t2 - a) / coef)));
        while (zmax > 0 && static_cast<long double>(a) + coef * zmax * zmax > t2) --zmax;
        while (static_cast<long double>(a) + coef * (zmax + 1) * (zmax + 1) <= t2) ++zmax;
        if (z_done < 0) {
            total = r2_count(a, retry_budget);
            z_done = 0;
        }
        int64_t fresh = 0;
        const int64_t lo = z_done + 1;
        const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 256) num_threads(nt) reduction(+ : fresh)
        for (int64_t z = lo; z <= zmax; ++z) fresh += 2 * r2_count(a + delta * z * z, retry_budget);
        total += fresh;
        z_done = std::max(z_done, zmax);
        return total;
    }
};

}  // namespace

Prediction predict(const TernaryForm& f, const Target& a, double T, const NormSpec& norm,
                   const PredictOptions& opts, const EulerConstant* cached_constant) {
    Prediction p;
    p.regime = classify(f, a);
    p.T = T;
    if (p.regime.tag == Regime::SquareCase) {
        const double rational_prefactor = prefactor_numberfield(1, 0, 2, 1, 1.0, 1);
        double constant;
        if (cached_constant) {
            constant = cached_constant->value;
        } else {
            constant =
                finite_constant_square_case(f, a, opts.alpha_source, opts.density).value;
        }
        p.finite_constant = rational_prefactor * constant;
        p.arch_integral = arch_value(f, a, T, norm, opts);
        p.log_factor = std::log(T);
    } else {
        const auto family = f.family_delta();
        if (!family || a.a != 1)
            throw NotApplicableError(
                "non-square predictions are available only for x^2+y^2-delta z^2 with a=1");
        p.finite_constant = nonsquare_constant_family(*family);
        p.arch_integral = T;
        p.log_factor = 1.0;
    }
    p.predicted = p.finite_constant * p.arch_integral * p.log_factor;
    return p;
}

VerifyReport verify(const TernaryForm& f, const Target& a, double t_min, double t_max, int rungs,
                    const NormSpec& norm, const VerifyOptions& opts) {
    if (t_min < 10) throw DomainError("verify: t_min must be at least 10");
    if (rungs < 3) throw DomainError("verify: at least 3 rungs required");
    if (t_max <= t_min) throw DomainError("verify: t_max must exceed t_min");

    VerifyReport rep;
    rep.form = f;
    rep.a = a.a;
    rep.norm = norm;
    rep.regime = classify(f, a);

    PredictOptions popts = opts.predict;
    const EulerConstant* cached = nullptr;
    if (rep.regime.tag == Regime::SquareCase) {
        rep.constant =
            finite_constant_square_case(f, a, popts.alpha_source, popts.density);
        cached = &*rep.constant;
    } else {
        const auto family = f.family_delta();
        if (!family || a.a != 1)
            throw NotApplicableError("verify: non-square case supported only for the family, a=1");
        int64_t delta0 = 1;
        for (auto [p, e] : factorize(static_cast<uint64_t>(*family)))
            if (e % 2 != 0) delta0 *= static_cast<int64_t>(p);
        rep.lvalue = dirichlet_L1(delta0);
        rep.linear_constant = nonsquare_constant_family(*family);
    }

    const double step = std::pow(t_max / t_min, 1.0 / (rungs - 1));
    const auto family = f.family_delta();
    const bool incremental = family && norm.kind == NormKind::Euclidean;
    FamilyAccumulator accum{family ? *family : 0, a.a, opts.enumeration.retry_budget,
                            opts.enumeration.threads};

    for (int j = 0; j < rungs; ++j) {
        const double T = t_min * std::pow(step, j);
        VerifyRung rung;
        rung.T = T;
        const int64_t t0 = now_ms();
        if (incremental) {
            rung.count = accum.count_up_to(T);
        } else if (family) {
            rung.count = count_family_fast(*family, a, T, norm, opts.enumeration).count;
        } else {
            rung.count = count_generic(f, a, T, norm, opts.enumeration).count;
        }
        rung.elapsed_ms = now_ms() - t0;
        rung.breakdown = predict(f, a, T, norm, popts, cached);
        rung.predicted = rung.breakdown.predicted;
        rung.ratio = static_cast<double>(rung.count) / rung.predicted;
        rep.ladder.push_back(rung);
    }

    const auto n = rep.ladder.size();
    rep.trend_ok = std::abs(rep.ladder[n - 1].ratio - 1.0) <=
                   std::abs(rep.ladder[n - 2].ratio - 1.0);
    return rep;
}

}  // namespace qcount
