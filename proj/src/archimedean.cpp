#include "qcount/archimedean.hpp"

#include "qcount/errors.hpp"
#include "qcount/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace qcount {

namespace {

constexpr double kPi = std::numbers::pi;

using Mat3d = std::array<std::array<double, 3>, 3>;

// cyclic Jacobi sweeps; returns eigenvalues in `eig`, eigenvectors as the
// columns of `vec` (input = vec * diag(eig) * vec^T)
void jacobi_eigen(Mat3d a, std::array<double, 3>& eig, Mat3d& vec) {
    vec = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off < 1e-300) break;
        for (auto [p, q] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            if (std::abs(a[p][q]) < 1e-300) continue;
            const double tau = (a[q][q] - a[p][p]) / (2 * a[p][q]);
            const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
            const double c = 1 / std::sqrt(1 + t * t), s = t * c;
            const double apq = a[p][q];
            a[p][p] -= t * apq;
            a[q][q] += t * apq;
            a[p][q] = a[q][p] = 0;
            for (int r = 0; r < 3; ++r) {
                if (r == p || r == q) continue;
                const double arp = a[r][p], arq = a[r][q];
                a[r][p] = a[p][r] = c * arp - s * arq;
                a[r][q] = a[q][r] = s * arp + c * arq;
            }
            for (int r = 0; r < 3; ++r) {
                const double vrp = vec[r][p], vrq = vec[r][q];
                vec[r][p] = c * vrp - s * vrq;
                vec[r][q] = s * vrp + c * vrq;
            }
        }
    }
    for (int i = 0; i < 3; ++i) eig[i] = a[i][i];
}

struct SurfaceFrame {
    double lam1 = 0, lam2 = 0, mu = 0;  // lam1 u^2 + lam2 v^2 - mu w^2 = a
    Mat3d basis{};                      // original coords = basis * eigen coords
    double a = 0;
    double density = 0;  // 1 / (2 sqrt(lam1 lam2 mu)) per sheet in (t, theta)
    double t_min = 0;    // t = sqrt(r^2 - a) starts here
};

SurfaceFrame build_frame(const TernaryForm& f, const Target& target) {
    if (!f.is_indefinite()) throw DefiniteFormError();
    double sign = 1.0;
    if (f.negatives == 2) sign = -1.0;  // same surface and measure for (-f, -a)

    Mat3d g{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g[i][j] = sign * to_double(f.gram[i][j]);

    std::array<double, 3> eig{};
    Mat3d vec{};
    if (f.is_diagonal()) {
        eig = {g[0][0], g[1][1], g[2][2]};
        vec = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    } else {
        jacobi_eigen(g, eig, vec);
    }

    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return eig[i] > eig[j]; });
    if (!(eig[order[0]] > 0 && eig[order[1]] > 0 && eig[order[2]] < 0))
        throw Error("leray_quadrature: eigenvalue signs disagree with the signature");

    SurfaceFrame fr;
    fr.lam1 = eig[order[0]];
    fr.lam2 = eig[order[1]];
    fr.mu = -eig[order[2]];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) fr.basis[i][j] = vec[i][order[j]];
    fr.a = sign * static_cast<double>(target.a);
    fr.density = 0.5 / std::sqrt(fr.lam1 * fr.lam2 * fr.mu);
    fr.t_min = fr.a < 0 ? std::sqrt(-fr.a) : 0.0;
    return fr;
}

// admissible t-length at angle theta, both sheets combined
double section_length(const SurfaceFrame& fr, double theta, double T, const NormSpec& norm) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double g = ct * ct / fr.lam1 + st * st / fr.lam2;
    const double denom = g + 1.0 / fr.mu;

    if (norm.kind == NormKind::Euclidean) {
        const double tmax_sq = (T * T - fr.a * g) / denom;
        if (tmax_sq <= fr.t_min * fr.t_min) return 0;
        return 2 * (std::sqrt(tmax_sq) - fr.t_min);
    }

    // sup norm: coordinates x_i(t) = A_i sqrt(t^2 + a) + s B_i t must all
    // stay within [-T, T]; candidate interval endpoints are the roots of
    // A_i^2 (t^2 + a) = (c - s B_i t)^2 for c = +-T
    const double cap_sq = (3 * T * T - fr.a * g) / denom;  // cube inside sqrt(3) T ball
    if (cap_sq <= fr.t_min * fr.t_min) return 0;
    const double t_cap = std::sqrt(cap_sq);

    std::array<double, 3> A{}, B{};
    for (int i = 0; i < 3; ++i) {
        A[i] = fr.basis[i][0] * ct / std::sqrt(fr.lam1) + fr.basis[i][1] * st / std::sqrt(fr.lam2);
        B[i] = fr.basis[i][2] / std::sqrt(fr.mu);
    }

    double total = 0;
    for (double s : {1.0, -1.0}) {
        std::vector<double> cuts{fr.t_min, t_cap};
        for (int i = 0; i < 3; ++i) {
            const double bi = s * B[i];
            for (double c : {T, -T}) {
                // (A^2 - b^2) t^2 + 2 b c t + (A^2 a - c^2) = 0
                const double qa = A[i] * A[i] - bi * bi;
                const double qb = 2 * bi * c;
                const double qc = A[i] * A[i] * fr.a - c * c;
                if (std::abs(qa) < 1e-300) {
                    if (std::abs(qb) > 1e-300) cuts.push_back(-qc / qb);
                    continue;
                }
                const double disc = qb * qb - 4 * qa * qc;
                if (disc < 0) continue;
                const double sq = std::sqrt(disc);
                cuts.push_back((-qb + sq) / (2 * qa));
                cuts.push_back((-qb - sq) / (2 * qa));
            }
        }
        std::erase_if(cuts, [&](double t) { return !(t >= fr.t_min && t <= t_cap); });
        std::sort(cuts.begin(), cuts.end());
        for (size_t j = 0; j + 1 < cuts.size(); ++j) {
            const double lo = cuts[j], hi = cuts[j + 1];
            if (hi - lo <= 0) continue;
            const double tm = 0.5 * (lo + hi);
            const double r = std::sqrt(std::max(0.0, tm * tm + fr.a));
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) ok = std::abs(A[i] * r + s * B[i] * tm) <= T;
            if (ok) total += hi - lo;
        }
    }
    return total;
}

struct AdaptiveState {
    double est_error = 0;
    bool depth_exhausted = false;
};

double adaptive_simpson(const std::function<double(double)>& h, double lo, double hi, double flo,
                        double fmid, double fhi, double whole, double tol, int depth,
                        int max_depth, AdaptiveState& state) {
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    const double fl = h(lmid), fr = h(rmid);
    const double left = (mid - lo) / 6 * (flo + 4 * fl + fmid);
    const double right = (hi - mid) / 6 * (fmid + 4 * fr + fhi);
    const double err = (left + right - whole) / 15;
    if (std::abs(err) <= tol || depth >= max_depth) {
        state.est_error += std::abs(err);
        if (std::abs(err) > tol && depth >= max_depth) state.depth_exhausted = true;
        return left + right + err;  // Richardson correction
    }
    return adaptive_simpson(h, lo, mid, flo, fl, fmid, left, tol / 2, depth + 1, max_depth,
                            state) +
           adaptive_simpson(h, mid, hi, fmid, fr, fhi, right, tol / 2, depth + 1, max_depth,
                            state);
}

}  // namespace

ArchIntegral closed_form_family(int64_t delta, double T) {
    if (delta <= 0) throw DomainError("closed_form_family: delta must be positive");
    ArchIntegral out;
    out.T = T;
    out.method = ArchIntegral::Method::ClosedFormFamily;
    out.value = T <= 1 ? 0.0 : 2 * kPi * std::sqrt((T * T - 1) / (1.0 + static_cast<double>(delta)));
    return out;
}

ArchIntegral leray_quadrature(const TernaryForm& f, const Target& a, double T,
                              const NormSpec& norm, const QuadratureOptions& opts) {
    if (T < 0) throw DomainError("leray_quadrature: T must be non-negative");
    const auto frame = build_frame(f, a);
    const auto h = [&](double theta) {
        return frame.density * section_length(frame, theta, T, norm);
    };

    const int panels = std::max(4, opts.panels);
    const double width = 2 * kPi / panels;

    // coarse probe fixes the absolute tolerance and detects empty regions
    double rough = 0;
    for (int i = 0; i < panels; ++i)
        for (int j = 0; j < 9; ++j) rough += h(width * (i + (j + 0.5) / 9)) * width / 9;
    if (rough == 0) return {T, 0.0, ArchIntegral::Method::Quadrature, 0.0};
    const double tol_abs = opts.rel_tol * rough;

    std::vector<double> part(panels, 0), errs(panels, 0);
    bool exhausted = false;
    const int nt = resolve_threads(opts.threads);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int i = 0; i < panels; ++i) {
        const double lo = i * width, hi = lo + width;
        const double flo = h(lo), fhi = h(hi), fmid = h(0.5 * (lo + hi));
        const double whole = width / 6 * (flo + 4 * fmid + fhi);
        AdaptiveState state;
        part[i] = adaptive_simpson(h, lo, hi, flo, fmid, fhi, whole, tol_abs / panels, 0,
                                   opts.max_depth, state);
        errs[i] = state.est_error;
        if (state.depth_exhausted) {
#pragma omp atomic write
            exhausted = true;
        }
    }
    ArchIntegral out;
    out.T = T;
    out.method = ArchIntegral::Method::Quadrature;
    for (int i = 0; i < panels; ++i) out.value += part[i];  // fixed order
    for (int i = 0; i < panels; ++i) out.est_error += errs[i];
    if (exhausted && out.est_error > opts.rel_tol * std::abs(out.value))
        throw QuadratureFailureError("leray_quadrature: tolerance unmet at max refinement depth");
    return out;
}

}  // namespace qcount
