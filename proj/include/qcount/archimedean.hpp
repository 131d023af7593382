#pragma once

#include "qcount/forms.hpp"

#include <cstdint>

namespace qcount {

// Volume of the norm ball on the surface f = a under the Leray measure
// normalized by  omega ^ df = dx dy dz.
struct ArchIntegral {
    double T = 0;
    double value = 0;
    enum class Method { ClosedFormFamily, Quadrature } method = Method::Quadrature;
    double est_error = 0;  // quadrature only
};

// 2 pi sqrt((T^2 - 1) / (1 + delta)) for f = x^2 + y^2 - delta z^2, a = 1,
// Euclidean norm; zero for T <= 1
ArchIntegral closed_form_family(int64_t delta, double T);

struct QuadratureOptions {
    double rel_tol = 1e-8;
    int max_depth = 22;
    int panels = 16;  // initial subdivision of the angular integral
    int threads = 0;
};

// Numerical integration of the surface density  d(sigma) = dx dy / |df/dz|
// over { f = a, |(x,y,z)|_0 <= T }, both solution sheets. The surface is
// parametrized through an orthogonal eigenbasis of the Gram matrix; the
// substitution t = sqrt(r^2 - a) removes the waist singularity of the
// density exactly, leaving a one-dimensional angular integrand (an exact
// admissible-length computation in t) integrated adaptively.
ArchIntegral leray_quadrature(const TernaryForm& f, const Target& a, double T,
                              const NormSpec& norm = NormSpec::euclidean(),
                              const QuadratureOptions& opts = {});

}  // namespace qcount
