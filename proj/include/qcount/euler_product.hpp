#pragma once

#include "qcount/forms.hpp"
#include "qcount/local_density.hpp"
#include "qcount/rational.hpp"

#include <cstdint>
#include <vector>

namespace qcount {

enum class AlphaSource { Brute, Closed, Both };

// The finite constant prod_p (1 - 1/p) alpha_p(f, a) of the square case.
// The product over unramified primes telescopes against zeta(2): for those
// p the factor is (1 - 1/p)(1 + 1/p) = 1 - 1/p^2, and the full product of
// (1 - 1/p^2) is 6/pi^2, so only an exact rational correction at the
// ramified primes remains. No truncation is involved.
struct EulerConstant {
    std::vector<int64_t> ramified;            // primes dividing 2 a det(2 Gram)
    std::vector<LocalDensity> alphas;         // alpha_p at the ramified primes
    Rat ramified_factor;                      // prod (1-1/p) alpha_p / (1-1/p^2)
    double value = 0;                         // ramified_factor * 6/pi^2
    double lo = 0, hi = 0;                    // numerical enclosure of value
};

EulerConstant finite_constant_square_case(const TernaryForm& f, const Target& a,
                                          AlphaSource source = AlphaSource::Brute,
                                          const DensityOptions& opts = {});

// L(1, chi) for the quadratic character of Q(sqrt(delta0)), delta0 > 1
// squarefree, computed two independent ways:
//   method_a  truncated Dirichlet series with a partial-summation tail
//             correction and rigorous bound,
//   method_b  class number formula 2 h log(eps) / sqrt(D) with the
//             fundamental unit from the continued fraction of the order
//             and h from brute-force reduced-form cycle counting.
struct LValue {
    int64_t delta0 = 0;
    int64_t D = 0;           // fundamental discriminant
    double value = 0;        // = method_b
    double method_a = 0;
    double method_b = 0;
    double tail_bound = 0;   // rigorous series truncation bound
    int64_t h = 0;           // class number of Q(sqrt(delta0))
    int64_t h_narrow = 0;    // reduced-form cycle count
    Int unit_x, unit_y;      // fundamental unit (x + y sqrt(D)) / 2
    int unit_norm = 0;       // +1 or -1
    double log_unit = 0;
};

LValue dirichlet_L1(int64_t delta0);

// coefficient of T in the non-square branch for f = x^2 + y^2 - delta z^2,
// a = 1, delta = delta0 * delta1^2 with delta0 > 1 squarefree
double nonsquare_constant_family(int64_t delta);

// 2^r (2pi)^s / (w sqrt|d|) * R * h
double prefactor_numberfield(int r, int s, int w, int64_t d, double R, int64_t h);

}  // namespace qcount
