#pragma once

#include "qcount/archimedean.hpp"
#include "qcount/enumeration.hpp"
#include "qcount/euler_product.hpp"
#include "qcount/forms.hpp"
#include "qcount/local_density.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qcount {

// Predicted point count at height T:
//   square case      finite_constant * log(T) * arch_integral
//   non-square case  nonsquare_constant_family(delta) * T   (family only)
// The three multiplicands are kept as the breakdown; their product is the
// prediction. For the square case the rational-field prefactor (equal to 1)
// is multiplied into the finite constant so the general formula path is
// exercised.
struct Prediction {
    RegimeClass regime;
    double T = 0;
    double predicted = 0;
    double finite_constant = 0;
    double arch_integral = 0;
    double log_factor = 0;
};

struct VerifyRung {
    double T = 0;
    int64_t count = 0;
    double predicted = 0;
    double ratio = 0;
    int64_t elapsed_ms = 0;
    Prediction breakdown;
};

struct VerifyReport {
    TernaryForm form;
    int64_t a = 0;
    RegimeClass regime;
    NormSpec norm;
    std::optional<EulerConstant> constant;   // square case
    std::optional<LValue> lvalue;            // non-square family case
    double linear_constant = 0;              // non-square family case
    std::vector<VerifyRung> ladder;
    bool trend_ok = false;
};

struct PredictOptions {
    enum class Arch { Auto, Closed, Quadrature } arch = Arch::Auto;
    AlphaSource alpha_source = AlphaSource::Brute;
    DensityOptions density;
    QuadratureOptions quadrature;
};

Prediction predict(const TernaryForm& f, const Target& a, double T,
                   const NormSpec& norm = NormSpec::euclidean(), const PredictOptions& opts = {},
                   const EulerConstant* cached_constant = nullptr);

struct VerifyOptions {
    PredictOptions predict;
    EnumOptions enumeration;
};

// Geometric ladder T_j = t_min * step^j with step = (t_max/t_min)^(1/(rungs-1));
// extending t_max by one step appends a rung without disturbing earlier ones.
VerifyReport verify(const TernaryForm& f, const Target& a, double t_min, double t_max, int rungs,
                    const NormSpec& norm = NormSpec::euclidean(), const VerifyOptions& opts = {});

}  // namespace qcount
