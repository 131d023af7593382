#pragma once

#include "qcount/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace qcount {

using Mat3 = std::array<std::array<Rat, 3>, 3>;

// Integral ternary quadratic form
//   f = a11 x^2 + a22 y^2 + a33 z^2 + a12 xy + a13 xz + a23 yz
// with its half-integral Gram matrix (diagonal a_ii, off-diagonal a_ij/2).
// det is the determinant of the Gram matrix; it is nonzero for every
// accepted form and invariant under unimodular change of variables.
struct TernaryForm {
    std::array<int64_t, 6> coeffs{};  // a11, a22, a33, a12, a13, a23
    Mat3 gram{};
    Rat det;
    int positives = 0;
    int negatives = 0;

    bool is_diagonal() const { return coeffs[3] == 0 && coeffs[4] == 0 && coeffs[5] == 0; }
    bool is_indefinite() const { return positives > 0 && negatives > 0; }

    // delta when the form is x^2 + y^2 - delta z^2 with delta > 0
    std::optional<int64_t> family_delta() const {
        if (is_diagonal() && coeffs[0] == 1 && coeffs[1] == 1 && coeffs[2] < 0)
            return -coeffs[2];
        return std::nullopt;
    }

    // det(2*Gram), an integer equal to 8*det(f); its prime support drives
    // the ramified set and p-adic valuations.
    Int det2gram() const;

    std::string to_string() const;  // "a11,a22,a33,a12,a13,a23"
};

struct Target {
    int64_t a;
    explicit Target(int64_t value);
};

enum class Regime { SquareCase, NonSquareCase };

// SquareCase iff -a*det(f) is the square of a rational; the witness root
// is stored when present.
struct RegimeClass {
    Regime tag;
    std::optional<Rat> square_root;
};

enum class NormKind { Euclidean, Sup };

// Any norm equivalent to the Euclidean one within a factor C0 is admissible;
// the two offered here satisfy C0^-1 |v| <= |v|_0 <= C0 |v|.
struct NormSpec {
    NormKind kind = NormKind::Euclidean;
    double c0() const { return kind == NormKind::Euclidean ? 1.0 : std::sqrt(3.0); }
    static NormSpec euclidean() { return {NormKind::Euclidean}; }
    static NormSpec sup() { return {NormKind::Sup}; }
    static NormSpec parse(const std::string& name);
    const char* name() const { return kind == NormKind::Euclidean ? "euclidean" : "sup"; }
};

TernaryForm parse_form(const std::array<int64_t, 6>& coeffs);
TernaryForm parse_form(int64_t a11, int64_t a22, int64_t a33, int64_t a12, int64_t a13,
                       int64_t a23);
TernaryForm parse_form(const std::string& csv);  // "a11,a22,a33,a12,a13,a23"

// f(x,y,z), exact; intermediates carried at 128-bit width
__int128 evaluate(const TernaryForm& f, int64_t x, int64_t y, int64_t z);

RegimeClass classify(const TernaryForm& f, const Target& a);

// signature of an exact-rational symmetric matrix by iterated completion
// of the square with pivot search; returns (positives, negatives)
std::pair<int, int> signature_of(const Mat3& m);

}  // namespace qcount
