#include "qcount/forms.hpp"

#include "qcount/errors.hpp"

#include <cmath>
#include <sstream>

namespace qcount {

namespace {

Rat det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

void add_row_col(Mat3& m, int dst, int src) {
    for (int j = 0; j < 3; ++j) m[dst][j] += m[src][j];
    for (int i = 0; i < 3; ++i) m[i][dst] += m[i][src];
}

void swap_row_col(Mat3& m, int i, int j) {
    for (int c = 0; c < 3; ++c) std::swap(m[i][c], m[j][c]);
    for (int r = 0; r < 3; ++r) std::swap(m[r][i], m[r][j]);
}

}  // namespace

std::pair<int, int> signature_of(const Mat3& input) {
    Mat3 m = input;
    int pos = 0, neg = 0;
    for (int step = 0; step < 3; ++step) {
        int pivot = -1;
        for (int i = step; i < 3; ++i)
            if (m[i][i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // all remaining diagonal entries vanish; a nonzero off-diagonal
            // entry g_ij gives a new pivot via e_i -> e_i + e_j
            int oi = -1, oj = -1;
            for (int i = step; i < 3 && oi < 0; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (m[i][j] != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi < 0) break;  // remaining block is zero
            add_row_col(m, oi, oj);
            pivot = oi;
        }
        if (pivot != step) swap_row_col(m, pivot, step);
        const Rat d = m[step][step];
        if (d > 0)
            ++pos;
        else
            ++neg;
        for (int r = step + 1; r < 3; ++r) {
            if (m[r][step] == 0) continue;
            const Rat factor = m[r][step] / d;
            for (int c = 0; c < 3; ++c) m[r][c] -= factor * m[step][c];
            for (int c = 0; c < 3; ++c) m[c][r] -= factor * m[c][step];
        }
    }
    return {pos, neg};
}

TernaryForm parse_form(const std::array<int64_t, 6>& coeffs) {
    TernaryForm f;
    f.coeffs = coeffs;
    const auto& c = coeffs;
    f.gram = Mat3{{{Rat(c[0]), Rat(c[3], 2), Rat(c[4], 2)},
                   {Rat(c[3], 2), Rat(c[1]), Rat(c[5], 2)},
                   {Rat(c[4], 2), Rat(c[5], 2), Rat(c[2])}}};
    f.det = det3(f.gram);
    if (f.det == 0) throw DegenerateFormError();
    auto [pos, neg] = signature_of(f.gram);
    f.positives = pos;
    f.negatives = neg;
    return f;
}

TernaryForm parse_form(int64_t a11, int64_t a22, int64_t a33, int64_t a12, int64_t a13,
                       int64_t a23) {
    return parse_form(std::array<int64_t, 6>{a11, a22, a33, a12, a13, a23});
}

TernaryForm parse_form(const std::string& csv) {
    std::array<int64_t, 6> c{};
    std::stringstream ss(csv);
    std::string tok;
    size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 6) throw DomainError("form: expected six comma-separated integers");
        try {
            size_t used = 0;
            c[i] = std::stoll(tok, &used);
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError("form: bad integer '" + tok + "'");
        }
        ++i;
    }
    if (i != 6) throw DomainError("form: expected six comma-separated integers");
    return parse_form(c);
}

Int TernaryForm::det2gram() const {
    Rat d = det * 8;
    Int num = boost::multiprecision::numerator(d);
    Int den = boost::multiprecision::denominator(d);
    if (den != 1) throw Error("internal: det(2*Gram) not integral");
    return num;
}

std::string TernaryForm::to_string() const {
    std::string s;
    for (size_t i = 0; i < 6; ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs[i]);
    }
    return s;
}

Target::Target(int64_t value) : a(value) {
    if (a == 0) throw DomainError("target: a must be a nonzero integer");
}

__int128 evaluate(const TernaryForm& f, int64_t x, int64_t y, int64_t z) {
    const auto& c = f.coeffs;
    __int128 acc = 0;
    auto mul_add = [&acc](int64_t coef, int64_t u, int64_t v) {
        __int128 t;
        if (__builtin_mul_overflow(static_cast<__int128>(u), static_cast<__int128>(v), &t) ||
            __builtin_mul_overflow(t, static_cast<__int128>(coef), &t) ||
            __builtin_add_overflow(acc, t, &acc))
            throw WidthOverflowError("evaluate: 128-bit width exceeded; reduce T");
    };
    mul_add(c[0], x, x);
    mul_add(c[1], y, y);
    mul_add(c[2], z, z);
    mul_add(c[3], x, y);
    mul_add(c[4], x, z);
    mul_add(c[5], y, z);
    return acc;
}

RegimeClass classify(const TernaryForm& f, const Target& a) {
    if (!f.is_indefinite()) throw DefiniteFormError();
    const Rat target = -Rat(a.a) * f.det;
    Rat root;
    if (is_rational_square(target, &root)) return {Regime::SquareCase, root};
    return {Regime::NonSquareCase, std::nullopt};
}

NormSpec NormSpec::parse(const std::string& name) {
    if (name == "euclidean" || name == "l2") return euclidean();
    if (name == "sup" || name == "linf") return sup();
    throw DomainError("unknown norm '" + name + "' (expected euclidean|sup)");
}

}  // namespace qcount
