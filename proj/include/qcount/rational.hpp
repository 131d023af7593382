#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace qcount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

// floor(sqrt(n)) for n >= 0
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// A rational p/q in lowest terms is a square iff it is positive and both
// p and q are perfect integer squares.
inline bool is_rational_square(const Rat& r, Rat* root = nullptr) {
    if (r <= 0) return false;
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int rn, rd;
    if (!is_perfect_square(num, &rn) || !is_perfect_square(den, &rd)) return false;
    if (root) *root = Rat(rn, rd);
    return true;
}

}  // namespace qcount
