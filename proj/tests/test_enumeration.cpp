#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcount/enumeration.hpp"
#include "qcount/errors.hpp"
#include "qcount/factorization.hpp"

#include <cmath>

using namespace qcount;

namespace {

TernaryForm family(int64_t delta) { return parse_form(1, 1, -delta, 0, 0, 0); }

// independent oracle: full triple loop over the box
int64_t count_box(const TernaryForm& f, int64_t a, double T, const NormSpec& norm) {
    const auto lim = static_cast<int64_t>(std::floor(T));
    int64_t total = 0;
    for (int64_t x = -lim; x <= lim; ++x)
        for (int64_t y = -lim; y <= lim; ++y)
            for (int64_t z = -lim; z <= lim; ++z) {
                if (evaluate(f, x, y, z) != a) continue;
                if (norm.kind == NormKind::Euclidean) {
                    if (static_cast<double>(x * x + y * y + z * z) <= T * T) ++total;
                } else {
                    ++total;
                }
            }
    return total;
}

}  // namespace

TEST_CASE("generic scan matches the exhaustive box oracle") {
    const Target one(1);
    const auto f = family(1);
    CHECK(count_generic(f, one, 2.0).count == 12);
    CHECK(count_generic(f, one, 5.0).count == 52);
    CHECK(count_generic(f, one, 0.0).count == 0);
    CHECK(count_box(f, 1, 2.0, NormSpec::euclidean()) == 12);
    CHECK(count_box(f, 1, 5.0, NormSpec::euclidean()) == 52);
    for (double T : {3.0, 7.0, 11.5}) {
        for (const auto& norm : {NormSpec::euclidean(), NormSpec::sup()}) {
            CHECK(count_generic(f, one, T, norm).count == count_box(f, 1, T, norm));
        }
    }
    // a non-diagonal form against the box oracle
    const auto g = parse_form(1, 1, -1, 1, 0, 0);
    for (double T : {4.0, 9.0}) {
        CHECK(count_generic(g, one, T).count == count_box(g, 1, T, NormSpec::euclidean()));
        CHECK(count_generic(g, one, T, NormSpec::sup()).count ==
              count_box(g, 1, T, NormSpec::sup()));
    }
    // negative and composite targets
    for (int64_t a : {-1, 4, -9}) {
        CHECK(count_generic(f, Target(a), 6.0).count ==
              count_box(f, a, 6.0, NormSpec::euclidean()));
    }
}

TEST_CASE("family fast path equals the generic scan") {
    const Target one(1);
    CHECK(count_family_fast(1, one, 5.0).count == 52);
    CHECK(count_family_fast(1, one, 2.0).count == 12);
    CHECK(count_family_fast(1, one, 2.0).method == CountResult::Method::FamilyR2);
    for (int64_t delta : {1, 2, 3, 5}) {
        for (double T : {10.0, 33.0, 75.5}) {
            for (const auto& norm : {NormSpec::euclidean(), NormSpec::sup()}) {
                CAPTURE(delta);
                CAPTURE(T);
                CHECK(count_family_fast(delta, one, T, norm).count ==
                      count_generic(family(delta), one, T, norm).count);
            }
        }
    }
    // negative target: x^2 + y^2 - 2 z^2 = -1
    for (double T : {10.0, 25.0}) {
        CHECK(count_family_fast(2, Target(-1), T).count ==
              count_generic(family(2), Target(-1), T).count);
    }
}

TEST_CASE("cross_check runs the dual enumerators over a T range") {
    const Target one(1);
    CHECK(cross_check(family(1), one, 60));
    CHECK(cross_check(family(2), one, 60));
    CHECK(cross_check(family(4), one, 40, NormSpec::sup()));
    CHECK_THROWS_AS(cross_check(parse_form(1, 2, -1, 0, 0, 0), one, 10), NotApplicableError);
}

TEST_CASE("serial references agree with the parallel kernels") {
    const Target one(1);
    EnumOptions opts;
    opts.threads = 4;
    for (int64_t delta : {1, 3}) {
        const double T = 700.0;
        CHECK(count_family_fast(delta, one, T, NormSpec::euclidean(), opts).count ==
              count_family_fast_serial(delta, one, T));
        CHECK(count_generic(family(delta), one, 300.0, NormSpec::euclidean(), opts).count ==
              count_generic_serial(family(delta), one, 300.0));
    }
}

TEST_CASE("family counts with a = 1 are divisible by four") {
    const Target one(1);
    for (int64_t delta = 1; delta <= 6; ++delta) {
        for (double T : {5.0, 17.0, 30.0}) {
            const auto c = count_family_fast(delta, one, T).count;
            CAPTURE(delta);
            CAPTURE(T);
            CHECK(c % 4 == 0);
        }
    }
}

TEST_CASE("counts are monotone in T") {
    const Target one(1);
    int64_t prev = 0;
    for (double T : {5.0, 10.0, 20.0, 40.0, 80.0}) {
        const auto c = count_family_fast(2, one, T).count;
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("width guards") {
    EnumOptions opts;
    opts.t_guard = 100;
    CHECK_THROWS_AS(count_generic(family(1), Target(1), 200.0, NormSpec::euclidean(), opts),
                    WidthOverflowError);
}

TEST_CASE("list_points returns the solutions for small T") {
    const auto f = family(1);
    const auto pts = list_points(f, Target(1), 2.0);
    CHECK(pts.size() == 12);
    for (const auto& p : pts) {
        CHECK(evaluate(f, p[0], p[1], p[2]) == 1);
        CHECK(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] <= 4);
    }
    CHECK_THROWS_AS(list_points(f, Target(1), 101.0), DomainError);
}
