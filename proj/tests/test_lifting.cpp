#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tropbt/errors.hpp"
#include "tropbt/lifting.hpp"

#include <cmath>
#include <random>

using namespace tropbt;

TEST_CASE("appendix unit values") {
    SUBCASE("left model with a=b=c=1") {
        Mult4Forms f = mult4_initial_forms(true, 1, 1, 1);
        CHECK(f.m == doctest::Approx(-0.125).epsilon(1e-15));
        CHECK(f.n == doctest::Approx(8.0).epsilon(1e-15));
        CHECK(f.x1 == doctest::Approx((3 + 2 * std::sqrt(3.0)) / 64).epsilon(1e-15));
        CHECK(f.y1 == doctest::Approx(-(1 + std::sqrt(3.0)) / 4).epsilon(1e-15));
        CHECK(f.x2 == doctest::Approx((3 - 2 * std::sqrt(3.0)) / 64).epsilon(1e-15));
        CHECK(f.y2 == doctest::Approx(-(1 - std::sqrt(3.0)) / 4).epsilon(1e-15));
    }
    SUBCASE("right model with a=b=c=1") {
        Mult4Forms f = mult4_initial_forms(false, 1, 1, 1);
        CHECK(f.m == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(f.n == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(f.x1 == doctest::Approx(4 * (1 + std::sqrt(2.0))).epsilon(1e-15));
        CHECK(f.y1 == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
        CHECK(f.x2 == doctest::Approx(4 * (1 - std::sqrt(2.0))).epsilon(1e-15));
        CHECK(f.y2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("zero coefficients are rejected") {
        CHECK_THROWS_AS(mult4_initial_forms(true, 0, 1, 1), error);
    }
}

TEST_CASE("appendix residuals vanish for random coefficient triples") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mag(0.25, 4.0);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (bool left : {true, false}) {
        for (int it = 0; it < 100; ++it) {
            double a = mag(rng) * (sgn(rng) ? 1 : -1);
            double b = mag(rng) * (sgn(rng) ? 1 : -1);
            double c = mag(rng) * (sgn(rng) ? 1 : -1);
            Mult4Forms f = mult4_initial_forms(left, a, b, c);
            for (bool second : {false, true}) {
                Mult4Residual r = mult4_residual(left, a, b, c, f, second);
                CHECK(std::abs(r.q) < 1e-12 * std::max(1.0, std::abs(a)) * 64);
                CHECK(std::abs(r.line) < 1e-12 * 64);
                CHECK(std::abs(r.wronskian) < 1e-12 * std::max(1.0, std::abs(a)) * 64);
            }
            // The two tangency points are distinct.
            CHECK(std::abs(f.x1 - f.x2) > 1e-9);
        }
    }
}

TEST_CASE("residual check for the (2,3,5) triple") {
    Mult4Forms f = mult4_initial_forms(true, 2, 3, 5);
    for (bool second : {false, true}) {
        Mult4Residual r = mult4_residual(true, 2, 3, 5, f, second);
        CHECK(std::abs(r.q) < 1e-12);
        CHECK(std::abs(r.line) < 1e-12);
        CHECK(std::abs(r.wronskian) < 1e-12);
    }
}

TEST_CASE("scaling the coefficient triple preserves condition signs") {
    // Multiplying (a, b, c) by a positive constant rescales the solution
    // data but no sign that enters a lifting condition.
    Mult4Forms f1 = mult4_initial_forms(true, 1.0, -2.0, 3.0);
    Mult4Forms f2 = mult4_initial_forms(true, 2.5, -5.0, 7.5);
    CHECK(std::signbit(f1.m) == std::signbit(f2.m));
    CHECK(std::signbit(f1.n) == std::signbit(f2.n));
    CHECK(std::signbit(f1.y1) == std::signbit(f2.y1));
}
