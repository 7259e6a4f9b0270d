#include <cmath>
#include <numbers>

#include <doctest.h>

#include "bmw/errors.hpp"
#include "bmw/numerics.hpp"
#include "bmw/random.hpp"
#include "bmw/special_functions.hpp"

using bmw::adaptive_quad;
using bmw::brent_root;
using bmw::central_diff;

TEST_CASE("adaptive_quad on constants and polynomials") {
    auto one = adaptive_quad([](double) { return 1.0; }, 0.0, 1.0, 1e-14);
    CHECK(std::abs(one.value - 1.0) <= 1e-14);
    CHECK(one.evaluations >= 15);

    // beta integrand with integer shapes: B(2,3) = 1/12
    auto b23 = adaptive_quad([](double u) { return u * (1.0 - u) * (1.0 - u); },
                             0.0, 1.0, 1e-14);
    CHECK(std::abs(b23.value - 1.0 / 12.0) <= 1e-14);
}

TEST_CASE("adaptive_quad handles endpoint singularities") {
    // u^(-0.8): integrable, divergent at 0
    auto q = adaptive_quad([](double u) { return std::pow(u, -0.8); },
                           0.0, 1.0, 1e-12);
    CHECK(std::abs(q.value - 5.0) <= 1e-11);
}

TEST_CASE("adaptive_quad improper upper limit") {
    auto q = adaptive_quad([](double x) { return std::exp(-x); }, 0.0,
                           std::numeric_limits<double>::infinity(), 1e-13);
    CHECK(std::abs(q.value - 1.0) <= 1e-12);

    // x^(-1/2) e^(-x) integrates to Gamma(1/2) = sqrt(pi)
    auto g = adaptive_quad(
        [](double x) { return std::exp(-x) / std::sqrt(x); }, 0.0,
        std::numeric_limits<double>::infinity(), 1e-12);
    CHECK(std::abs(g.value - std::sqrt(std::numbers::pi)) <= 1e-11);
}

TEST_CASE("adaptive_quad error paths") {
    CHECK_THROWS_AS(adaptive_quad([](double) { return 1.0; }, 1.0, 0.0, 1e-10),
                    bmw::DomainError);
    CHECK_THROWS_AS(adaptive_quad([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                    bmw::DomainError);
    // non-finite integrand values are a diagnostic, not a silent zero
    CHECK_THROWS_AS(adaptive_quad([](double u) { return 1.0 / (u - 0.5); },
                                  0.0, 1.0, 1e-15),
                    bmw::ConvergenceError);
}

TEST_CASE("quadrature of the beta integrand reproduces exp(log_beta)") {
    // a, b in [0.3, 10]: split at 1/2 and mirror the upper half so the only
    // singular endpoint sits at 0, where doubles have plenty of range.
    bmw::Xoshiro256StarStar gen(bmw::SeedSpec{2024, 1});
    for (int trial = 0; trial < 40; ++trial) {
        const double a = 0.3 + 9.7 * gen.uniform01();
        const double b = 0.3 + 9.7 * gen.uniform01();
        auto lower = adaptive_quad(
            [&](double u) {
                return std::pow(u, a - 1.0) * std::pow(1.0 - u, b - 1.0);
            },
            0.0, 0.5, 1e-15);
        auto upper = adaptive_quad(
            [&](double u) {
                return std::pow(u, b - 1.0) * std::pow(1.0 - u, a - 1.0);
            },
            0.0, 0.5, 1e-15);
        const double quad = lower.value + upper.value;
        const double exact = std::exp(bmw::log_beta({a, b}));
        CHECK(std::abs(quad - exact) / exact <= 1e-10);
    }
}

TEST_CASE("central_diff") {
    auto sq = [](double x) { return x * x; };
    CHECK(std::abs(central_diff(sq, 3.0, 1e-3) - 6.0) <= 1e-8);

    auto expf = [](double x) { return std::exp(x); };
    CHECK(std::abs(central_diff(expf, 1.0, 1e-2) - std::exp(1.0)) <= 1e-10);

    // F' = e^-x for the unit exponential cdf
    auto ecdf = [](double x) { return -std::expm1(-x); };
    CHECK(std::abs(central_diff(ecdf, 1.0, 1e-3) - std::exp(-1.0)) <= 1e-8);

    CHECK_THROWS_AS(central_diff(sq, 1.0, 0.0), bmw::DomainError);
}

TEST_CASE("brent_root") {
    CHECK(std::abs(brent_root([](double x) { return x - 2.0; }, 0.0, 5.0, 1e-14)
                   - 2.0) <= 1e-12);
    // median of the unit exponential
    const double r = brent_root([](double x) { return -std::expm1(-x) - 0.5; },
                                0.0, 10.0, 1e-14);
    CHECK(std::abs(r - std::numbers::ln2) <= 1e-12);

    CHECK_THROWS_AS(brent_root([](double x) { return x + 3.0; }, 0.0, 1.0, 1e-12),
                    bmw::DomainError);
}

TEST_CASE("grid builders") {
    const auto lin = bmw::linear_grid(0.0, 5.0, 6);
    REQUIRE(lin.size() == 6);
    CHECK(lin.front() == 0.0);
    CHECK(lin.back() == 5.0);
    CHECK(lin[3] == doctest::Approx(3.0));

    const auto lg = bmw::log_grid(1e-3, 8.0, 400);
    REQUIRE(lg.size() == 400);
    CHECK(lg.front() == 1e-3);
    CHECK(lg.back() == 8.0);
    CHECK(std::is_sorted(lg.begin(), lg.end()));

    CHECK_THROWS_AS(bmw::log_grid(0.0, 1.0, 10), bmw::DomainError);
    CHECK_THROWS_AS(bmw::linear_grid(0.0, 1.0, 1), bmw::DomainError);
}
