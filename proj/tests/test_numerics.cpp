#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qdot/numerics.hpp"

using namespace qdot;

namespace {
const QuadSpec spec{};
}

TEST_CASE("bessel_i0 against the series oracle") {
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) ==
          doctest::Approx(static_cast<double>(oracles::bessel_series(0, 1.0L, 40))).epsilon(1e-13));
    CHECK(bessel_i0(1.0) == doctest::Approx(oracles::ref::i0_at_1).epsilon(1e-13));
    // series/asymptotic crossover region
    CHECK(bessel_i0(10.0) ==
          doctest::Approx(static_cast<double>(oracles::bessel_series(0, 10.0L, 60))).epsilon(1e-13));
    CHECK(bessel_i0(10.0) == doctest::Approx(oracles::ref::i0_at_10).epsilon(1e-13));
    CHECK(bessel_i0(5.0) > bessel_i0(4.0));   // monotone for x > 0
    CHECK_THROWS_AS(bessel_i0(1000.0), std::range_error);
}

TEST_CASE("bessel_i1 against the series oracle and the I0 derivative") {
    CHECK(bessel_i1(0.0) == 0.0);
    CHECK(bessel_i1(1.0) ==
          doctest::Approx(static_cast<double>(oracles::bessel_series(1, 1.0L, 40))).epsilon(1e-13));
    CHECK(bessel_i1(1.0) == doctest::Approx(oracles::ref::i1_at_1).epsilon(1e-13));
    // d/dx I0 = I1, checked by h-refined central differences at x = 2
    const double fd = oracles::derivative([](double x) { return bessel_i0(x); }, 2.0, 1e-4);
    CHECK(fd == doctest::Approx(bessel_i1(2.0)).epsilon(1e-10));
    CHECK(bessel_i1(2.0) == doctest::Approx(oracles::ref::i1_at_2).epsilon(1e-13));
    // small-x limit I1(x)/x -> 1/2
    CHECK(bessel_i1_over_x(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(bessel_i1_over_x(1e-3) == doctest::Approx(bessel_i1(1e-3) / 1e-3).epsilon(1e-12));
}

TEST_CASE("bessel series/asymptotic overlap near the crossover") {
    // both evaluation paths must agree where they hand over
    for (double x = 13.0; x <= 18.0; x += 0.5) {
        const double series = static_cast<double>(oracles::bessel_series(0, x, 200));
        CHECK(bessel_i0(x) == doctest::Approx(series).epsilon(1e-12));
        const double series1 = static_cast<double>(oracles::bessel_series(1, x, 200));
        CHECK(bessel_i1(x) == doctest::Approx(series1).epsilon(1e-12));
    }
}

TEST_CASE("bessel recurrence I0 - I1' - I1/x = 0") {
    for (int i = 0; i < 20; ++i) {
        const double x = std::pow(10.0, -3.0 + (std::log10(30.0) + 3.0) * i / 19.0);
        const double h = std::max(1e-5 * x, 1e-7);
        const double di1 = oracles::derivative([](double t) { return bessel_i1(t); }, x, h);
        CHECK(std::abs(bessel_i0(x) - di1 - bessel_i1(x) / x) < 1e-10);
    }
}

TEST_CASE("elliptic integrals") {
    CHECK(elliptic_k(EllipticModulus{0.0}) == doctest::Approx(M_PI_2).epsilon(1e-15));
    CHECK(elliptic_e(EllipticModulus{0.0}) == doctest::Approx(M_PI_2).epsilon(1e-15));
    QuadSpec tight;
    tight.rel_tol = 1e-13;
    tight.abs_tol = 1e-15;
    for (double p : {0.1, 0.5, 0.9, 0.99}) {
        CHECK(elliptic_k(EllipticModulus{p}) ==
              doctest::Approx(oracles::elliptic_k_quadrature(p, tight)).epsilon(1e-12));
        CHECK(elliptic_e(EllipticModulus{p}) ==
              doctest::Approx(oracles::elliptic_e_quadrature(p, tight)).epsilon(1e-12));
    }
    CHECK(elliptic_k(EllipticModulus{0.5}) == doctest::Approx(oracles::ref::k_half).epsilon(1e-14));
    CHECK(elliptic_e(EllipticModulus{0.5}) == doctest::Approx(oracles::ref::e_half).epsilon(1e-14));
    for (double p = 0.05; p < 1.0; p += 0.05) {
        CHECK(elliptic_e(EllipticModulus{p}) <= elliptic_k(EllipticModulus{p}));
    }
    CHECK_THROWS_AS(elliptic_k(EllipticModulus{1.0}), std::domain_error);
    // complement forms agree with the direct ones away from p = 1
    const double pc = std::sqrt(1.0 - 0.49);
    CHECK(elliptic_k_complement(pc) == doctest::Approx(elliptic_k(EllipticModulus{0.7})).epsilon(1e-14));
    CHECK(elliptic_e_complement(pc) == doctest::Approx(elliptic_e(EllipticModulus{0.7})).epsilon(1e-14));
}

TEST_CASE("integrate_1d basics") {
    CHECK(integrate_1d([](double) { return 1.0; }, 0.0, 1.0, spec).value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(integrate_1d([](double x) { return x; }, 3.0, 3.0, spec).value == 0.0);

    // exact on polynomials up to degree 12
    for (int deg = 1; deg <= 12; ++deg) {
        auto f = [deg](double x) { return std::pow(x, deg); };
        const double exact = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        CHECK(integrate_1d(f, -1.0, 2.0, spec).value == doctest::Approx(exact).epsilon(1e-12));
    }

    // gaussian moment with the bound-state frequency
    const double om = oracles::ref::omega;
    const QuadResult q = integrate_1d([om](double x) { return std::exp(-om * x * x) * x; }, 0.0,
                                      std::sqrt(40.0 / om), spec);
    CHECK(q.value == doctest::Approx(0.5 / om).epsilon(1e-12));

    // defining integral of K(1/2)
    auto kint = [](double th) {
        const double s = std::sin(th);
        return 1.0 / std::sqrt(1.0 - 0.25 * s * s);
    };
    CHECK(integrate_1d(kint, 0.0, M_PI_2, spec).value ==
          doctest::Approx(elliptic_k(EllipticModulus{0.5})).epsilon(1e-12));

    // orientation: reversed limits flips the sign
    CHECK(integrate_1d([](double x) { return x * x; }, 2.0, 0.0, spec).value ==
          doctest::Approx(-8.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("integrate_1d flags non-convergence with the best estimate") {
    QuadSpec strict;
    strict.rel_tol = 1e-15;
    strict.abs_tol = 1e-300;
    strict.max_subdivisions = 2;
    const QuadResult q = integrate_1d([](double x) { return std::sqrt(std::abs(x)); }, 0.0, 1.0, strict);
    CHECK_FALSE(q.converged);
    CHECK(q.error > 0.0);
    CHECK(q.value == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
    CHECK_THROWS_AS(require_converged(q, "test"), QuadratureError);
}

TEST_CASE("integrate_semi_infinite") {
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 1.0, spec).value ==
          doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double) { return 0.0; }, 1.0, spec).value == 0.0);

    QuadSpec doubled = spec;
    doubled.truncation_radius *= 2.0;
    auto f = [](double x) { return x * x * std::exp(-0.26873 * x * x); };
    const double a = integrate_semi_infinite(f, 2.0, spec).value;
    const double b = integrate_semi_infinite(f, 2.0, doubled).value;
    CHECK(std::abs(a - b) <= spec.abs_tol);
}

TEST_CASE("integrate_2d_polar") {
    // area of the unit disk
    QuadSpec s = spec;
    const QuadResult disk = integrate_2d_polar([](double ss, double) { return ss <= 1.0 ? 1.0 : 0.0; },
                                               0.0, 0.0, s, 1.0);
    CHECK(disk.value == doctest::Approx(M_PI).epsilon(1e-12));

    // off-center gaussian still integrates to pi/a
    const double a = 0.7;
    const QuadResult g = integrate_2d_polar(
        [a](double ss, double phi) {
            const double x = 1.3 + ss * std::cos(phi);
            const double y = -0.4 + ss * std::sin(phi);
            return std::exp(-a * (x * x + y * y));
        },
        1.3, -0.4, s, 14.0);
    CHECK(g.value == doctest::Approx(M_PI / a).epsilon(1e-10));
}
