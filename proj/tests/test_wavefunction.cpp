#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qdot/wavefunction.hpp"

using namespace qdot;

namespace {
const TripletParams params = TripletParams::paper();
const QuadSpec spec = QuadSpec::for_gaussian_scale(params.omega);
}

TEST_CASE("state constants") {
    CHECK(params.omega == doctest::Approx(oracles::ref::omega).epsilon(1e-15));
    CHECK(params.k_eff == doctest::Approx(oracles::ref::k_eff).epsilon(1e-15));
    CHECK(params.omega * params.omega == doctest::Approx(params.k_eff).epsilon(1e-12));
    CHECK(params.omega0_sq == doctest::Approx(params.k_eff - 0.01).epsilon(1e-12));
    CHECK(params.c2 == 1.0 / 3.0);
    CHECK(params.c3 == doctest::Approx(oracles::ref::c3).epsilon(1e-15));
    CHECK(params.c4 == doctest::Approx(oracles::ref::c4).epsilon(1e-15));
    CHECK(params.norm == doctest::Approx(oracles::ref::norm).epsilon(1e-12));
    // published roundings of the same constants
    CHECK(std::abs(params.omega - 0.268732) < 5e-7);
    CHECK(std::abs(params.k_eff - 0.072217) < 2e-7);
    CHECK(std::abs(params.c3 - (-0.059108)) < 5e-7);
    CHECK(std::abs(params.c4 - (-0.015884)) < 5e-7);
    CHECK(std::abs(params.norm - 0.02246632108) < 5e-8);
    CHECK(std::abs(params.omega0_sq - 0.062217) < 5e-7);
}

TEST_CASE("psi: coalescence node and collinear reality") {
    const PlanarPoint p{1.3, 0.7};
    const ComplexAmplitude at_contact = psi(p, p, params);
    CHECK(at_contact.re == 0.0);
    CHECK(at_contact.im == 0.0);

    // collinear points: amplitude real up to the sign of e^{i th_u}
    for (double r1 : {0.5, 2.0}) {
        for (double r2 : {1.0, 3.5}) {
            const ComplexAmplitude a = psi(PlanarPoint{r1, 0.0}, PlanarPoint{r2, 0.0}, params);
            CHECK(a.im == 0.0);
            // sign carried by the relative-vector direction
            const double u = r2 - r1;
            const double poly = oracles::g0(std::abs(u), params);
            if (poly > 0.0) CHECK((a.re > 0.0) == (u > 0.0));
        }
    }
}

TEST_CASE("psi: swap antisymmetry") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> radius(0.0, 6.0), angle(-M_PI, M_PI);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const PlanarPoint p1{radius(rng), angle(rng)};
        const PlanarPoint p2{radius(rng), angle(rng)};
        const ComplexAmplitude a = psi(p1, p2, params);
        const ComplexAmplitude b = psi(p2, p1, params);
        CHECK(a.re == doctest::Approx(-b.re).epsilon(1e-13).scale(1e-6));
        CHECK(a.im == doctest::Approx(-b.im).epsilon(1e-13).scale(1e-6));
        const double mag = a.abs();
        if (mag > 1e-30) worst = std::max(worst, antisymmetry_residual(p1, p2, params) / mag);
    }
    CHECK(worst <= 1e-14);
    CHECK(antisymmetry_residual(PlanarPoint{1.0, 0.3}, PlanarPoint{1.0, 0.3}, params) == 0.0);
}

TEST_CASE("psi: modulus depends only on (r1, r2, theta2 - theta1)") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> radius(0.1, 5.0), angle(-M_PI, M_PI);
    for (int i = 0; i < 200; ++i) {
        const PlanarPoint p1{radius(rng), angle(rng)};
        const PlanarPoint p2{radius(rng), angle(rng)};
        const double rot = angle(rng);
        const double m0 = psi(p1, p2, params).abs();
        const double m1 =
            psi(PlanarPoint{p1.r, p1.theta + rot}, PlanarPoint{p2.r, p2.theta + rot}, params).abs();
        CHECK(m1 == doctest::Approx(m0).epsilon(1e-13));
    }
}

TEST_CASE("norm_check") {
    CHECK(norm_check(params, spec) == doctest::Approx(1.0).epsilon(1e-6));
    TripletParams doubled = params;
    doubled.norm *= 2.0;
    CHECK(norm_check(doubled, spec) == doctest::Approx(4.0).epsilon(1e-6));
    TripletParams zero = params;
    zero.norm = 0.0;
    CHECK(norm_check(zero, spec) == 0.0);
}

TEST_CASE("coalescence profile") {
    // limit N at the origin
    const CoalescenceProfile origin =
        coalescence_profile(PlanarPoint{0.0, 0.0}, 0.3, {1e-2, 1e-3, 1e-4}, params);
    CHECK(origin.limit == doctest::Approx(params.norm).epsilon(1e-4));

    // limit N e^{-Omega r^2} at (1, 0)
    const CoalescenceProfile off =
        coalescence_profile(PlanarPoint{1.0, 0.0}, 0.0, {1e-2, 1e-3, 1e-4}, params);
    CHECK(off.limit == doctest::Approx(params.norm * std::exp(-params.omega)).epsilon(1e-3));

    // odd parity about the coalescence point. Perpendicular to the radius
    // the one-body Gaussian is unchanged and the parity is exact; along any
    // other direction it holds to leading order in u (the Gaussian factors
    // of the two displaced points differ by e^{-2 Omega (r.uhat) u}).
    const PlanarPoint p2{1.0, 0.0};
    const double u = 1e-3;
    auto displaced = [&](double dir, double sign) {
        return PlanarPoint::cartesian(p2.x() + sign * u * std::cos(dir),
                                      p2.y() + sign * u * std::sin(dir));
    };
    const ComplexAmplitude pf = psi(displaced(M_PI_2, 1.0), p2, params);
    const ComplexAmplitude pb = psi(displaced(M_PI_2, -1.0), p2, params);
    CHECK(pf.re == doctest::Approx(-pb.re).epsilon(1e-12));
    CHECK(pf.im == doctest::Approx(-pb.im).epsilon(1e-12));
    const ComplexAmplitude af = psi(displaced(0.8, 1.0), p2, params);
    const ComplexAmplitude ab = psi(displaced(0.8, -1.0), p2, params);
    CHECK(af.re == doctest::Approx(-ab.re).epsilon(2.0 * params.omega * u * 2.0));
    CHECK(af.im == doctest::Approx(-ab.im).epsilon(2.0 * params.omega * u * 2.0));

    // limit matches N e^{-Omega r2^2} for several anchor points
    for (double r2 : {0.5, 1.5, 2.5}) {
        const CoalescenceProfile prof =
            coalescence_profile(PlanarPoint{r2, 1.1}, 2.0, {1e-2, 1e-3, 1e-4}, params);
        CHECK(prof.limit == doctest::Approx(params.norm * std::exp(-params.omega * r2 * r2)).epsilon(1e-3));
    }
}

TEST_CASE("node scan: collinear case is real with the excited-state node") {
    const NodeScan scan = node_scan(0.0, 0.0, 8.0, 64, params);
    CHECK(scan.imag_identically_zero);
    CHECK(scan.origin_node);
    // all real-part sign changes must sit on |r2 - r1| = u*
    REQUIRE(!scan.loci.empty());
    for (const auto& locus : scan.loci) {
        CHECK(std::abs(std::abs(locus.r2 - locus.r1) - oracles::ref::u_star) < 1e-6);
    }
}

TEST_CASE("node scan: skew angles expose all three node families") {
    const double th1 = M_PI / 4.0, th2 = M_PI / 3.0;   // 45 and 60 degrees
    const NodeScan scan = node_scan(th1, th2, 6.0, 64, params);
    CHECK_FALSE(scan.imag_identically_zero);
    CHECK(scan.origin_node);

    bool found_re_projection = false;   // equal x-projections: cos(th1) r1 = cos(th2) r2
    bool found_im_projection = false;   // equal y-projections: sin(th1) r1 = sin(th2) r2
    bool found_excited = false;         // u = u* polynomial node
    for (const auto& locus : scan.loci) {
        const double ux = locus.r2 * std::cos(th2) - locus.r1 * std::cos(th1);
        const double uy = locus.r2 * std::sin(th2) - locus.r1 * std::sin(th1);
        const double u = std::hypot(ux, uy);
        if (std::abs(u - oracles::ref::u_star) < 1e-6) {
            found_excited = true;
            continue;
        }
        if (locus.part == NodePart::real && std::abs(ux) < 1e-6) found_re_projection = true;
        if (locus.part == NodePart::imag && std::abs(uy) < 1e-6) found_im_projection = true;
        // every node must be one of the three kinds
        CHECK((std::abs(u - oracles::ref::u_star) < 1e-6 ||
               (locus.part == NodePart::real && std::abs(ux) < 1e-6) ||
               (locus.part == NodePart::imag && std::abs(uy) < 1e-6)));
    }
    CHECK(found_re_projection);
    CHECK(found_im_projection);
    CHECK(found_excited);
}

TEST_CASE("node scan: degenerate projection line at theta2 = 90 degrees") {
    // cos(th2) = 0 pushes the equal-x-projection node onto the r1 = 0 axis,
    // so the interior real-part sign changes come from the polynomial node
    // only; the equal-y-projection line survives for the imaginary part.
    const double th1 = M_PI / 4.0, th2 = M_PI / 2.0;
    const NodeScan scan = node_scan(th1, th2, 6.0, 64, params);
    bool found_im_projection = false;
    for (const auto& locus : scan.loci) {
        const double ux = locus.r2 * std::cos(th2) - locus.r1 * std::cos(th1);
        const double uy = locus.r2 * std::sin(th2) - locus.r1 * std::sin(th1);
        const double u = std::hypot(ux, uy);
        if (locus.part == NodePart::real) {
            CHECK(std::abs(u - oracles::ref::u_star) < 1e-6);
        } else if (std::abs(uy) < 1e-6) {
            found_im_projection = true;
        }
    }
    CHECK(found_im_projection);
}

TEST_CASE("excited-state node location is stable under refinement") {
    auto tail = [&](double u) {
        return 1.0 + params.c2 * u + params.c3 * u * u + params.c4 * u * u * u;
    };
    double lo = 4.0, hi = 8.0;
    REQUIRE(tail(lo) > 0.0);
    REQUIRE(tail(hi) < 0.0);
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((tail(mid) > 0.0) ? lo : hi) = mid;
    }
    CHECK(hi - lo < 1e-10);
    CHECK(0.5 * (lo + hi) == doctest::Approx(oracles::ref::u_star).epsilon(1e-10));
    // the polynomial factor stays positive below the node
    for (double u = 0.1; u < 4.3; u += 0.1) CHECK(oracles::g0(u, params) > 0.0);
}
