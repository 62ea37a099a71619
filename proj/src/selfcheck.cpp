#include "qdot/selfcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qdot/consistency.hpp"
#include "qdot/energies.hpp"
#include "qdot/fields.hpp"
#include "qdot/io.hpp"
#include "qdot/sources.hpp"
#include "qdot/wavefunction.hpp"

namespace qdot {

namespace {

std::string describe(double measured, double bound) {
    std::ostringstream os;
    os << "measured " << format_value(measured) << ", bound " << format_value(bound);
    return os.str();
}

void check(std::vector<CheckResult>& out, const std::string& name, double measured, double bound) {
    out.push_back({name, std::abs(measured) <= bound, describe(measured, bound)});
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const TripletParams& params, const QuadSpec& spec) {
    std::vector<CheckResult> out;

    // -- numerics ------------------------------------------------------------
    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = std::pow(10.0, -3.0 + (std::log10(30.0) + 3.0) * i / 19.0);
            const double h = std::max(1e-6, 1e-6 * x);
            const double di1 = (bessel_i1(x + h) - bessel_i1(x - h)) / (2.0 * h);
            worst = std::max(worst, std::abs(bessel_i0(x) - di1 - bessel_i1(x) / x));
        }
        check(out, "bessel recurrence I0 - I1' - I1/x", worst, 1e-10);

        double worst_ke = 0.0;
        for (double p = 0.05; p < 1.0; p += 0.1) {
            const double k = elliptic_k(EllipticModulus{p});
            const double e = elliptic_e(EllipticModulus{p});
            if (e > k) worst_ke = std::max(worst_ke, e - k);
        }
        check(out, "elliptic E <= K on (0,1)", worst_ke, 0.0);

        // degree-12 polynomial integrates exactly
        auto poly = [](double x) {
            double acc = 0.0;
            for (int k = 0; k <= 12; ++k) acc += (k + 1) * std::pow(x, k);
            return acc;
        };
        double exact = 0.0;
        for (int k = 0; k <= 12; ++k) exact += (k + 1) * (std::pow(2.0, k + 1) - 1.0) / (k + 1);
        const double got = integrate_1d(poly, 1.0, 2.0, spec).value;
        check(out, "integrate_1d exact on degree-12 polynomial", (got - exact) / exact, 1e-12);

        QuadSpec doubled = spec;
        doubled.truncation_radius *= 2.0;
        auto gauss_poly = [&](double x) { return x * x * std::exp(-params.omega * x * x); };
        const double scale = 1.0 / std::sqrt(params.omega);
        const double a = integrate_semi_infinite(gauss_poly, scale, spec).value;
        const double b = integrate_semi_infinite(gauss_poly, scale, doubled).value;
        check(out, "semi-infinite truncation doubling", b - a, spec.abs_tol);
    }

    // -- wavefunction ----------------------------------------------------------
    {
        std::mt19937 rng(20260809);
        std::uniform_real_distribution<double> radius(0.0, 6.0), angle(-M_PI, M_PI);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const PlanarPoint p1{radius(rng), angle(rng)};
            const PlanarPoint p2{radius(rng), angle(rng)};
            const double mag = psi(p1, p2, params).abs();
            if (mag > 1e-30) worst = std::max(worst, antisymmetry_residual(p1, p2, params) / mag);
        }
        check(out, "antisymmetry residual (1000 random pairs)", worst, 1e-14);

        double worst_rot = 0.0;
        for (int i = 0; i < 200; ++i) {
            const PlanarPoint p1{radius(rng), angle(rng)};
            const PlanarPoint p2{radius(rng), angle(rng)};
            const double rot = angle(rng);
            const double m0 = psi(p1, p2, params).abs();
            const double m1 = psi(PlanarPoint{p1.r, p1.theta + rot},
                                  PlanarPoint{p2.r, p2.theta + rot}, params)
                                  .abs();
            if (m0 > 1e-30) worst_rot = std::max(worst_rot, std::abs(m1 - m0) / m0);
        }
        check(out, "modulus rotation invariance", worst_rot, 1e-13);

        check(out, "norm_check = 1", norm_check(params, spec) - 1.0, 1e-6);

        // first positive root of the relative polynomial beyond contact
        auto tail = [&](double u) { return 1.0 + params.c2 * u + params.c3 * u * u + params.c4 * u * u * u; };
        double lo = 4.0, hi = 8.0;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            ((tail(lo) > 0.0) == (tail(mid) > 0.0) ? lo : hi) = mid;
        }
        const double u_star = 0.5 * (lo + hi);
        out.push_back({"excited-state node u* in (4, 8)", u_star > 4.0 && u_star < 8.0,
                       "u* = " + format_value(u_star)});

        const PlanarPoint fixed{1.0, 0.0};
        const CoalescenceProfile prof =
            coalescence_profile(fixed, 0.7, {1e-2, 1e-3, 1e-4}, params);
        const double expected = params.norm * std::exp(-params.omega * fixed.r * fixed.r);
        check(out, "coalescence limit N e^{-Om r^2}", prof.limit / expected - 1.0, 1e-3);
    }

    // -- sources ---------------------------------------------------------------
    {
        const QuadResult total = integrate_semi_infinite(
            [&](double r) { return density(r, params) * r; }, 1.0 / std::sqrt(params.omega), spec);
        check(out, "density normalization = 2", 2.0 * M_PI * total.value - 2.0, 1e-6);

        double worst_sum = 0.0, worst_sign = 0.0;
        for (double r = 0.25; r <= 6.0; r += 0.25) {
            const CurrentDecomposition c = current_components(r, params);
            worst_sum = std::max(worst_sum, std::abs(c.j_total - (c.j_p + c.j_d + c.j_m)));
            worst_sign = std::min({c.j_p, c.j_d, c.j_m});
        }
        check(out, "current decomposition identity", worst_sum, 1e-12);
        out.push_back({"counterclockwise circulation of all components", worst_sign > 0.0,
                       "min component " + format_value(worst_sign)});

        double worst_closed = 0.0;
        for (double r : {0.0, 0.5, 1.0, 2.0, 4.0, 6.0}) {
            const double closed = density(r, params);
            const double oracle = density_oracle(r, params, spec).value;
            worst_closed = std::max(worst_closed, std::abs(closed - oracle) / closed);
        }
        check(out, "density closed form vs integral form", worst_closed, 1e-8);

        const PlanarPoint ref{1.0, 0.0};
        const QuadResult gsum = integrate_2d_polar(
            [&](double s, double phi) {
                const PlanarPoint target = PlanarPoint::cartesian(
                    ref.x() + s * std::cos(phi), ref.y() + s * std::sin(phi));
                return pair_density(ref, target, params);
            },
            ref.x(), ref.y(), spec);
        check(out, "pair-correlation sum rule (r = 1)", gsum.value - 1.0, 1e-5);
        const QuadResult xsum = integrate_2d_polar(
            [&](double s, double phi) {
                const PlanarPoint target = PlanarPoint::cartesian(
                    ref.x() + s * std::cos(phi), ref.y() + s * std::sin(phi));
                return xc_hole(ref, target, params);
            },
            ref.x(), ref.y(), spec);
        check(out, "hole sum rule (r = 1)", xsum.value + 1.0, 1e-5);

        const std::complex<double> g12 = density_matrix(0.3, 1.1, 0.8, 1.7, params, spec);
        const std::complex<double> g21 = density_matrix(1.1, 0.3, 1.7, 0.8, params, spec);
        check(out, "density-matrix Hermiticity", std::abs(g12 - std::conj(g21)), 1e-9);
    }

    // -- fields ------------------------------------------------------------------
    {
        double worst = 0.0;
        for (double wl : {0.0, 0.05, 0.1, 0.5}) {
            TripletParams p2 = params;
            p2.omega_l = wl;
            p2.omega0_sq = p2.k_eff - wl * wl;
            for (double r : {0.5, 1.0, 3.0}) {
                worst = std::max(worst, std::abs(m_field(r, p2) + wl * wl * r));
                worst = std::max(worst,
                                 std::abs(lorentz_field(r, p2) + internal_magnetic_field(r, p2) +
                                          m_field(r, p2)));
            }
        }
        check(out, "M = -omega_l^2 r and L + I_m + M = 0", worst, 1e-12);

        const FieldBundle b0 = field_bundle(0.0, params, spec);
        const double at_origin = std::abs(b0.e_ee) + std::abs(b0.e_H) + std::abs(b0.e_xc) +
                                 std::abs(b0.Z) + std::abs(b0.D) + std::abs(b0.L) +
                                 std::abs(b0.I_m);
        check(out, "all fields vanish at the origin", at_origin, 1e-10);

        double worst_force = 0.0;
        const double r_far = 15.0;
        worst_force = std::max({std::abs(density(r_far, params) * field_ee(r_far, params)),
                                std::abs(kinetic_force(r_far, params)),
                                std::abs(differential_density_force(r_far, params)),
                                std::abs(2.0 * params.omega_l *
                                         current_components(r_far, params).j_total)});
        check(out, "forces vanish asymptotically (r = 15)", worst_force, 1e-12);
    }

    // -- energies ----------------------------------------------------------------
    {
        check(out, "E_ee closed vs virial route",
              energy_ee(params) - energy_ee_virial(params, spec), 1e-4);
        check(out, "T closed vs virial route",
              kinetic_energy(params) - kinetic_energy_virial(params, spec), 1e-4);
        check(out, "E_es+mag closed vs quadrature",
              energy_es_mag(params) - energy_es_mag_quadrature(params, spec), 1e-5);
        const ExpectationValues closed = expectation_values(params);
        const ExpectationValues quad = expectation_values_quadrature(params, spec);
        const double worst = std::max({std::abs(closed.r2 - quad.r2), std::abs(closed.r - quad.r),
                                       std::abs(closed.inv_r - quad.inv_r),
                                       std::abs(closed.delta - quad.delta)});
        check(out, "expectation values closed vs quadrature", worst, 1e-5);
    }

    // -- consistency ---------------------------------------------------------------
    {
        std::vector<double> grid;
        for (int i = 0; i < 60; ++i) grid.push_back(0.1 + (6.0 - 0.1) * i / 59.0);
        const LawReport law = law_report(grid, params);
        check(out, "first-law residual on [0.1, 6]", law.max_abs_residual, 1e-4);

        RadialProfile dz;
        dz.quantity = "DplusZ";
        for (size_t i = 0; i < grid.size(); ++i) {
            if (grid[i] >= 0.2 && grid[i] <= 5.0) dz.samples.push_back({grid[i], law.d_plus_z[i], 0.0});
        }
        const HarmonicFit fit = fit_harmonic(dz, 0.2, 5.0, FitKind::field_slope);
        check(out, "D + Z linear over [0.2, 5]", fit.max_abs_deviation, 1e-4);

        const double w0a = extract_veff(3.0, params, spec, 6.0);
        const double w0b = extract_veff(3.0, params, spec, 10.0);
        check(out, "v_eff path independence (r_ref 6 vs 10)", w0a - w0b, 1e-6);

        const SelfConsistencyReport sc = self_consistency_check(params, spec);
        out.push_back({"self-consistency fixed point", sc.pass,
                       "omega0^2 recovered " + format_value(sc.omega0_sq_recovered) +
                           ", deviation " + format_value(sc.max_abs_deviation)});
    }

    return out;
}

}  // namespace qdot
