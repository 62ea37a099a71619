#include "qdot/energies.hpp"

#include <cmath>

#include "qdot/detail/forms.hpp"
#include "qdot/fields.hpp"
#include "qdot/sources.hpp"

namespace qdot {

double energy_ee(const TripletParams& params) {
    // <W> = <1/u> factorizes over the relative coordinate:
    // (pi^2 N^2 / Om) int_0^inf e^{-Om u^2/2} g0(u)^2 du.
    const PolySquaredCoeffs p = g0_squared_coefficients(params.c2, params.c3, params.c4);
    double s = 0.0;
    for (int j = 2; j <= 8; ++j) s += p.d[j] * half_gaussian_moment(j, 0.5 * params.omega);
    return M_PI * M_PI * params.norm * params.norm / params.omega * s;
}

double energy_ee_virial(const TripletParams& params, const QuadSpec& spec) {
    const detail::GaussBesselForm force = detail::interaction_force_form(params);
    const QuadResult q = integrate_semi_infinite(
        [&](double r) { return force.value(r) * r * r; }, 1.0 / std::sqrt(params.omega), spec);
    return 2.0 * M_PI * require_converged(q, "energy_ee_virial");
}

double energy_hartree(const TripletParams& params, const QuadSpec& spec) {
    const detail::GaussBesselForm rho = detail::density_form(params);
    const QuadResult q = integrate_semi_infinite(
        [&](double r) { return rho.value(r) * field_hartree(r, params, spec) * r * r; },
        1.0 / std::sqrt(params.omega), spec);
    return 2.0 * M_PI * require_converged(q, "energy_hartree");
}

double energy_hartree_double_integral(const TripletParams& params, const QuadSpec& spec) {
    const detail::GaussBesselForm rho = detail::density_form(params);
    const double r_end = spec.truncation_radius + 1.0;
    // Ring potential of the sheet: V(r) = 4 int rho(r') r' K(p)/(r+r') dr';
    // K has an integrable log singularity at r' = r, split there.
    auto potential = [&](double r) {
        auto f = [&](double rp) {
            const double pc = std::abs(r - rp) / (r + rp);
            return rho.value(rp) * rp * elliptic_k_complement(pc) / (r + rp);
        };
        const double left = require_converged(integrate_1d(f, 0.0, r, spec), "ring potential");
        const double right = require_converged(integrate_1d(f, r, r_end, spec), "ring potential");
        return 4.0 * (left + right);
    };
    const QuadResult q = integrate_1d(
        [&](double r) { return rho.value(r) * potential(r) * r; }, 0.0, r_end, spec);
    return 0.5 * 2.0 * M_PI * require_converged(q, "energy_hartree_double_integral");
}

double energy_xc(const TripletParams& params, const QuadSpec& spec) {
    const detail::GaussBesselForm rho = detail::density_form(params);
    const detail::GaussBesselForm force = detail::interaction_force_form(params);
    const QuadResult q = integrate_semi_infinite(
        [&](double r) {
            const double e_xc = force.value(r) - rho.value(r) * field_hartree(r, params, spec);
            return e_xc * r * r;
        },
        1.0 / std::sqrt(params.omega), spec);
    return 2.0 * M_PI * require_converged(q, "energy_xc");
}

double kinetic_energy(const TripletParams& params) {
    const double om = params.omega;
    const double A = params.c2, B = params.c3, C = params.c4;
    const double n_com = std::sqrt(2.0 * om / M_PI);   // center-of-mass normalization
    const double n_rel = params.norm / n_com;          // relative-coordinate normalization
    const double om2 = om * om, om3 = om2 * om, om4 = om3 * om;
    const double bracket =
        480.0 * C * C + 12.0 * A * A * om2 +
        3.0 * A * std::sqrt(0.5 * M_PI) * std::pow(om, 1.5) * (13.0 * B + 3.0 * om) +
        1.5 * C * (85.0 * B * std::sqrt(2.0 * M_PI * om) + 64.0 * A * om +
                   5.0 * std::sqrt(2.0 * M_PI) * std::pow(om, 1.5)) +
        4.0 * om * (16.0 * B * B + 4.0 * B * om + om2);
    return n_com * n_com * M_PI / 4.0 + n_rel * n_rel * M_PI / om4 * bracket;
}

double kinetic_energy_virial(const TripletParams& params, const QuadSpec& spec) {
    const QuadResult q = integrate_semi_infinite(
        [&](double r) { return r * r * kinetic_force(r, params); },
        1.0 / std::sqrt(params.omega), spec);
    return -M_PI * require_converged(q, "kinetic_energy_virial");
}

double kinetic_energy_trace(const TripletParams& params, const QuadSpec& spec) {
    const QuadResult q = integrate_semi_infinite(
        [&](double r) {
            const KineticTensorValue t = kinetic_tensor(r, params);
            return (t.f + 2.0 * t.k) * r;
        },
        1.0 / std::sqrt(params.omega), spec);
    return 2.0 * M_PI * require_converged(q, "kinetic_energy_trace");
}

double energy_es_mag(const TripletParams& params) {
    return 0.5 * params.k_eff * expectation_values(params).r2;
}

double harmonic_energy_quadrature(const std::function<double(double)>& rho, double k,
                                  const QuadSpec& spec) {
    const QuadResult q = integrate_1d([&](double r) { return rho(r) * r * r * r; }, 0.0,
                                      spec.truncation_radius, spec);
    return M_PI * k * require_converged(q, "harmonic_energy_quadrature");
}

double energy_es_mag_quadrature(const TripletParams& params, const QuadSpec& spec) {
    const detail::GaussBesselForm rho = detail::density_form(params);
    return harmonic_energy_quadrature([&](double r) { return rho.value(r); }, params.k_eff, spec);
}

double total_energy(const TripletParams& params, const QuadSpec& spec) {
    const double e_h = energy_hartree(params, spec);
    const double e_xc = energy_ee(params) - e_h;
    return kinetic_energy(params) + e_h + e_xc + energy_es_mag(params);
}

double ionization_potential(const TripletParams& params, const QuadSpec& spec) {
    // One-electron dot ground state energy is Omega (n = 0).
    return params.omega - total_energy(params, spec);
}

namespace {

// int_0^inf t^{k-1/2} e^{-(3/2) Om t} I_nu(Om t / 2) dt
//   = sqrt(2/pi) Om^{-k-1/2} (a K + b E),  K/E complete elliptic integrals at
// modulus 1/sqrt(2) (parameter 1/2); rational tables from successive
// -d/d(alpha) of the k = 0 Laplace transforms.
double laplace_bessel_half(int nu, int k, double om, double K, double E) {
    static const double h0[6][2] = {{1.0, 0.0},           {0.0, 1.0 / 2},
                                    {-1.0 / 8, 3.0 / 4},  {-3.0 / 8, 27.0 / 16},
                                    {-83.0 / 64, 21.0 / 4}, {-351.0 / 64, 2709.0 / 128}};
    static const double h1[6][2] = {{3.0, -4.0},          {-1.0, 3.0 / 2},
                                    {-3.0 / 8, 3.0 / 4},  {-1.0 / 2, 21.0 / 16},
                                    {-81.0 / 64, 63.0 / 16}, {-153.0 / 32, 2079.0 / 128}};
    const double(&tab)[2] = (nu == 0) ? h0[k] : h1[k];
    return std::sqrt(2.0 / M_PI) * std::pow(om, -k - 0.5) * (tab[0] * K + tab[1] * E);
}

}  // namespace

ExpectationValues expectation_values(const TripletParams& params) {
    const double om = params.omega;
    const double A = params.c2, B = params.c3, C = params.c4;
    const double n2 = params.norm * params.norm;
    ExpectationValues out{};

    const double om3h = std::pow(om, 1.5), om5h = std::pow(om, 2.5);
    out.r2 = M_PI * M_PI * n2 / (2.0 * std::pow(om, 7)) *
             (4608.0 * C * C + 1155.0 * B * C * std::sqrt(2.0 * M_PI * om) +
              480.0 * (B * B + 2.0 * A * C) * om +
              135.0 * (A * B + C) * std::sqrt(2.0 * M_PI) * om3h +
              64.0 * (A * A + 2.0 * B) * om * om + 21.0 * A * std::sqrt(2.0 * M_PI) * om5h +
              12.0 * om * om * om);

    // <r> and <1/r> from the radial moments of the density closed form; the
    // Bessel pieces bring in K and E at modulus 1/sqrt(2).
    const double K = elliptic_k(EllipticModulus{1.0 / std::sqrt(2.0)});
    const double E = elliptic_e(EllipticModulus{1.0 / std::sqrt(2.0)});
    const detail::GaussBesselForm rho = detail::density_form(params);
    double r1 = 0.0, rm1 = 0.0;
    for (int k = 0; k <= 4; ++k) {
        r1 += rho.G[k] * half_gaussian_moment(2 * k + 2, om);
        rm1 += rho.G[k] * half_gaussian_moment(2 * k, om);
        r1 += 0.5 * (rho.P0[k] * laplace_bessel_half(0, k + 1, om, K, E) +
                     rho.P1[k] * laplace_bessel_half(1, k + 1, om, K, E));
        rm1 += 0.5 * (rho.P0[k] * laplace_bessel_half(0, k, om, K, E) +
                      rho.P1[k] * laplace_bessel_half(1, k, om, K, E));
    }
    out.r = 2.0 * M_PI * rho.scale * r1;
    out.inv_r = 2.0 * M_PI * rho.scale * rm1;
    out.delta = density(0.0, params);
    return out;
}

ExpectationValues expectation_values_quadrature(const TripletParams& params,
                                                const QuadSpec& spec) {
    const detail::GaussBesselForm rho = detail::density_form(params);
    const double scale = 1.0 / std::sqrt(params.omega);
    auto moment = [&](int n) {
        const QuadResult q = integrate_semi_infinite(
            [&](double r) { return rho.value(r) * std::pow(r, n); }, scale, spec);
        return 2.0 * M_PI * require_converged(q, "expectation moment");
    };
    ExpectationValues out{};
    out.r2 = moment(3);
    out.r = moment(2);
    out.inv_r = moment(0);   // rho(r) 2 pi r / r: finite integrand down to r = 0
    out.delta = require_converged(density_oracle(0.0, params, spec), "expect_delta");
    return out;
}

EnergyReport energy_report(const TripletParams& params, const QuadSpec& spec) {
    EnergyReport rep{};
    rep.T = kinetic_energy(params);
    rep.E_ee = energy_ee(params);
    rep.E_H = energy_hartree(params, spec);
    rep.E_xc = rep.E_ee - rep.E_H;
    rep.E_es_plus_mag = energy_es_mag(params);
    rep.E_total = rep.T + rep.E_H + rep.E_xc + rep.E_es_plus_mag;
    rep.IP = params.omega - rep.E_total;
    const ExpectationValues ev = expectation_values(params);
    rep.expect_r2 = ev.r2;
    rep.expect_r = ev.r;
    rep.expect_inv_r = ev.inv_r;
    rep.expect_delta = ev.delta;
    return rep;
}

EnergyReport energy_report_quadrature(const TripletParams& params, const QuadSpec& spec) {
    EnergyReport rep{};
    rep.T = kinetic_energy_virial(params, spec);
    rep.E_ee = energy_ee_virial(params, spec);
    rep.E_H = energy_hartree_double_integral(params, spec);
    rep.E_xc = energy_xc(params, spec);
    rep.E_es_plus_mag = energy_es_mag_quadrature(params, spec);
    rep.E_total = rep.T + rep.E_H + rep.E_xc + rep.E_es_plus_mag;
    rep.IP = params.omega - rep.E_total;
    const ExpectationValues ev = expectation_values_quadrature(params, spec);
    rep.expect_r2 = ev.r2;
    rep.expect_r = ev.r;
    rep.expect_inv_r = ev.inv_r;
    rep.expect_delta = ev.delta;
    return rep;
}

}  // namespace qdot
