#include "qdot/fields.hpp"

#include <algorithm>
#include <cmath>

#include "qdot/detail/forms.hpp"
#include "qdot/sources.hpp"

namespace qdot {

double field_ee(double r, const TripletParams& params) {
    if (r == 0.0) return 0.0;
    return detail::interaction_force_form(params).value(r) / density(r, params);
}

double field_hartree(double r, const TripletParams& params, const QuadSpec& spec) {
    if (r == 0.0) return 0.0;
    const detail::GaussBesselForm rho = detail::density_form(params);
    auto w = [&](double rp) { return rho.value(rp) * rp; };

    // Field at r of a unit ring at r': (1/(pi r)) [E(p)/(r-r') + K(p)/(r+r')],
    // p = 2 sqrt(r r')/(r+r'). The complement |r-r'|/(r+r') feeds the AGM
    // directly so the kernel stays accurate arbitrarily close to the ring.
    auto ring = [&](double rp) {
        const double pc = std::abs(r - rp) / (r + rp);
        return elliptic_e_complement(pc) / (r - rp) + elliptic_k_complement(pc) / (r + rp);
    };
    const double r_end = std::max(spec.truncation_radius + 1.0, r + 5.0);
    const double delta = 0.5 * std::min({r, 4.0, r_end - r});

    auto reg = [&](double rp) { return w(rp) * ring(rp); };
    double total = require_converged(integrate_1d(reg, 0.0, r - delta, spec), "field_hartree");
    total += require_converged(integrate_1d(reg, r + delta, r_end, spec), "field_hartree");

    // Across the pole: split E(p)/(r-r') into the pure first-order pole plus
    // a bounded remainder. The pole integrates as a principal value; pairing
    // r' = r -+ s makes it an ordinary integral of a smooth difference.
    total += require_converged(
        integrate_1d([&](double s) { return (w(r - s) - w(r + s)) / s; }, 0.0, delta, spec),
        "field_hartree (pole)");
    auto remainder = [&](double rp) {
        const double pc = std::abs(r - rp) / (r + rp);
        return w(rp) * ((elliptic_e_complement(pc) - 1.0) / (r - rp) +
                        elliptic_k_complement(pc) / (r + rp));
    };
    total += require_converged(integrate_1d(remainder, r - delta, r, spec),
                               "field_hartree (left log)");
    total += require_converged(integrate_1d(remainder, r, r + delta, spec),
                               "field_hartree (right log)");
    return 2.0 * total / r;
}

double field_xc(double r, const TripletParams& params, const QuadSpec& spec) {
    if (r == 0.0) return 0.0;
    return field_ee(r, params) - field_hartree(r, params, spec);
}

namespace {

// f(r) = t F(t) with t = r^2; F and k and their t-derivatives assembled from
// the kinetic integrals f1, f2, f3 and the density.
struct KineticParts {
    double F, F_t;
    double k, k_t;
};

KineticParts kinetic_parts(double t, const TripletParams& params) {
    const double om = params.omega;
    const double pref = M_PI * params.norm * params.norm * std::exp(-2.0 * om * t);
    const detail::Jet4 f1 = detail::kinetic_f1_form(params).jet_t(t);
    const detail::Jet4 f2 = detail::kinetic_f2_form(params).jet_t(t);
    const detail::Jet4 f3 = detail::kinetic_f3_form(params).jet_t(t);
    const detail::GaussBesselForm rho_form = detail::density_form(params);
    const detail::Jet4 rho = rho_form.jet_t(t);
    const double scale = rho_form.scale;

    KineticParts out{};
    const double bracketF = (2.0 / om) * f1.d1 - 4.0 * f2.d1;
    const double bracketF_t = (2.0 / om) * f1.d2 - 4.0 * f2.d2;
    out.F = pref * bracketF + 0.5 * om * om * scale * rho.v;
    out.F_t = pref * (bracketF_t - 2.0 * om * bracketF) + 0.5 * om * om * scale * rho.d1;
    const double bracketK = f1.v / om + 2.0 * f3.v;
    const double bracketK_t = f1.d1 / om + 2.0 * f3.d1;
    out.k = pref * bracketK;
    out.k_t = pref * (bracketK_t - 2.0 * om * bracketK);
    return out;
}

}  // namespace

KineticTensorValue kinetic_tensor(double r, const TripletParams& params) {
    const double t = r * r;
    const KineticParts p = kinetic_parts(t, params);
    return KineticTensorValue{r, t * p.F, p.k};
}

double kinetic_force(double r, const TripletParams& params) {
    const double t = r * r;
    const KineticParts p = kinetic_parts(t, params);
    return 2.0 * r * (3.0 * p.F + 2.0 * t * p.F_t + 2.0 * p.k_t);
}

double kinetic_field(double r, const TripletParams& params) {
    if (r == 0.0) return 0.0;   // z odd, rho(0) > 0
    return kinetic_force(r, params) / density(r, params);
}

double differential_density_force(double r, const TripletParams& params) {
    // -(1/4) d/dr [rho'' + rho'/r] = -4 r rho_tt - 2 r t rho_ttt in t = r^2.
    const double t = r * r;
    const detail::GaussBesselForm form = detail::density_form(params);
    const detail::Jet4 rho = form.jet_t(t);
    return -form.scale * (4.0 * r * rho.d2 + 2.0 * r * t * rho.d3);
}

double differential_density_field(double r, const TripletParams& params) {
    if (r == 0.0) return 0.0;
    return differential_density_force(r, params) / density(r, params);
}

double lorentz_field(double r, const TripletParams& params) {
    if (r == 0.0) return 0.0;
    const CurrentDecomposition j = current_components(r, params);
    return 2.0 * params.omega_l * j.j_total / density(r, params);
}

double internal_magnetic_field(double r, const TripletParams& params) {
    if (r == 0.0) return 0.0;
    const CurrentDecomposition j = current_components(r, params);
    return -2.0 * params.omega_l * j.j_total / density(r, params) +
           params.omega_l * params.omega_l * r;
}

double m_field(double r, const TripletParams& params) {
    return -params.omega_l * params.omega_l * r;
}

FieldBundle field_bundle(double r, const TripletParams& params, const QuadSpec& spec) {
    FieldBundle b{};
    b.r = r;
    b.omega_l = params.omega_l;
    b.e_ee = field_ee(r, params);
    b.e_H = field_hartree(r, params, spec);
    b.e_xc = b.e_ee - b.e_H;
    b.Z = kinetic_field(r, params);
    b.D = differential_density_field(r, params);
    b.L = lorentz_field(r, params);
    b.I_m = internal_magnetic_field(r, params);
    b.M = -(b.L + b.I_m);
    return b;
}

}  // namespace qdot
