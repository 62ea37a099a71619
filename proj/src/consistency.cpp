#include "qdot/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdot/fields.hpp"

namespace qdot {

LawResidual law_residual(double r, const TripletParams& params) {
    if (!(r > 0.0)) throw std::domain_error("law_residual: r must be > 0");
    LawResidual out{};
    out.r = r;
    out.lhs = -params.k_eff * r;
    out.rhs = -field_ee(r, params) + kinetic_field(r, params) +
              differential_density_field(r, params);
    out.residual = out.rhs - out.lhs;
    return out;
}

LawReport law_report(const std::vector<double>& r_grid, const TripletParams& params) {
    if (r_grid.empty()) throw std::invalid_argument("law_report: empty grid");
    LawReport rep;
    rep.table.reserve(r_grid.size());
    rep.d_plus_z.reserve(r_grid.size());
    for (double r : r_grid) {
        const LawResidual lr = law_residual(r, params);
        rep.table.push_back(lr);
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(lr.residual));
        rep.d_plus_z.push_back(differential_density_field(r, params) + kinetic_field(r, params));
    }
    return rep;
}

double extract_veff(double r, const TripletParams& params, const QuadSpec& spec, double r_ref) {
    auto integrand = [&](double x) {
        return field_ee(x, params) - differential_density_field(x, params) -
               kinetic_field(x, params);
    };
    const double to_r = require_converged(integrate_1d(integrand, r_ref, r, spec), "extract_veff");
    const double to_0 = require_converged(integrate_1d(integrand, r_ref, 0.0, spec), "extract_veff");
    return to_r - to_0;
}

HarmonicFit fit_harmonic(const RadialProfile& profile, double window_lo, double window_hi,
                         FitKind kind) {
    std::vector<const RadialSample*> in_window;
    for (const auto& s : profile.samples) {
        if (s.r >= window_lo && s.r <= window_hi) in_window.push_back(&s);
    }
    if (in_window.size() < 8) throw std::invalid_argument("fit_harmonic: fewer than 8 samples in window");
    const double r0 = in_window.front()->r;
    bool degenerate = true;
    for (const auto* s : in_window) degenerate = degenerate && s->r == r0;
    if (degenerate) throw std::invalid_argument("fit_harmonic: degenerate window (all radii equal)");

    // Least squares against the single basis function b(r): -r for a field,
    // r^2/2 for a potential.
    double num = 0.0, den = 0.0;
    auto basis = [&](double r) { return kind == FitKind::field_slope ? -r : 0.5 * r * r; };
    for (const auto* s : in_window) {
        num += s->value * basis(s->r);
        den += basis(s->r) * basis(s->r);
    }
    HarmonicFit fit;
    fit.k_fit = num / den;
    fit.window_lo = window_lo;
    fit.window_hi = window_hi;
    for (const auto* s : in_window) {
        fit.max_abs_deviation =
            std::max(fit.max_abs_deviation, std::abs(s->value - fit.k_fit * basis(s->r)));
    }
    return fit;
}

SelfConsistencyReport self_consistency_check(const TripletParams& params, const QuadSpec& spec) {
    constexpr double kWindowLo = 0.2, kWindowHi = 5.0;
    constexpr int kSamples = 40;
    constexpr double kTol = 1e-4;

    RadialProfile veff;
    veff.quantity = "v_eff";
    veff.omega_l = params.omega_l;
    SelfConsistencyReport rep{};
    for (int i = 0; i < kSamples; ++i) {
        const double r = kWindowLo + (kWindowHi - kWindowLo) * i / (kSamples - 1);
        veff.samples.push_back({r, extract_veff(r, params, spec), 0.0});
        rep.max_residual = std::max(rep.max_residual, std::abs(law_residual(r, params).residual));
    }
    const HarmonicFit fit = fit_harmonic(veff, kWindowLo, kWindowHi, FitKind::potential_curvature);
    rep.k_fit = fit.k_fit;
    rep.max_abs_deviation = fit.max_abs_deviation;
    // v_m = (1/2) omega_l^2 r^2 exactly, so the binding curvature follows by
    // subtraction of the force constants.
    rep.omega0_sq_recovered = fit.k_fit - params.omega_l * params.omega_l;
    rep.pass = std::abs(rep.omega0_sq_recovered - params.omega0_sq) <= kTol &&
               rep.max_abs_deviation <= kTol;
    return rep;
}

}  // namespace qdot
