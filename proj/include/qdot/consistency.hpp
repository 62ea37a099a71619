#pragma once

#include <vector>

#include "qdot/numerics.hpp"
#include "qdot/params.hpp"
#include "qdot/sources.hpp"

// The per-electron force balance: the internal fields assembled from the
// quantal sources must sum against the external harmonic binding,
//   -E_ee(r) + Z(r) + D(r) = -k_eff r,
// and the effective binding potential recovered from the fields by line
// integration must come out harmonic with the same force constant.

namespace qdot {

struct LawResidual {
    double r;
    double lhs;        // -k_eff r
    double rhs;        // -E_ee + Z + D
    double residual;   // rhs - lhs
};

struct LawReport {
    std::vector<LawResidual> table;
    double max_abs_residual = 0.0;
    std::vector<double> d_plus_z;   // the D + Z partial sum at the same radii
};

LawResidual law_residual(double r, const TripletParams& params);
LawReport law_report(const std::vector<double>& r_grid, const TripletParams& params);

/// v_eff(r) = int_{r_ref}^{r} [E_ee - D - Z] dr' shifted so v_eff(0) = 0;
/// radial line integral (all fields radial here).
double extract_veff(double r, const TripletParams& params, const QuadSpec& spec,
                    double r_ref = 8.0);

enum class FitKind {
    field_slope,           // samples of a field fitted to -k r
    potential_curvature,   // samples of a potential fitted to (1/2) k r^2
};

struct HarmonicFit {
    double k_fit = 0.0;
    double max_abs_deviation = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
};

HarmonicFit fit_harmonic(const RadialProfile& profile, double window_lo, double window_hi,
                         FitKind kind);

struct SelfConsistencyReport {
    double max_residual;          // first-law residual over the fit window
    double k_fit;                 // harmonic force constant of v_eff
    double omega0_sq_recovered;   // k_fit - omega_l^2
    double max_abs_deviation;     // of v_eff from (1/2) k_fit r^2
    bool pass;
};

/// One fixed-point verification pass: build the fields from params, extract
/// v_eff, fit it harmonically, recover omega_0^2 and compare with params.
SelfConsistencyReport self_consistency_check(const TripletParams& params, const QuadSpec& spec);

}  // namespace qdot
