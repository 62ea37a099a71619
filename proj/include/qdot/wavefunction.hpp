#pragma once

#include <vector>

#include "qdot/numerics.hpp"
#include "qdot/params.hpp"

// The analytic triplet-state spatial wave function
//   Psi(r1, r2) = N e^{i m th_u} e^{-Omega(r1^2+r2^2)/2} g0(u),
//   g0(u) = u + c2 u^2 + c3 u^3 + c4 u^4,  u = |r2 - r1|,
// with th_u = atan2(y2-y1, x2-x1), plus its symmetry, node and
// electron-coalescence diagnostics.

namespace qdot {

/// Complex amplitude Psi(p1, p2).
ComplexAmplitude psi(const PlanarPoint& p1, const PlanarPoint& p2, const TripletParams& params);

/// |Psi(p1,p2) + Psi(p2,p1)| — identically ~0 for the fermionic state.
double antisymmetry_residual(const PlanarPoint& p1, const PlanarPoint& p2,
                             const TripletParams& params);

/// int |Psi|^2 over both planar coordinates, computed by the
/// center-of-mass/relative factorization into two 1-D integrals. Unit for a
/// correctly normalized state.
double norm_check(const TripletParams& params, const QuadSpec& spec);

struct CoalescencePoint {
    double u;            // separation from the fixed electron
    double psi_over_u;   // |Psi| / u
};

struct CoalescenceProfile {
    std::vector<CoalescencePoint> samples;
    double limit;        // |Psi|/u extrapolated to u -> 0 (node coalescence slope)
};

/// |Psi(r2 + u uhat, r2)|/u along the given approach direction; Psi vanishes
/// linearly at electron-electron contact, so the ratio has a finite limit
/// N e^{-Omega r2^2}.
CoalescenceProfile coalescence_profile(const PlanarPoint& p2, double direction,
                                       const std::vector<double>& u_samples,
                                       const TripletParams& params);

enum class NodePart { real, imag };

struct NodeLocus {
    NodePart part;
    double r1, r2;    // radii at which the sign change was bracketed
};

struct NodeScan {
    std::vector<NodeLocus> loci;
    bool origin_node = false;          // Psi -> 0 as both radii -> 0
    bool imag_identically_zero = false;  // Im Psi vanishes on the whole grid
};

/// Sign-change scan of Re Psi and Im Psi over the (r1, r2) grid at fixed ray
/// angles, refined to ~1e-10 by bisection along grid edges.
NodeScan node_scan(double theta1, double theta2, double r_max, int grid_n,
                   const TripletParams& params);

}  // namespace qdot
