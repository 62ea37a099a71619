#pragma once

#include "qdot/numerics.hpp"
#include "qdot/params.hpp"

// The per-electron fields: electron-interaction (with its Hartree and
// Pauli-Coulomb split), kinetic (through the kinetic-energy tensor),
// differential density, Lorentz, internal magnetic, and their sum field M.
// Every field of this state is radial; the functions below return the signed
// radial component.

namespace qdot {

struct FieldBundle {
    double r;
    double e_ee, e_H, e_xc;   // electron-interaction and its split
    double Z;                 // kinetic field z/rho
    double D;                 // differential density field d/rho
    double L;                 // Lorentz field 2 w_L j / rho
    double I_m;               // internal magnetic field
    double M;                 // -(L + I_m) = -w_L^2 r
    double omega_l;
};

struct KineticTensorValue {
    double r;
    double f;   // t_ab = (r_a r_b / r^2) f + delta_ab k
    double k;
};

/// Electron-interaction field from the closed form of its Coulomb-law
/// integral over the pair-correlation density; vanishes at the origin.
double field_ee(double r, const TripletParams& params);

/// Hartree field: in-plane radial field of the cylindrically symmetric
/// charge sheet rho with the 3-D Coulomb kernel. Ring decomposition with the
/// elliptic-integral kernel; the principal-value pole and the log
/// singularity at r' = r are split off and integrated separately.
double field_hartree(double r, const TripletParams& params, const QuadSpec& spec);

/// Pauli-Coulomb component, e_ee - e_H.
double field_xc(double r, const TripletParams& params, const QuadSpec& spec);

KineticTensorValue kinetic_tensor(double r, const TripletParams& params);

/// Kinetic 'force' z(r) = 2 { d(f+k)/dr + f/r }.
double kinetic_force(double r, const TripletParams& params);

/// Kinetic field Z = z/rho; 0 at the origin by parity, grows without bound
/// at large r where rho decays faster than z.
double kinetic_field(double r, const TripletParams& params);

/// Differential density 'force' d(r) = -(1/4) d/dr laplacian(rho).
double differential_density_force(double r, const TripletParams& params);

/// Differential density field D = d/rho.
double differential_density_field(double r, const TripletParams& params);

double lorentz_field(double r, const TripletParams& params);
double internal_magnetic_field(double r, const TripletParams& params);
/// M = -(L + I_m) = -omega_l^2 r identically for this state.
double m_field(double r, const TripletParams& params);

FieldBundle field_bundle(double r, const TripletParams& params, const QuadSpec& spec);

}  // namespace qdot
