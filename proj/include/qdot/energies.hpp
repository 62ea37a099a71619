#pragma once

#include <functional>

#include "qdot/numerics.hpp"
#include "qdot/params.hpp"

// Energy components and expectation values of the triplet state, each by two
// routes: a closed form in the state constants, and an independent
// quadrature over the density/fields in integral virial form.

namespace qdot {

struct EnergyReport {
    double T;
    double E_H;
    double E_xc;
    double E_ee;
    double E_es_plus_mag;
    double E_total;
    double IP;
    double expect_r2;
    double expect_r;
    double expect_inv_r;
    double expect_delta;
};

/// Electron-interaction energy <1/u>, closed form from the Gaussian moments
/// of the squared relative polynomial.
double energy_ee(const TripletParams& params);
/// Virial route: int rho r . E_ee d2r.
double energy_ee_virial(const TripletParams& params, const QuadSpec& spec);

/// Hartree energy by the virial integral over the elliptic-kernel field.
double energy_hartree(const TripletParams& params, const QuadSpec& spec);
/// Independent route: (1/2) int int rho rho / |r - r'| via the ring potential.
double energy_hartree_double_integral(const TripletParams& params, const QuadSpec& spec);

/// Pauli-Coulomb energy, virial integral of the e_ee - rho E_H force.
double energy_xc(const TripletParams& params, const QuadSpec& spec);

/// Kinetic energy closed form (separable center-of-mass + relative parts).
double kinetic_energy(const TripletParams& params);
/// Virial route T = -(1/2) int rho r . Z d2r = -pi int r^2 z(r) dr.
double kinetic_energy_virial(const TripletParams& params, const QuadSpec& spec);
/// Tensor-trace route T = int (f + 2k) d2r (prefactor 1 with the 2 pi r dr
/// element, fixed by integration by parts against the virial form).
double kinetic_energy_trace(const TripletParams& params, const QuadSpec& spec);

/// External electrostatic + magnetostatic energy, (k_eff/2) <r^2>.
double energy_es_mag(const TripletParams& params);
double energy_es_mag_quadrature(const TripletParams& params, const QuadSpec& spec);
/// Same functional for an arbitrary radial density (linearity checks).
double harmonic_energy_quadrature(const std::function<double(double)>& rho, double k,
                                  const QuadSpec& spec);

double total_energy(const TripletParams& params, const QuadSpec& spec);
double ionization_potential(const TripletParams& params, const QuadSpec& spec);

struct ExpectationValues {
    double r2, r, inv_r, delta;
};

/// <r^2>, <r>, <1/r>, <delta(r)> closed forms; the <r> and <1/r> forms carry
/// complete elliptic integrals at modulus 1/sqrt(2).
ExpectationValues expectation_values(const TripletParams& params);
ExpectationValues expectation_values_quadrature(const TripletParams& params, const QuadSpec& spec);

/// Full Table-style report, closed-form routes.
EnergyReport energy_report(const TripletParams& params, const QuadSpec& spec);
/// Full report with every entry computed by its quadrature route.
EnergyReport energy_report_quadrature(const TripletParams& params, const QuadSpec& spec);

}  // namespace qdot
