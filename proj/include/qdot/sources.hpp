#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qdot/numerics.hpp"
#include "qdot/params.hpp"

// Quantal sources of the triplet state: the local ones (density and the
// three current-density components) through their closed forms, and the
// nonlocal ones (pair-correlation density, Fermi-Coulomb hole,
// single-particle density matrix) through quadrature over the wave function.

namespace qdot {

struct RadialSample {
    double r;
    double value;
    double est_error;
};

struct RadialProfile {
    std::string quantity;
    double omega_l = 0.0;
    std::vector<RadialSample> samples;
};

struct CurrentDecomposition {
    double j_p;      // paramagnetic
    double j_d;      // diamagnetic (omega_l r rho)
    double j_m;      // magnetization (-rho'/2 for the aligned state)
    double j_total;  // sum; all azimuthal components at one radius
};

struct PairGrid {
    PlanarPoint reference;
    // x' = projection of r' on the reference direction, y' perpendicular
    std::vector<double> xs, ys;
    std::vector<double> values;   // row-major over (ix, iy)
    double at(int ix, int iy) const { return values[static_cast<size_t>(ix) * ys.size() + iy]; }
};

struct DensityMatrixGrid {
    double theta, theta_prime;    // radians
    std::vector<double> r, r_prime;
    std::vector<std::complex<double>> values;   // row-major over (ir, ir')
    std::complex<double> at(int i, int j) const {
        return values[static_cast<size_t>(i) * r_prime.size() + j];
    }
};

/// Electron density rho(r) from the closed form; spherically symmetric,
/// finite at the origin (harmonic binding, no cusp).
double density(double r, const TripletParams& params);

/// rho(r) evaluated from its defining radial integral
/// 4 pi N^2 e^{-2 Om r^2} int e^{-Om x^2} x g0(x)^2 I0(2 Om r x) dx.
QuadResult density_oracle(double r, const TripletParams& params, const QuadSpec& spec);

/// rho and its first `order` radial derivatives (order <= 3), analytic
/// through the Bessel derivative ladder; odd derivatives vanish at r = 0.
std::vector<double> density_derivatives(double r, const TripletParams& params, int order);

/// All four azimuthal current components at radius r.
CurrentDecomposition current_components(double r, const TripletParams& params);

/// j_p recomputed from the angular derivative of the density matrix at
/// coincidence (symmetric finite difference) — the independent route.
double paramagnetic_oracle(double r, const TripletParams& params, const QuadSpec& spec);

/// Pair-correlation density g(r r') = 2 |Psi(r, r')|^2 / rho(r).
double pair_density(const PlanarPoint& reference, const PlanarPoint& target,
                    const TripletParams& params);

/// Fermi-Coulomb hole rho_xc(r r') = g(r r') - rho(r').
double xc_hole(const PlanarPoint& reference, const PlanarPoint& target,
               const TripletParams& params);

/// Single-particle density matrix gamma(r r') = 2 int Psi*(r, y) Psi(r', y) d2y
/// by polar quadrature centered between the two points. The e^{i m theta}
/// phases are carried, so gamma is complex and Hermitian.
std::complex<double> density_matrix(double theta, double theta_prime, double r, double r_prime,
                                    const TripletParams& params, const QuadSpec& spec);

/// Grid of g or rho_xc around a reference point on the x-axis.
enum class PairQuantity { pair_correlation, xc_hole };
PairGrid pair_grid(PairQuantity what, double reference_r, const TripletParams& params,
                   int n = 121, double extent = 8.0);

DensityMatrixGrid density_matrix_grid(double theta, double theta_prime, double r_max, int n,
                                      const TripletParams& params, const QuadSpec& spec);

}  // namespace qdot
