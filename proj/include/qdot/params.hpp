#pragma once

// Constants of the analytic triplet state of the two-electron 2-D dot in a
// magnetic field. Effective atomic units (e^2/eps = hbar = m* = c = 1).

namespace qdot {

struct TripletParams {
    double norm;        // normalization constant N of the spatial wave function
    int angular_m;      // relative angular momentum quantum number (+1 here)
    double c2, c3, c4;  // relative-coordinate polynomial coefficients
    double omega;       // effective oscillator frequency Omega
    double omega_l;     // Larmor frequency (magnetic field strength B/2c)
    double k_eff;       // effective force constant Omega^2
    double omega0_sq;   // binding frequency squared, k_eff - omega_l^2

    // The analytic state published for this dot. The quartic relative
    // polynomial u + c2 u^2 + c3 u^3 + c4 u^4 solves the relative-coordinate
    // equation only when its recursion terminates, which fixes
    // 135 Omega^2 - 40 Omega + 1 = 0 (larger root) and
    // c2 = 1/3, c3 = (1/3 - 3 Omega)/8, c4 = (1 - 25 Omega)/360.
    static TripletParams paper(double omega_l = 0.1);

    // Same frequency/field but arbitrary polynomial coefficients; the
    // normalization is recomputed. Used by the self-consistency check with
    // perturbed trial coefficients.
    static TripletParams with_coefficients(double c2, double c3, double c4,
                                           double omega, double omega_l);
};

// Computes N such that the two-electron spatial state is unit-normalized,
// from the exact Gaussian moments of the relative-coordinate polynomial.
double normalization_constant(double c2, double c3, double c4, double omega);

// Coefficients d_j of u^j in (u + c2 u^2 + c3 u^3 + c4 u^4)^2, j = 0..8
// (d_0 = d_1 = 0). Shared by the normalization and several closed forms.
struct PolySquaredCoeffs {
    double d[9];
};
PolySquaredCoeffs g0_squared_coefficients(double c2, double c3, double c4);

// int_0^inf x^n e^{-a x^2} dx = Gamma((n+1)/2) / (2 a^{(n+1)/2}), exact for
// integer n >= 0.
double half_gaussian_moment(int n, double a);

struct PlanarPoint {
    double r = 0.0;      // radius, >= 0
    double theta = 0.0;  // angle in radians
    double x() const;
    double y() const;
    static PlanarPoint cartesian(double x, double y);
};

struct ComplexAmplitude {
    double re = 0.0;
    double im = 0.0;
    double abs() const;
};

}  // namespace qdot
