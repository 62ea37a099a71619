#pragma once

#include <functional>
#include <stdexcept>

// Special functions and quadrature engines used throughout the quantum-dot
// property calculations: modified Bessel functions I0/I1, complete elliptic
// integrals in the modulus convention K(p) = int_0^{pi/2} dth/sqrt(1-p^2 sin^2 th),
// and deterministic adaptive Gauss-Legendre quadrature (1-D, Gaussian-tail
// semi-infinite, and polar 2-D with the angular direction integrated first).

namespace qdot {

struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 400;
    // Radial cutoff for (semi-)infinite Gaussian-weighted integrands.
    // The default corresponds to sqrt(40/Omega) for the bound-state
    // frequency used here, i.e. an e^{-Omega x^2} tail below 1e-17.
    double truncation_radius = 12.2;

    static QuadSpec for_gaussian_scale(double omega);
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimated bound on |value - truth|
    int subdivisions = 0;
    bool converged = true;
};

// Thrown by callers that cannot tolerate an unconverged quadrature; carries
// the best estimate so diagnostics can still report a number.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadResult best);
    QuadResult best;
};

// Unwraps a QuadResult, throwing QuadratureError if it did not converge.
double require_converged(const QuadResult& q, const char* context);

/// Modified Bessel function I0. Power series for x <= 15, asymptotic
/// expansion beyond; relative error below ~1e-13 on the whole range.
/// Throws std::range_error once e^x overflows a double.
double bessel_i0(double x);

/// Modified Bessel function I1 (same scheme as bessel_i0).
double bessel_i1(double x);

/// I1(x)/x, finite at x = 0 (limit 1/2).
double bessel_i1_over_x(double x);

namespace detail {
// Orders 0..4 are needed for analytic radial derivatives of the closed
// forms (d/dt I_nu chains couple nu-1 and nu+1).
double bessel_in(int nu, double x);
}

struct EllipticModulus {
    double p;   // modulus, 0 <= p < 1
};

/// Complete elliptic integral of the first kind, modulus convention.
double elliptic_k(EllipticModulus m);
/// Complete elliptic integral of the second kind, modulus convention.
double elliptic_e(EllipticModulus m);

// Complement forms take pc = sqrt(1 - p^2) directly; they stay accurate as
// p -> 1 where forming pc from p would cancel. Used by the ring-field kernel.
double elliptic_k_complement(double pc);
double elliptic_e_complement(double pc);

using Integrand1D = std::function<double(double)>;

/// Adaptive Gauss-Legendre quadrature of f over [a, b]. Deterministic for a
/// fixed spec; an empty interval integrates to exactly 0. On reaching
/// max_subdivisions the result is returned with converged = false and the
/// remaining error bound attached.
QuadResult integrate_1d(const Integrand1D& f, double a, double b, const QuadSpec& spec);

/// Integral of f over [0, inf) for integrands bounded by poly(x) e^{-(x/decay_scale)^2}
/// beyond ~decay_scale. The tail is truncated where the Gaussian bound drops
/// below abs_tol, then integrate_1d does the rest.
QuadResult integrate_semi_infinite(const Integrand1D& f, double decay_scale, const QuadSpec& spec);

using Integrand2D = std::function<double(double, double)>;

/// Integral of f(s, phi) s ds dphi over the plane in polar coordinates
/// centered at (cx, cy). The angular direction is integrated first (uniformly
/// refined trapezoid; spectral for smooth periodic integrands) so that
/// odd-kernel 1/s singularities cancel before the radial adaptive pass.
/// s_max = 0 picks spec.truncation_radius + |center|.
QuadResult integrate_2d_polar(const Integrand2D& f, double cx, double cy,
                              const QuadSpec& spec, double s_max = 0.0);

/// Complex-valued variant (used by the single-particle density matrix).
struct Complex2DResult {
    double re = 0.0, im = 0.0;
    double error = 0.0;
    bool converged = true;
};
Complex2DResult integrate_2d_polar_complex(const std::function<void(double, double, double&, double&)>& f,
                                           double cx, double cy, const QuadSpec& spec,
                                           double s_max = 0.0);

}  // namespace qdot
