#include "qdot/params.hpp"

#include <cmath>
#include <stdexcept>

namespace qdot {

double half_gaussian_moment(int n, double a) {
    if (n < 0 || a <= 0.0) throw std::domain_error("half_gaussian_moment: need n >= 0, a > 0");
    // Gamma((n+1)/2): factorial for odd n, double-factorial * sqrt(pi) for even n.
    double g;
    if (n % 2 == 1) {
        g = 1.0;
        for (int k = 2; k <= (n - 1) / 2; ++k) g *= k;
    } else {
        g = std::sqrt(M_PI);
        for (int k = 1; k <= n / 2; ++k) g *= (2.0 * k - 1.0) / 2.0;
    }
    return g / (2.0 * std::pow(a, 0.5 * (n + 1)));
}

PolySquaredCoeffs g0_squared_coefficients(double c2, double c3, double c4) {
    PolySquaredCoeffs p{};
    p.d[2] = 1.0;
    p.d[3] = 2.0 * c2;
    p.d[4] = c2 * c2 + 2.0 * c3;
    p.d[5] = 2.0 * (c2 * c3 + c4);
    p.d[6] = c3 * c3 + 2.0 * c2 * c4;
    p.d[7] = 2.0 * c3 * c4;
    p.d[8] = c4 * c4;
    return p;
}

double normalization_constant(double c2, double c3, double c4, double omega) {
    // ||Psi||^2 = N^2 (pi/2Om) 2 pi int_0^inf e^{-Om u^2/2} u g0(u)^2 du.
    const PolySquaredCoeffs p = g0_squared_coefficients(c2, c3, c4);
    double s = 0.0;
    for (int j = 2; j <= 8; ++j) s += p.d[j] * half_gaussian_moment(j + 1, 0.5 * omega);
    return std::sqrt(omega / (M_PI * M_PI * s));
}

TripletParams TripletParams::paper(double omega_l) {
    TripletParams tp{};
    tp.omega = (40.0 + std::sqrt(1060.0)) / 270.0;
    tp.angular_m = 1;
    tp.c2 = 1.0 / 3.0;
    tp.c3 = (1.0 / 3.0 - 3.0 * tp.omega) / 8.0;
    tp.c4 = (1.0 - 25.0 * tp.omega) / 360.0;
    tp.omega_l = omega_l;
    tp.k_eff = tp.omega * tp.omega;
    tp.omega0_sq = tp.k_eff - omega_l * omega_l;
    tp.norm = normalization_constant(tp.c2, tp.c3, tp.c4, tp.omega);
    return tp;
}

TripletParams TripletParams::with_coefficients(double c2, double c3, double c4, double omega,
                                               double omega_l) {
    TripletParams tp{};
    tp.omega = omega;
    tp.angular_m = 1;
    tp.c2 = c2;
    tp.c3 = c3;
    tp.c4 = c4;
    tp.omega_l = omega_l;
    tp.k_eff = omega * omega;
    tp.omega0_sq = tp.k_eff - omega_l * omega_l;
    tp.norm = normalization_constant(c2, c3, c4, omega);
    return tp;
}

double PlanarPoint::x() const { return r * std::cos(theta); }
double PlanarPoint::y() const { return r * std::sin(theta); }

PlanarPoint PlanarPoint::cartesian(double x, double y) {
    return PlanarPoint{std::hypot(x, y), std::atan2(y, x)};
}

double ComplexAmplitude::abs() const { return std::hypot(re, im); }

}  // namespace qdot
