#include "qdot/sources.hpp"

#include <cmath>
#include <stdexcept>

#include "qdot/detail/forms.hpp"
#include "qdot/detail/parallel.hpp"
#include "qdot/wavefunction.hpp"

namespace qdot {

double density(double r, const TripletParams& params) {
    return detail::density_form(params).value(r);
}

QuadResult density_oracle(double r, const TripletParams& params, const QuadSpec& spec) {
    const double om = params.omega;
    const double pref =
        4.0 * M_PI * params.norm * params.norm * std::exp(-2.0 * om * r * r);
    auto integrand = [&](double x) {
        const double g = x + params.c2 * x * x + params.c3 * x * x * x +
                         params.c4 * x * x * x * x;
        return std::exp(-om * x * x) * x * g * g * bessel_i0(2.0 * om * r * x);
    };
    // The I0 kernel grows like e^{2 Om r x}, so the effective Gaussian decay
    // sets in beyond x ~ r; push the cutoff out accordingly.
    QuadSpec widened = spec;
    widened.truncation_radius = spec.truncation_radius + r;
    QuadResult q = integrate_semi_infinite(integrand, 1.0 / std::sqrt(om), widened);
    q.value *= pref;
    q.error *= pref;
    return q;
}

std::vector<double> density_derivatives(double r, const TripletParams& params, int order) {
    if (order < 0 || order > 3) throw std::invalid_argument("density_derivatives: order must be 0..3");
    const detail::Jet4 j = detail::density_form(params).jet(r);
    std::vector<double> out{j.v};
    if (order >= 1) out.push_back(r == 0.0 ? 0.0 : j.d1);
    if (order >= 2) out.push_back(j.d2);
    if (order >= 3) out.push_back(r == 0.0 ? 0.0 : j.d3);
    return out;
}

CurrentDecomposition current_components(double r, const TripletParams& params) {
    const detail::Jet4 rho = detail::density_form(params).jet(r);
    CurrentDecomposition c{};
    c.j_p = detail::paramagnetic_form(params).value(r);
    c.j_d = r * params.omega_l * rho.v;
    c.j_m = -0.5 * (r == 0.0 ? 0.0 : rho.d1);   // aligned-spin branch, m = +1
    c.j_total = c.j_p + c.j_d + c.j_m;
    return c;
}

double pair_density(const PlanarPoint& reference, const PlanarPoint& target,
                    const TripletParams& params) {
    const ComplexAmplitude amp = psi(reference, target, params);
    const double a = amp.abs();
    return 2.0 * a * a / density(reference.r, params);
}

double xc_hole(const PlanarPoint& reference, const PlanarPoint& target,
               const TripletParams& params) {
    return pair_density(reference, target, params) - density(target.r, params);
}

std::complex<double> density_matrix(double theta, double theta_prime, double r, double r_prime,
                                    const TripletParams& params, const QuadSpec& spec) {
    const double ax = r * std::cos(theta), ay = r * std::sin(theta);
    const double bx = r_prime * std::cos(theta_prime), by = r_prime * std::sin(theta_prime);
    const double cx = 0.5 * (ax + bx), cy = 0.5 * (ay + by);
    const double om = params.omega;
    const double pref = 2.0 * params.norm * params.norm *
                        std::exp(-0.5 * om * (r * r + r_prime * r_prime));

    auto g0 = [&](double u) {
        return u + params.c2 * u * u + params.c3 * u * u * u + params.c4 * u * u * u * u;
    };
    // gamma(r r') = 2 int Psi*(r, y) Psi(r', y) d2y; the integrand carries
    // e^{-i th(y-r)} e^{+i th(y-r')} from the m = +1 phase of each factor.
    auto f = [&](double s, double phi, double& re, double& im) {
        const double yx = cx + s * std::cos(phi);
        const double yy = cy + s * std::sin(phi);
        const double uax = yx - ax, uay = yy - ay;
        const double ubx = yx - bx, uby = yy - by;
        const double ua = std::hypot(uax, uay);
        const double ub = std::hypot(ubx, uby);
        const double mag = std::exp(-om * (yx * yx + yy * yy)) * g0(ua) * g0(ub);
        if (ua == 0.0 || ub == 0.0) {   // g0 ~ u kills the phase singularity
            re = 0.0;
            im = 0.0;
            return;
        }
        // e^{-i th_a} e^{+i th_b} = (ua_conj * ub) / (|ua||ub|)
        const double pr = (uax * ubx + uay * uby) / (ua * ub);
        const double pi_ = (uax * uby - uay * ubx) / (ua * ub);
        re = mag * pr;
        im = mag * pi_;
    };
    const double s_max = spec.truncation_radius + std::hypot(cx, cy);
    Complex2DResult q = integrate_2d_polar_complex(f, cx, cy, spec, s_max);
    if (!q.converged) {
        throw QuadratureError("density_matrix: quadrature did not converge",
                              QuadResult{q.re, q.error, 0, false});
    }
    return {pref * q.re, pref * q.im};
}

double paramagnetic_oracle(double r, const TripletParams& params, const QuadSpec& spec) {
    if (!(r > 0.0)) throw std::domain_error("paramagnetic_oracle: r must be > 0");
    // j_p = Im[(d/dth'' - d/dth') gamma] / (2 r) at coincidence.
    QuadSpec tight = spec;
    tight.abs_tol = std::min(spec.abs_tol, 1e-13);
    tight.rel_tol = std::min(spec.rel_tol, 1e-12);
    const double h = 2e-3;
    auto gamma = [&](double t1, double t2) { return density_matrix(t1, t2, r, r, params, tight); };
    const std::complex<double> dpp = (gamma(0.0, h) - gamma(0.0, -h)) / (2.0 * h);
    const std::complex<double> dp = (gamma(h, 0.0) - gamma(-h, 0.0)) / (2.0 * h);
    return 0.5 * (dpp - dp).imag() / r;
}

PairGrid pair_grid(PairQuantity what, double reference_r, const TripletParams& params, int n,
                   double extent) {
    if (n < 2) throw std::invalid_argument("pair_grid: need at least a 2x2 grid");
    PairGrid grid;
    grid.reference = PlanarPoint{reference_r, 0.0};
    grid.xs.resize(n);
    grid.ys.resize(n);
    for (int i = 0; i < n; ++i) {
        grid.xs[i] = -extent + 2.0 * extent * i / (n - 1);
        grid.ys[i] = grid.xs[i];
    }
    grid.values.assign(static_cast<size_t>(n) * n, 0.0);
    detail::parallel_for(n, [&](int ix) {
        for (int iy = 0; iy < n; ++iy) {
            const PlanarPoint target = PlanarPoint::cartesian(grid.xs[ix], grid.ys[iy]);
            grid.values[static_cast<size_t>(ix) * n + iy] =
                what == PairQuantity::pair_correlation ? pair_density(grid.reference, target, params)
                                                       : xc_hole(grid.reference, target, params);
        }
    });
    return grid;
}

DensityMatrixGrid density_matrix_grid(double theta, double theta_prime, double r_max, int n,
                                      const TripletParams& params, const QuadSpec& spec) {
    if (n < 2) throw std::invalid_argument("density_matrix_grid: need at least 2 samples");
    DensityMatrixGrid grid;
    grid.theta = theta;
    grid.theta_prime = theta_prime;
    grid.r.resize(n);
    grid.r_prime.resize(n);
    for (int i = 0; i < n; ++i) grid.r[i] = grid.r_prime[i] = r_max * i / (n - 1);
    grid.values.assign(static_cast<size_t>(n) * n, {0.0, 0.0});
    detail::parallel_for(n, [&](int i) {
        for (int j = 0; j < n; ++j) {
            grid.values[static_cast<size_t>(i) * n + j] =
                density_matrix(theta, theta_prime, grid.r[i], grid.r_prime[j], params, spec);
        }
    });
    return grid;
}

}  // namespace qdot
