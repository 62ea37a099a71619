#include "qdot/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

namespace qdot {

ComplexAmplitude psi(const PlanarPoint& p1, const PlanarPoint& p2, const TripletParams& params) {
    const double ux = p2.x() - p1.x();
    const double uy = p2.y() - p1.y();
    const double u = std::hypot(ux, uy);
    const double radial = params.norm *
                          std::exp(-0.5 * params.omega * (p1.r * p1.r + p2.r * p2.r)) *
                          (u + params.c2 * u * u + params.c3 * u * u * u +
                           params.c4 * u * u * u * u);
    if (u == 0.0) return ComplexAmplitude{0.0, 0.0};
    // e^{i m th_u} with m = +1; (ux + i uy)/u avoids any branch-cut jump.
    return ComplexAmplitude{radial * ux / u, radial * uy / u};
}

double antisymmetry_residual(const PlanarPoint& p1, const PlanarPoint& p2,
                             const TripletParams& params) {
    const ComplexAmplitude a = psi(p1, p2, params);
    const ComplexAmplitude b = psi(p2, p1, params);
    return std::hypot(a.re + b.re, a.im + b.im);
}

double norm_check(const TripletParams& params, const QuadSpec& spec) {
    // |Psi|^2 depends only on R = |r1+r2|/2 and u = |r2-r1|:
    // norm = N^2 [2 pi int e^{-2 Om R^2} R dR] [2 pi int e^{-Om u^2/2} g0^2 u du].
    const double om = params.omega;
    const QuadResult com = integrate_semi_infinite(
        [om](double R) { return std::exp(-2.0 * om * R * R) * R; }, 1.0 / std::sqrt(2.0 * om),
        spec);
    const QuadResult rel = integrate_semi_infinite(
        [&params, om](double u) {
            const double g = u + params.c2 * u * u + params.c3 * u * u * u +
                             params.c4 * u * u * u * u;
            return std::exp(-0.5 * om * u * u) * g * g * u;
        },
        std::sqrt(2.0 / om), spec);
    require_converged(com, "norm_check (center of mass)");
    require_converged(rel, "norm_check (relative)");
    const double n2 = params.norm * params.norm;
    return n2 * (2.0 * M_PI * com.value) * (2.0 * M_PI * rel.value);
}

CoalescenceProfile coalescence_profile(const PlanarPoint& p2, double direction,
                                       const std::vector<double>& u_samples,
                                       const TripletParams& params) {
    CoalescenceProfile profile;
    profile.samples.reserve(u_samples.size());
    const double x2 = p2.x(), y2 = p2.y();
    for (double u : u_samples) {
        if (u <= 0.0) throw std::invalid_argument("coalescence_profile: u samples must be > 0");
        const PlanarPoint p1 =
            PlanarPoint::cartesian(x2 + u * std::cos(direction), y2 + u * std::sin(direction));
        const ComplexAmplitude amp = psi(p1, p2, params);
        profile.samples.push_back({u, amp.abs() / u});
    }
    // Psi ~ u (C0 + C1 u + ...): Richardson-extrapolate the two smallest u.
    double u_lo = u_samples.front(), v_lo = profile.samples.front().psi_over_u;
    double u_2 = u_lo, v_2 = v_lo;
    for (const auto& s : profile.samples) {
        if (s.u < u_lo) {
            u_2 = u_lo;
            v_2 = v_lo;
            u_lo = s.u;
            v_lo = s.psi_over_u;
        } else if (s.u < u_2 || u_2 == u_lo) {
            if (s.u != u_lo) {
                u_2 = s.u;
                v_2 = s.psi_over_u;
            }
        }
    }
    profile.limit = (u_2 != u_lo) ? (v_lo * u_2 - v_2 * u_lo) / (u_2 - u_lo) : v_lo;
    return profile;
}

namespace {

// Bisection for a sign change of f along [x0, x1].
template <typename F>
double bisect(F&& f, double x0, double x1) {
    double f0 = f(x0);
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (x0 + x1);
        const double fm = f(mid);
        if ((f0 < 0.0) == (fm < 0.0)) {
            x0 = mid;
            f0 = fm;
        } else {
            x1 = mid;
        }
        if (x1 - x0 < 1e-10) break;
    }
    return 0.5 * (x0 + x1);
}

}  // namespace

NodeScan node_scan(double theta1, double theta2, double r_max, int grid_n,
                   const TripletParams& params) {
    if (grid_n < 16) throw std::invalid_argument("node_scan: grid_n must be >= 16");
    NodeScan scan;
    const double h = r_max / grid_n;
    auto value = [&](double r1, double r2) {
        return psi(PlanarPoint{r1, theta1}, PlanarPoint{r2, theta2}, params);
    };

    double max_im = 0.0, max_abs = 0.0;
    for (int i = 0; i <= grid_n; ++i) {
        for (int j = 0; j <= grid_n; ++j) {
            const ComplexAmplitude a = value(i * h, j * h);
            max_im = std::max(max_im, std::abs(a.im));
            max_abs = std::max(max_abs, a.abs());
        }
    }
    scan.imag_identically_zero = max_im <= 1e-14 * std::max(max_abs, 1e-300);

    const double floor = 1e-13 * std::max(max_abs, 1e-300);
    auto scan_part = [&](NodePart part) {
        auto comp = [&](double r1, double r2) {
            const ComplexAmplitude a = value(r1, r2);
            return part == NodePart::real ? a.re : a.im;
        };
        for (int i = 0; i <= grid_n; ++i) {
            for (int j = 0; j < grid_n; ++j) {
                // horizontal edge in r2 at fixed r1 = i h
                const double r1 = i * h;
                const double v0 = comp(r1, j * h);
                const double v1 = comp(r1, (j + 1) * h);
                if (std::abs(v0) > floor && std::abs(v1) > floor && (v0 < 0.0) != (v1 < 0.0)) {
                    const double r2 = bisect([&](double x) { return comp(r1, x); }, j * h, (j + 1) * h);
                    scan.loci.push_back({part, r1, r2});
                }
                // vertical edge in r1 at fixed r2 = i h
                const double r2f = i * h;
                const double w0 = comp(j * h, r2f);
                const double w1 = comp((j + 1) * h, r2f);
                if (std::abs(w0) > floor && std::abs(w1) > floor && (w0 < 0.0) != (w1 < 0.0)) {
                    const double r1f = bisect([&](double x) { return comp(x, r2f); }, j * h, (j + 1) * h);
                    scan.loci.push_back({part, r1f, r2f});
                }
            }
        }
    };
    scan_part(NodePart::real);
    if (!scan.imag_identically_zero) scan_part(NodePart::imag);

    scan.origin_node = value(1e-7, 1.3e-7).abs() < 1e-6 * std::max(max_abs, 1e-300);
    return scan;
}

}  // namespace qdot
