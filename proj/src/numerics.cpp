#include "qdot/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace qdot {

QuadSpec QuadSpec::for_gaussian_scale(double omega) {
    QuadSpec spec;
    spec.truncation_radius = std::sqrt(40.0 / omega);
    return spec;
}

QuadratureError::QuadratureError(const std::string& what, QuadResult b)
    : std::runtime_error(what), best(b) {}

double require_converged(const QuadResult& q, const char* context) {
    if (!q.converged) {
        throw QuadratureError(std::string(context) + ": quadrature did not converge (error bound " +
                                  std::to_string(q.error) + ")",
                              q);
    }
    return q.value;
}

// ---------------------------------------------------------------------------
// Modified Bessel functions
// ---------------------------------------------------------------------------

namespace {

constexpr double kBesselCrossover = 15.0;
constexpr double kExpOverflow = 708.0;

double bessel_series(int nu, double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    for (int k = 1; k <= nu; ++k) term *= 0.5 * x / k;   // (x/2)^nu / nu!
    double sum = term;
    for (int n = 1; n < 300; ++n) {
        term *= q / (static_cast<double>(n) * (n + nu));
        sum += term;
        if (term <= sum * 1e-18) break;
    }
    return sum;
}

// I_nu(x) ~ e^x/sqrt(2 pi x) sum_k (-1)^k prod_{j<=k}(mu-(2j-1)^2)/(k! (8x)^k),
// mu = 4 nu^2; summed to the smallest term.
double bessel_asymptotic(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev <= std::abs(sum) * 1e-17) break;
    }
    return std::exp(x) / std::sqrt(2.0 * M_PI * x) * sum;
}

double bessel_i(int nu, double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i: x must be >= 0");
    if (x > kExpOverflow) throw std::range_error("bessel_i: argument overflows e^x");
    return x <= kBesselCrossover ? bessel_series(nu, x) : bessel_asymptotic(nu, x);
}

}  // namespace

double bessel_i0(double x) { return bessel_i(0, x); }
double bessel_i1(double x) { return bessel_i(1, x); }

double bessel_i1_over_x(double x) {
    if (!(x >= 0.0)) throw std::domain_error("bessel_i1_over_x: x must be >= 0");
    if (x < 1e-4) {
        const double q = 0.25 * x * x;
        return 0.5 * (1.0 + q / 2.0 * (1.0 + q / 6.0));
    }
    return bessel_i1(x) / x;
}

double detail::bessel_in(int nu, double x) { return bessel_i(nu, x); }

// ---------------------------------------------------------------------------
// Complete elliptic integrals via the arithmetic-geometric mean
// ---------------------------------------------------------------------------

namespace {

// AGM of (1, pc) with the c_n sum that yields E; returns {agm, csum} where
// csum = sum_{n>=0} 2^{n-1} c_n^2 with c_0 = p.
struct AgmResult {
    double agm;
    double csum;
};

AgmResult elliptic_agm(double p, double pc) {
    double a = 1.0, b = pc, c = p;
    double csum = 0.5 * c * c;
    double pow2 = 0.5;
    for (int n = 0; n < 60; ++n) {
        const double an = 0.5 * (a + b);
        const double cn = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        c = cn;
        pow2 *= 2.0;
        csum += pow2 * c * c;
        if (std::abs(c) <= a * std::numeric_limits<double>::epsilon()) break;
    }
    return {a, csum};
}

}  // namespace

double elliptic_k_complement(double pc) {
    if (!(pc > 0.0)) throw std::domain_error("elliptic_k: modulus 1 (K diverges)");
    if (pc > 1.0) pc = 1.0;
    const double p2 = std::max(0.0, (1.0 - pc) * (1.0 + pc));
    return M_PI_2 / elliptic_agm(std::sqrt(p2), pc).agm;
}

double elliptic_e_complement(double pc) {
    if (pc == 1.0) return M_PI_2;
    if (!(pc >= 0.0)) throw std::domain_error("elliptic_e: bad complement");
    if (pc == 0.0) return 1.0;
    const double p2 = std::max(0.0, (1.0 - pc) * (1.0 + pc));
    const AgmResult r = elliptic_agm(std::sqrt(p2), pc);
    return M_PI_2 / r.agm * (1.0 - r.csum);
}

double elliptic_k(EllipticModulus m) {
    if (!(m.p >= 0.0) || m.p >= 1.0) throw std::domain_error("elliptic_k: modulus must be in [0,1)");
    return elliptic_k_complement(std::sqrt((1.0 - m.p) * (1.0 + m.p)));
}

double elliptic_e(EllipticModulus m) {
    if (!(m.p >= 0.0) || m.p >= 1.0) throw std::domain_error("elliptic_e: modulus must be in [0,1)");
    return elliptic_e_complement(std::sqrt((1.0 - m.p) * (1.0 + m.p)));
}

// ---------------------------------------------------------------------------
// Adaptive Gauss-Legendre quadrature
// ---------------------------------------------------------------------------

namespace {

struct GlRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes as roots of P_n by Newton iteration on the recurrence.
GlRule make_gl(int n) {
    GlRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GlRule& gl12() {
    static const GlRule rule = make_gl(12);
    return rule;
}
const GlRule& gl24() {
    static const GlRule rule = make_gl(24);
    return rule;
}

struct Panel {
    double a, b;
    double value;    // GL24 estimate
    double error;    // |GL24 - GL12|
    long seq;        // creation order, for deterministic tie-breaking
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq;
    }
};

Panel evaluate_panel(const Integrand1D& f, double a, double b, long seq) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s12 = 0.0, s24 = 0.0;
    const GlRule& lo = gl12();
    const GlRule& hi = gl24();
    for (size_t i = 0; i < lo.nodes.size(); ++i) s12 += lo.weights[i] * f(mid + half * lo.nodes[i]);
    for (size_t i = 0; i < hi.nodes.size(); ++i) s24 += hi.weights[i] * f(mid + half * hi.nodes[i]);
    s12 *= half;
    s24 *= half;
    return Panel{a, b, s24, std::abs(s24 - s12), seq};
}

}  // namespace

QuadResult integrate_1d(const Integrand1D& f, double a, double b, const QuadSpec& spec) {
    QuadResult out;
    if (a == b) return out;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    long seq = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    queue.push(evaluate_panel(f, a, b, seq++));
    double total = queue.top().value;
    double total_err = queue.top().error;
    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) &&
           splits < spec.max_subdivisions) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {   // interval exhausted by rounding
            queue.push(Panel{worst.a, worst.b, worst.value, 0.0, worst.seq});
            continue;
        }
        Panel left = evaluate_panel(f, worst.a, mid, seq++);
        Panel right = evaluate_panel(f, mid, worst.b, seq++);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++splits;
    }
    out.value = sign * total;
    out.error = total_err;
    out.subdivisions = splits;
    out.converged = total_err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    return out;
}

QuadResult integrate_semi_infinite(const Integrand1D& f, double decay_scale, const QuadSpec& spec) {
    const double tail = decay_scale * std::sqrt(std::log(1.0 / std::max(spec.abs_tol * 1e-4, 1e-300)));
    const double x_max = std::max(spec.truncation_radius, tail);
    return integrate_1d(f, 0.0, x_max, spec);
}

namespace {

// Doubling trapezoid over a full period; geometric convergence for smooth
// integrands. Stops on an absolute tolerance per point, a relative one on
// the running sum, or the summation roundoff floor for large cancelling
// integrands (odd Coulomb kernels reach 1/s^2 pointwise while their angular
// mean stays finite).
template <typename Eval, typename Acc>
bool angular_integral(const Eval& eval, double abs_tol, double rel_tol, Acc& result) {
    constexpr int kStart = 16;
    constexpr int kMax = 16384;
    Acc sum{};
    int n = kStart;
    for (int i = 0; i < n; ++i) eval(2.0 * M_PI * i / n, sum);
    bool ok = false;
    while (n < kMax) {
        Acc extra{};
        for (int i = 0; i < n; ++i) eval(2.0 * M_PI * (i + 0.5) / n, extra);
        const Acc prev = sum;
        sum.add(extra);
        n *= 2;
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * sum.magnitude();
        if (sum.dist(prev) <= abs_tol * n + rel_tol * sum.size() + floor) {
            ok = true;
            break;
        }
    }
    result = sum;
    result.scale(2.0 * M_PI / n);
    return ok;
}

struct RealAcc {
    double v = 0.0;
    double a = 0.0;   // sum of |f|, roundoff scale
    void add(const RealAcc& o) {
        v += o.v;
        a += o.a;
    }
    double dist(const RealAcc& o) const { return std::abs(v - 2.0 * o.v); }
    double size() const { return std::abs(v); }
    double magnitude() const { return a; }
    void scale(double s) { v *= s; }
};

struct ComplexAcc {
    double re = 0.0, im = 0.0;
    double a = 0.0;
    void add(const ComplexAcc& o) {
        re += o.re;
        im += o.im;
        a += o.a;
    }
    double dist(const ComplexAcc& o) const {
        return std::abs(re - 2.0 * o.re) + std::abs(im - 2.0 * o.im);
    }
    double size() const { return std::abs(re) + std::abs(im); }
    double magnitude() const { return a; }
    void scale(double s) {
        re *= s;
        im *= s;
    }
};

}  // namespace

QuadResult integrate_2d_polar(const Integrand2D& f, double cx, double cy,
                              const QuadSpec& spec, double s_max) {
    if (s_max <= 0.0) s_max = spec.truncation_radius + std::hypot(cx, cy);
    const double ang_tol = std::max(spec.abs_tol / (2.0 * M_PI * s_max), 1e-16);
    bool angular_ok = true;
    auto radial = [&](double s) {
        RealAcc acc;
        auto eval = [&](double phi, RealAcc& a) {
            const double v = f(s, phi);
            a.v += v;
            a.a += std::abs(v);
        };
        if (!angular_integral(eval, ang_tol, 0.1 * spec.rel_tol, acc)) angular_ok = false;
        return s * acc.v;
    };
    QuadResult out = integrate_1d(radial, 0.0, s_max, spec);
    out.converged = out.converged && angular_ok;
    return out;
}

Complex2DResult integrate_2d_polar_complex(
    const std::function<void(double, double, double&, double&)>& f, double cx, double cy,
    const QuadSpec& spec, double s_max) {
    if (s_max <= 0.0) s_max = spec.truncation_radius + std::hypot(cx, cy);
    const double ang_tol = std::max(spec.abs_tol / (2.0 * M_PI * s_max), 1e-16);
    bool angular_ok = true;
    auto radial_part = [&](double s, bool imag) {
        ComplexAcc acc;
        auto eval = [&](double phi, ComplexAcc& a) {
            double re = 0.0, im = 0.0;
            f(s, phi, re, im);
            a.re += re;
            a.im += im;
            a.a += std::abs(re) + std::abs(im);
        };
        if (!angular_integral(eval, ang_tol, 0.1 * spec.rel_tol, acc)) angular_ok = false;
        return s * (imag ? acc.im : acc.re);
    };
    QuadResult re = integrate_1d([&](double s) { return radial_part(s, false); }, 0.0, s_max, spec);
    QuadResult im = integrate_1d([&](double s) { return radial_part(s, true); }, 0.0, s_max, spec);
    Complex2DResult out;
    out.re = re.value;
    out.im = im.value;
    out.error = re.error + im.error;
    out.converged = re.converged && im.converged && angular_ok;
    return out;
}

}  // namespace qdot
