#include "qdot/detail/forms.hpp"

#include <cmath>

#include "qdot/numerics.hpp"

namespace qdot::detail {

namespace {

// d^k/dt^k of a degree-4 polynomial with coefficients c, evaluated at t.
void poly_jets(const std::array<double, 5>& c, double t, double out[4]) {
    out[0] = (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0];
    out[1] = ((4.0 * c[4] * t + 3.0 * c[3]) * t + 2.0 * c[2]) * t + c[1];
    out[2] = (12.0 * c[4] * t + 6.0 * c[3]) * t + 2.0 * c[2];
    out[3] = 24.0 * c[4] * t + 6.0 * c[3];
}

// Leibniz product of two order-3 jets.
void jet_mul(const double u[4], const double v[4], double out[4]) {
    out[0] = u[0] * v[0];
    out[1] = u[1] * v[0] + u[0] * v[1];
    out[2] = u[2] * v[0] + 2.0 * u[1] * v[1] + u[0] * v[2];
    out[3] = u[3] * v[0] + 3.0 * u[2] * v[1] + 3.0 * u[1] * v[2] + u[0] * v[3];
}

}  // namespace

Jet4 GaussBesselForm::jet_t(double t) const {
    const double w = a * t;
    const double i0 = detail::bessel_in(0, w);
    const double i1 = detail::bessel_in(1, w);
    const double i2 = detail::bessel_in(2, w);
    const double i3 = detail::bessel_in(3, w);
    const double i4 = detail::bessel_in(4, w);

    // d^k/dt^k of I0(a t), I1(a t) through the ladder d/dw I_nu = (I_{nu-1}+I_{nu+1})/2.
    const double jb0[4] = {i0, a * i1, a * a * 0.5 * (i0 + i2), a * a * a * 0.25 * (3.0 * i1 + i3)};
    const double jb1[4] = {i1, a * 0.5 * (i0 + i2), a * a * 0.25 * (3.0 * i1 + i3),
                           a * a * a * 0.125 * (3.0 * i0 + 4.0 * i2 + i4)};

    const double eg = std::exp(cg * t);
    const double jg[4] = {eg, cg * eg, cg * cg * eg, cg * cg * cg * eg};
    const double eb = std::exp(cb * t);
    const double jeb[4] = {eb, cb * eb, cb * cb * eb, cb * cb * cb * eb};

    double pg[4], p0[4], p1[4];
    poly_jets(G, t, pg);
    poly_jets(P0, t, p0);
    poly_jets(P1, t, p1);

    double gauss[4], b0[4], b1[4], tmp[4], bsum[4], bess[4];
    jet_mul(jg, pg, gauss);
    jet_mul(p0, jb0, b0);
    jet_mul(p1, jb1, b1);
    for (int k = 0; k < 4; ++k) tmp[k] = b0[k] + b1[k];
    jet_mul(jeb, tmp, bsum);
    for (int k = 0; k < 4; ++k) bess[k] = gauss[k] + bsum[k];
    return Jet4{bess[0], bess[1], bess[2], bess[3]};
}

Jet4 GaussBesselForm::jet(double r) const {
    const double t = r * r;
    const Jet4 xt = jet_t(t);
    // t-derivatives to r-derivatives of X(t): r-parity even.
    Jet4 xr;
    xr.v = xt.v;
    xr.d1 = 2.0 * r * xt.d1;
    xr.d2 = 2.0 * xt.d1 + 4.0 * t * xt.d2;
    xr.d3 = 12.0 * r * xt.d2 + 8.0 * r * t * xt.d3;
    if (sigma == 1) {
        Jet4 y;
        y.v = r * xr.v;
        y.d1 = xr.v + r * xr.d1;
        y.d2 = 2.0 * xr.d1 + r * xr.d2;
        y.d3 = 3.0 * xr.d2 + r * xr.d3;
        xr = y;
    }
    xr.v *= scale;
    xr.d1 *= scale;
    xr.d2 *= scale;
    xr.d3 *= scale;
    return xr;
}

double GaussBesselForm::value(double r) const {
    const double t = r * r;
    const double w = a * t;
    double g = 0.0, p0 = 0.0, p1 = 0.0;
    for (int j = 4; j >= 0; --j) {
        g = g * t + G[j];
        p0 = p0 * t + P0[j];
        p1 = p1 * t + P1[j];
    }
    double x = std::exp(cg * t) * g +
               std::exp(cb * t) * (p0 * detail::bessel_in(0, w) + p1 * detail::bessel_in(1, w));
    if (sigma == 1) x *= r;
    return scale * x;
}

namespace {

struct Ctx {
    double A, B, C, om;
    double sp;                     // sqrt(pi)
    double s1, s3, s5, s7, s9;     // Omega^{-1/2}, ^{-3/2}, ...
    double ab_c;                   // A B + C
    double b2_2ac;                 // B^2 + 2 A C
    double a2_2b;                  // A^2 + 2 B
    double bc, c2q;                // B C, C^2
};

Ctx make_ctx(const TripletParams& p) {
    Ctx c{};
    c.A = p.c2;
    c.B = p.c3;
    c.C = p.c4;
    c.om = p.omega;
    c.sp = std::sqrt(M_PI);
    c.s1 = 1.0 / std::sqrt(p.omega);
    c.s3 = c.s1 / p.omega;
    c.s5 = c.s3 / p.omega;
    c.s7 = c.s5 / p.omega;
    c.s9 = c.s7 / p.omega;
    c.ab_c = c.A * c.B + c.C;
    c.b2_2ac = c.B * c.B + 2.0 * c.A * c.C;
    c.a2_2b = c.A * c.A + 2.0 * c.B;
    c.bc = c.B * c.C;
    c.c2q = c.C * c.C;
    return c;
}

double common_prefactor(const TripletParams& p) {
    return 4.0 * M_PI * p.norm * p.norm;
}

}  // namespace

GaussBesselForm density_form(const TripletParams& p) {
    const Ctx c = make_ctx(p);
    const double om = c.om, om2 = om * om, om3 = om2 * om, om4 = om3 * om, om5 = om4 * om;
    GaussBesselForm f;
    f.sigma = 0;
    f.scale = common_prefactor(p);
    f.cg = -om;
    f.cb = -1.5 * om;
    f.a = 0.5 * om;
    f.G = {12.0 * c.c2q / om5 + 0.5 / om2 + c.a2_2b / om3 + 3.0 * c.b2_2ac / om4,
           48.0 * c.c2q / om4 + 0.5 / om + 2.0 * c.a2_2b / om2 + 9.0 * c.b2_2ac / om3,
           36.0 * c.c2q / om3 + 0.5 * c.a2_2b / om + 4.5 * c.b2_2ac / om2,
           8.0 * c.c2q / om2 + 0.5 * c.b2_2ac / om,
           0.5 * c.c2q / om};
    f.P0 = {c.sp * (0.75 * c.A * c.s5 + 105.0 / 16.0 * c.bc * c.s9 + 15.0 / 8.0 * c.ab_c * c.s7),
            c.sp * (1.5 * c.A * c.s3 + 105.0 / 4.0 * c.bc * c.s7 + 45.0 / 8.0 * c.ab_c * c.s5),
            c.sp * (0.5 * c.A * c.s1 + 23.5 * c.bc * c.s5 + 3.5 * c.ab_c * c.s3),
            c.sp * (6.5 * c.bc * c.s3 + 0.5 * c.ab_c * c.s1),
            c.sp * 0.5 * c.bc * c.s1};
    f.P1 = {0.0,
            c.sp * (c.A * c.s3 + 11.0 * c.bc * c.s7 + 23.0 / 8.0 * c.ab_c * c.s5),
            c.sp * (0.5 * c.A * c.s1 + 71.0 / 4.0 * c.bc * c.s5 + 3.0 * c.ab_c * c.s3),
            c.sp * (6.0 * c.bc * c.s3 + 0.5 * c.ab_c * c.s1),
            c.sp * 0.5 * c.bc * c.s1};
    return f;
}

GaussBesselForm paramagnetic_form(const TripletParams& p) {
    const Ctx c = make_ctx(p);
    const double om = c.om, om2 = om * om, om3 = om2 * om, om4 = om3 * om;
    GaussBesselForm f;
    f.sigma = 1;
    f.scale = common_prefactor(p);
    f.cg = -om;
    f.cb = -1.5 * om;
    f.a = 0.5 * om;
    f.G = {12.0 * c.c2q / om4 + 0.5 / om + c.a2_2b / om2 + 3.0 * c.b2_2ac / om3,
           18.0 * c.c2q / om3 + 0.5 * c.a2_2b / om + 3.0 * c.b2_2ac / om2,
           6.0 * c.c2q / om2 + 0.5 * c.b2_2ac / om,
           0.5 * c.c2q / om,
           0.0};
    f.P0 = {c.sp * (0.75 * c.A * c.s3 + 105.0 / 16.0 * c.bc * c.s7 + 15.0 / 8.0 * c.ab_c * c.s5),
            c.sp * (0.5 * c.A * c.s1 + 45.0 / 4.0 * c.bc * c.s5 + 2.25 * c.ab_c * c.s3),
            c.sp * (19.0 / 4.0 * c.bc * c.s3 + 0.5 * c.ab_c * c.s1),
            c.sp * 0.5 * c.bc * c.s1,
            0.0};
    f.P1 = {c.sp * (0.25 * c.A * c.s3 + 15.0 / 16.0 * c.bc * c.s7 + 3.0 / 8.0 * c.ab_c * c.s5),
            c.sp * (0.5 * c.A * c.s1 + 29.0 / 4.0 * c.bc * c.s5 + 1.75 * c.ab_c * c.s3),
            c.sp * (17.0 / 4.0 * c.bc * c.s3 + 0.5 * c.ab_c * c.s1),
            c.sp * 0.5 * c.bc * c.s1,
            0.0};
    return f;
}

GaussBesselForm interaction_force_form(const TripletParams& p) {
    const Ctx c = make_ctx(p);
    const double om = c.om, om2 = om * om, om3 = om2 * om;
    GaussBesselForm f;
    f.sigma = 1;
    f.scale = common_prefactor(p);
    f.cg = -om;
    f.cb = -1.5 * om;
    f.a = 0.5 * om;
    f.G = {c.A / om + 6.0 * c.bc / om3 + 2.0 * c.ab_c / om2,
           6.0 * c.bc / om2 + c.ab_c / om,
           c.bc / om,
           0.0, 0.0};
    f.P0 = {c.sp * (105.0 / 32.0 * c.c2q * c.s7 + 0.25 * c.s1 + 3.0 / 8.0 * c.a2_2b * c.s3 +
                    15.0 / 16.0 * c.b2_2ac * c.s5),
            c.sp * (45.0 / 8.0 * c.c2q * c.s5 + 0.25 * c.a2_2b * c.s1 + 9.0 / 8.0 * c.b2_2ac * c.s3),
            c.sp * (19.0 / 8.0 * c.c2q * c.s3 + 0.25 * c.b2_2ac * c.s1),
            c.sp * 0.25 * c.c2q * c.s1,
            0.0};
    f.P1 = {c.sp * (15.0 / 32.0 * c.c2q * c.s7 + 0.25 * c.s1 + 1.0 / 8.0 * c.a2_2b * c.s3 +
                    3.0 / 16.0 * c.b2_2ac * c.s5),
            c.sp * (29.0 / 8.0 * c.c2q * c.s5 + 0.25 * c.a2_2b * c.s1 + 7.0 / 8.0 * c.b2_2ac * c.s3),
            c.sp * (17.0 / 8.0 * c.c2q * c.s3 + 0.25 * c.b2_2ac * c.s1),
            c.sp * 0.25 * c.c2q * c.s1,
            0.0};
    return f;
}

// f1 carries the cancellation-free factorization of g1^2 - g0^2/u^4,
// (A + 2B u + 3C u^2)(2/u + 3A + 4B u + 5C u^2); the 1/r of its definition is
// already divided out, so it shares the even-polynomial representation.
GaussBesselForm kinetic_f1_form(const TripletParams& p) {
    const Ctx c = make_ctx(p);
    const double om = c.om, om2 = om * om, om3 = om2 * om;
    GaussBesselForm f;
    f.sigma = 0;
    f.scale = 1.0;
    f.cg = om;
    f.cb = 0.5 * om;
    f.a = 0.5 * om;
    f.G = {45.0 * c.c2q / om3 + (1.5 * c.A * c.A + 2.0 * c.B) / om +
               (14.0 * c.A * c.C + 8.0 * c.B * c.B) / om2,
           45.0 * c.c2q / om2 + (7.0 * c.A * c.C + 4.0 * c.B * c.B) / om,
           7.5 * c.c2q / om,
           0.0, 0.0};
    f.P0 = {c.sp * (0.5 * c.A * c.s1 + 165.0 / 8.0 * c.bc * c.s5 +
                    (15.0 / 4.0 * c.A * c.B + 2.25 * c.C) * c.s3),
            c.sp * (99.0 / 4.0 * c.bc * c.s3 + (2.5 * c.A * c.B + 1.5 * c.C) * c.s1),
            c.sp * 5.5 * c.bc * c.s1,
            0.0, 0.0};
    f.P1 = {c.sp * (0.5 * c.A * c.s1 + 33.0 / 8.0 * c.bc * c.s5 +
                    (1.25 * c.A * c.B + 0.75 * c.C) * c.s3),
            c.sp * (77.0 / 4.0 * c.bc * c.s3 + (2.5 * c.A * c.B + 1.5 * c.C) * c.s1),
            c.sp * 5.5 * c.bc * c.s1,
            0.0, 0.0};
    return f;
}

GaussBesselForm kinetic_f2_form(const TripletParams& p) {
    const Ctx c = make_ctx(p);
    const double om = c.om, om2 = om * om, om3 = om2 * om, om4 = om3 * om;
    GaussBesselForm f;
    f.sigma = 0;
    f.scale = 1.0;
    f.cg = om;
    f.cb = 0.5 * om;
    f.a = 0.5 * om;
    f.G = {12.0 * c.c2q / om4 + 0.5 / om + c.a2_2b / om2 + 3.0 * c.b2_2ac / om3,
           36.0 * c.c2q / om3 + c.a2_2b / om + 6.0 * c.b2_2ac / om2,
           18.0 * c.c2q / om2 + 1.5 * c.b2_2ac / om,
           2.0 * c.c2q / om,
           0.0};
    f.P0 = {c.sp * (0.75 * c.A * c.s3 + 105.0 / 16.0 * c.bc * c.s7 + 15.0 / 8.0 * c.ab_c * c.s5),
            c.sp * (0.75 * c.A * c.s1 + 315.0 / 16.0 * c.bc * c.s5 + 15.0 / 4.0 * c.ab_c * c.s3),
            c.sp * (49.0 / 4.0 * c.bc * c.s3 + 1.25 * c.ab_c * c.s1),
            c.sp * 1.75 * c.bc * c.s1,
            0.0};
    f.P1 = {0.0,
            c.sp * (0.75 * c.A * c.s1 + 161.0 / 16.0 * c.bc * c.s5 + 2.5 * c.ab_c * c.s3),
            c.sp * (10.5 * c.bc * c.s3 + 1.25 * c.ab_c * c.s1),
            c.sp * 1.75 * c.bc * c.s1,
            0.0};
    return f;
}

GaussBesselForm kinetic_f3_form(const TripletParams& p) {
    const Ctx c = make_ctx(p);
    const double om = c.om, om2 = om * om, om3 = om2 * om, om4 = om3 * om;
    GaussBesselForm f;
    f.sigma = 0;
    f.scale = 1.0;
    f.cg = om;
    f.cb = 0.5 * om;
    f.a = 0.5 * om;
    f.G = {3.0 * c.c2q / om4 + 0.5 / om + 0.5 * c.a2_2b / om2 + c.b2_2ac / om3,
           9.0 * c.c2q / om3 + 0.5 * c.a2_2b / om + 2.0 * c.b2_2ac / om2,
           4.5 * c.c2q / om2 + 0.5 * c.b2_2ac / om,
           0.5 * c.c2q / om,
           0.0};
    f.P0 = {c.sp * (0.5 * c.A * c.s3 + 15.0 / 8.0 * c.bc * c.s7 + 0.75 * c.ab_c * c.s5),
            c.sp * (0.5 * c.A * c.s1 + 45.0 / 8.0 * c.bc * c.s5 + 1.5 * c.ab_c * c.s3),
            c.sp * (3.5 * c.bc * c.s3 + 0.5 * c.ab_c * c.s1),
            c.sp * 0.5 * c.bc * c.s1,
            0.0};
    f.P1 = {0.0,
            c.sp * (0.5 * c.A * c.s1 + 23.0 / 8.0 * c.bc * c.s5 + c.ab_c * c.s3),
            c.sp * (3.0 * c.bc * c.s3 + 0.5 * c.ab_c * c.s1),
            c.sp * 0.5 * c.bc * c.s1,
            0.0};
    return f;
}

}  // namespace qdot::detail
