#pragma once

#include <array>

#include "qdot/params.hpp"

// Closed forms of the quantal sources and fields of the triplet state share
// one shape: every Gaussian-Bessel integral over the relative coordinate
// collapses to
//
//   X(r) = scale * r^sigma * [ e^{cg t} G(t) + e^{cb t} (P0(t) I0(w) + P1(t) I1(w)) ],
//
// with t = r^2, w = (Omega/2) t, and G, P0, P1 polynomials whose coefficients
// are fixed by c2, c3, c4 and Omega. This header carries that representation
// together with analytic radial derivatives up to third order (the jets feed
// the magnetization current, the differential-density force and the kinetic
// force assembly).

namespace qdot::detail {

struct Jet4 {
    double v = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

struct GaussBesselForm {
    int sigma = 0;            // overall r^sigma (0 or 1)
    double scale = 1.0;
    double cg = 0.0;          // Gaussian-part exponent rate (per t)
    double cb = 0.0;          // Bessel-part exponent rate
    double a = 0.0;           // Bessel argument rate: w = a t
    std::array<double, 5> G{};
    std::array<double, 5> P0{};
    std::array<double, 5> P1{};

    double value(double r) const;
    // value and d/dr .. d^3/dr^3
    Jet4 jet(double r) const;
    // t-space jets of the bracket (no r^sigma, no scale): X, dX/dt, ...
    Jet4 jet_t(double t) const;
};

// The six canonical forms. rho/jp/eee carry the full prefactor
// (4 pi N^2 e^{-2 Omega t} folded in, so cg = -Omega, cb = -3 Omega/2);
// f1/f2/f3 are the bare kinetic-tensor integrals (cg = +Omega, cb = +Omega/2).
GaussBesselForm density_form(const TripletParams& p);
GaussBesselForm paramagnetic_form(const TripletParams& p);          // j_p(r)
GaussBesselForm interaction_force_form(const TripletParams& p);     // e_ee(r)
GaussBesselForm kinetic_f1_form(const TripletParams& p);
GaussBesselForm kinetic_f2_form(const TripletParams& p);
GaussBesselForm kinetic_f3_form(const TripletParams& p);

}  // namespace qdot::detail
