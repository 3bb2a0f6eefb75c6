#pragma once

// Closed-form ingredients of the spiral r = t, phi = e^{1/t}.
//
// With p = t f(t) = e^{1/t} / t the planar curve has, in the polar
// orthonormal frame (mu = e_r ^ e_phi),
//   v ^ b / |v|^3          = A(t) mu,  A = (p/t^2 - p^3/t) / (1 + p^2)^{3/2}
//   (v ^ M-hat v) / |v|    = B(t) mu,  B = (1 - p^2) / (1 + p^2)^{1/2}
// and mu is parallel, so the forcing function is k = A'(t) / B(t).
//
// Everything is written in terms of w = 1/p = t e^{-1/t}, which is tiny
// where e^{1/t} would overflow, so k and h are evaluated without overflow
// for every t > 0. The templates accept double or geometry::Jet.

#include "confgeo/geometry/jet.hpp"

#include <cmath>

namespace confgeo::spiral {

// f(t) = e^{1/t} / t^2 and its first two derivatives. Below t = 0.05 they
// are evaluated from log-magnitudes; they overflow to +-inf for t < ~0.0014.
double f(double t);
double f_dot(double t);
double f_ddot(double t);
// log f(t), finite for all t > 0.
double log_f(double t);

template <class S>
S reciprocal_speed_scale(const S& t) {
    using std::exp;
    return t * exp(-1.0 / t);  // w = 1 / (t f)
}

template <class S>
S forcing_A(const S& t) {
    using std::sqrt;
    const S w = reciprocal_speed_scale(t);
    const S q = 1.0 + w * w;
    return (w * w - t) / (t * t * q * sqrt(q));
}

// A'(t), differentiated by hand from forcing_A.
template <class S>
S forcing_A_prime(const S& t) {
    using std::sqrt;
    const S w = reciprocal_speed_scale(t);
    const S w2 = w * w;
    const S q = 1.0 + w2;
    const S q32 = q * sqrt(q);
    const S t3 = t * t * t;
    const S t4 = t3 * t;
    const S first = ((3.0 + 4.0 * t) / t3 - w2 * (1.0 + 3.0 * t) / t4) / q32;
    const S second = 3.0 * (1.0 + t) * (t - w2) / (t4 * q32 * q);
    return first - second;
}

template <class S>
S forcing_B(const S& t) {
    using std::sqrt;
    const S w = reciprocal_speed_scale(t);
    return (w * w - 1.0) / (w * sqrt(1.0 + w * w));
}

inline constexpr double kFlatBelow = 2e-3;

// k = A' / B, rearranged as A' * w sqrt(1 + w^2) / (w^2 - 1) so that no
// factor overflows.
template <class S>
S forcing_k_formula(const S& t) {
    using std::sqrt;
    // k ~ -e^{-1/t} / t is below the smallest double long before this.
    if (geometry::value_of(t) < kFlatBelow) return S(0.0);
    const S w = reciprocal_speed_scale(t);
    const S w2 = w * w;
    return forcing_A_prime(t) * w * sqrt(1.0 + w2) / (w2 - 1.0);
}

// First positive root t* of t f(t) = 1 (equivalently e^{1/t} = t), where B
// vanishes and k has a pole.
double forcing_pole();

struct ForcingValue {
    double k = 0.0;
    bool near_pole = false;  // t > 0.95 t*
};

// k(t) for 0 < t < t*; throws GeometryError(OutsideDomain) otherwise.
double k_exact(double t);
ForcingValue k_exact_checked(double t);

// Smooth cutoff: 1 on r <= kCutoffInner, 0 on r >= kCutoffOuter, built from
// the e^{-1/x} bump.
inline constexpr double kCutoffInner = 1.1;
inline constexpr double kCutoffOuter = 1.5;

template <class S>
S smooth_step_bump(const S& x) {
    using std::exp;
    // psi(x) = e^{-1/x} for x > 0, else 0.
    if (geometry::value_of(x) <= 0.0) return S(0.0);
    return exp(-1.0 / x);
}

template <class S>
S cutoff_chi(const S& r) {
    const double rv = geometry::value_of(r);
    if (rv <= kCutoffInner) return S(1.0);
    if (rv >= kCutoffOuter) return S(0.0);
    const S x = (r - kCutoffInner) / (kCutoffOuter - kCutoffInner);
    const S up = smooth_step_bump(x);
    const S down = smooth_step_bump(1.0 - x);
    return down / (up + down);
}

// h(r) = -k(r) chi(r) / 2 for r > 0 and 0 for r <= 0. `scale` multiplies the
// profile (0 switches the example metric off).
template <class S>
S h_profile(const S& r, double scale = 1.0) {
    const double rv = geometry::value_of(r);
    if (rv <= 0.0 || rv >= kCutoffOuter || scale == 0.0) return S(0.0);
    return (-0.5 * scale) * forcing_k_formula(r) * cutoff_chi(r);
}

}  // namespace confgeo::spiral
