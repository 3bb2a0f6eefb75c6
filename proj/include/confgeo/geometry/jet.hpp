#pragma once

// Second-order forward-mode jets: value, gradient and Hessian with respect to
// up to kMaxDim independent variables. Metric formulas written as templates
// over the scalar type are evaluated with Jet to obtain exact first and
// second partials.

#include "confgeo/geometry/types.hpp"

#include <array>
#include <cmath>

namespace confgeo::geometry {

struct Jet {
    double v = 0.0;
    std::array<double, kMaxDim> d{};
    std::array<double, kMaxDim * kMaxDim> dd{};

    Jet() = default;
    Jet(double value) : v(value) {}  // NOLINT: constants promote implicitly

    static Jet variable(double value, int index) {
        Jet j(value);
        j.d[index] = 1.0;
        return j;
    }

    double hess(int a, int b) const { return dd[a * kMaxDim + b]; }

    Jet& operator+=(const Jet& o) {
        v += o.v;
        for (int i = 0; i < kMaxDim; ++i) d[i] += o.d[i];
        for (int i = 0; i < kMaxDim * kMaxDim; ++i) dd[i] += o.dd[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        v -= o.v;
        for (int i = 0; i < kMaxDim; ++i) d[i] -= o.d[i];
        for (int i = 0; i < kMaxDim * kMaxDim; ++i) dd[i] -= o.dd[i];
        return *this;
    }
    Jet& operator*=(double s) {
        v *= s;
        for (auto& x : d) x *= s;
        for (auto& x : dd) x *= s;
        return *this;
    }
};

// Applies a scalar function with known derivatives f0 = f(v), f1 = f'(v),
// f2 = f''(v) through the chain rule.
inline Jet chain(const Jet& x, double f0, double f1, double f2) {
    Jet r(f0);
    for (int a = 0; a < kMaxDim; ++a) r.d[a] = f1 * x.d[a];
    for (int a = 0; a < kMaxDim; ++a)
        for (int b = 0; b < kMaxDim; ++b)
            r.dd[a * kMaxDim + b] = f1 * x.dd[a * kMaxDim + b] + f2 * x.d[a] * x.d[b];
    return r;
}

inline Jet operator-(const Jet& x) {
    Jet r = x;
    r *= -1.0;
    return r;
}

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator+(Jet a, double b) { a.v += b; return a; }
inline Jet operator+(double a, Jet b) { b.v += a; return b; }
inline Jet operator-(Jet a, double b) { a.v -= b; return a; }
inline Jet operator-(double a, const Jet& b) { return -b + a; }
inline Jet operator*(Jet a, double s) { return a *= s; }
inline Jet operator*(double s, Jet a) { return a *= s; }

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.v * b.v);
    for (int i = 0; i < kMaxDim; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    for (int i = 0; i < kMaxDim; ++i)
        for (int j = 0; j < kMaxDim; ++j) {
            const int k = i * kMaxDim + j;
            r.dd[k] = a.dd[k] * b.v + a.v * b.dd[k] + a.d[i] * b.d[j] + a.d[j] * b.d[i];
        }
    return r;
}

inline Jet reciprocal(const Jet& x) {
    const double inv = 1.0 / x.v;
    return chain(x, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
inline Jet operator/(double a, const Jet& b) { return a * reciprocal(b); }

inline Jet exp(const Jet& x) {
    const double e = std::exp(x.v);
    return chain(x, e, e, e);
}

inline Jet log(const Jet& x) { return chain(x, std::log(x.v), 1.0 / x.v, -1.0 / (x.v * x.v)); }

inline Jet sqrt(const Jet& x) {
    const double s = std::sqrt(x.v);
    return chain(x, s, 0.5 / s, -0.25 / (s * x.v));
}

inline Jet sin(const Jet& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return chain(x, s, c, -s);
}

inline Jet cos(const Jet& x) {
    const double s = std::sin(x.v), c = std::cos(x.v);
    return chain(x, c, -s, -c);
}

// Value access that works for both double and Jet inside templated formulas.
inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

}  // namespace confgeo::geometry
