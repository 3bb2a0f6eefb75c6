#pragma once

#include "confgeo/geometry/types.hpp"

namespace confgeo::dynamics {

using geometry::Matrix;
using geometry::Vector;

// Proper-time gauge: |u|_g = 1 and g(u, a) = 0.
struct GeodesicState {
    Vector x;
    Vector u;
    Vector a;  // nabla_u u
    double s = 0.0;
};

// Arbitrary parametrization: v = dx/dt, b = nabla_v v.
struct UnparamState {
    Vector x;
    Vector v;
    Vector b;
    double t = 0.0;
};

// Coordinate derivatives of (x, u, a) with respect to proper time.
struct StateDerivative {
    Vector dx;
    Vector du;
    Vector da;
};

inline constexpr double kGaugeTolerance = 1e-9;

}  // namespace confgeo::dynamics
