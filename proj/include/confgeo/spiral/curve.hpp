#pragma once

#include "confgeo/dynamics/state.hpp"
#include "confgeo/geometry/types.hpp"

namespace confgeo::spiral {

using geometry::Matrix;
using geometry::Vector;

// The curve r = t, phi = e^{1/t}, z = 0 for t in (0, 1].
inline constexpr double kCurveEnd = 1.0;

struct PolarFrameKinematics {
    // Components in the orthonormal frame (e_r, e_phi).
    double v_r = 0.0, v_phi = 0.0;
    double b_r = 0.0, b_phi = 0.0;
};

// v = e_r - t f e_phi, b = -t f^2 e_r - (t f' + 2 f) e_phi.
PolarFrameKinematics spiral_frame(double t);

// Position (t, e^{1/t}, 0), velocity and covariant acceleration of the spiral
// in cylindrical coordinates: v = (1, -f, 0), b = (-t f^2, -f' - 2f/t, 0).
// Throws GeometryError(OutsideDomain) unless 0 < t <= 1.
dynamics::UnparamState spiral_state(double t);

// d b / dt in cylindrical coordinates, needed by the unparametrized residual.
Vector spiral_b_dot(double t);

// (t cos e^{1/t}, t sin e^{1/t}).
Vector spiral_xy(double t);

// Planar versions in the (r, phi) chart.
dynamics::UnparamState spiral_state_polar(double t);
Vector spiral_b_dot_polar(double t);

// Distance in the (x, y) plane between a point given in cylindrical
// coordinates and the spiral point of the same radius. Infinite for r <= 0.
double tracking_error(const Vector& cylindrical_point);

// M = 2 e_r e_phi = 2 r dr dphi, coordinate components.
Matrix m_tensor_polar(double r);        // (r, phi)
Matrix m_tensor_cylindrical(double r);  // (r, phi, z), zero z row and column
// Frame components: off-diagonal ones, zero diagonal.
Matrix m_tensor_frame();

}  // namespace confgeo::spiral
