#include "confgeo/spiral/curve.hpp"
#include "confgeo/geometry/error.hpp"
#include "confgeo/spiral/forcing.hpp"

#include <cmath>
#include <limits>

namespace confgeo::spiral {

namespace {

void require_on_curve(double t) {
    if (!(t > 0.0) || t > kCurveEnd)
        throw GeometryError(ErrorKind::OutsideDomain, "spiral parameter must lie in (0, 1]");
}

}  // namespace

PolarFrameKinematics spiral_frame(double t) {
    require_on_curve(t);
    const double ft = f(t), fd = f_dot(t);
    return {1.0, -t * ft, -t * ft * ft, -(t * fd + 2.0 * ft)};
}

dynamics::UnparamState spiral_state(double t) {
    require_on_curve(t);
    const double ft = f(t), fd = f_dot(t);
    dynamics::UnparamState s;
    s.x = geometry::make_vector({t, std::exp(1.0 / t), 0.0});
    s.v = geometry::make_vector({1.0, -ft, 0.0});
    s.b = geometry::make_vector({-t * ft * ft, -fd - 2.0 * ft / t, 0.0});
    s.t = t;
    return s;
}

Vector spiral_b_dot(double t) {
    require_on_curve(t);
    const double ft = f(t), fd = f_dot(t), fdd = f_ddot(t);
    return geometry::make_vector(
        {-ft * ft - 2.0 * t * ft * fd, -fdd - 2.0 * fd / t + 2.0 * ft / (t * t), 0.0});
}

Vector spiral_xy(double t) {
    const double phi = std::exp(1.0 / t);
    return geometry::make_vector({t * std::cos(phi), t * std::sin(phi)});
}

dynamics::UnparamState spiral_state_polar(double t) {
    const dynamics::UnparamState s = spiral_state(t);
    return {s.x.head(2), s.v.head(2), s.b.head(2), s.t};
}

Vector spiral_b_dot_polar(double t) { return spiral_b_dot(t).head(2); }

double tracking_error(const Vector& x) {
    const double r = x(0);
    if (!(r > 0.0)) return std::numeric_limits<double>::infinity();
    return 2.0 * r * std::abs(std::sin(0.5 * (x(1) - std::exp(1.0 / r))));
}

Matrix m_tensor_polar(double r) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = r;
    return m;
}

Matrix m_tensor_cylindrical(double r) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = m(1, 0) = r;
    return m;
}

Matrix m_tensor_frame() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    return m;
}

}  // namespace confgeo::spiral
