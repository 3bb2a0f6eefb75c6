#include "confgeo/geometry/bivector.hpp"
#include "confgeo/geometry/curvature.hpp"
#include "confgeo/geometry/error.hpp"

#include <cmath>

namespace confgeo::geometry {

namespace {

void require_same_base(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw GeometryError(ErrorKind::DimensionMismatch, "bivectors live in different dimensions");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - b).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw GeometryError(ErrorKind::BasePointMismatch, "tensors are attached to different points");
}

}  // namespace

Bivector& Bivector::operator+=(const Bivector& o) {
    require_same_base(base_point, o.base_point);
    components += o.components;
    return *this;
}

Bivector& Bivector::operator-=(const Bivector& o) {
    require_same_base(base_point, o.base_point);
    components -= o.components;
    return *this;
}

Bivector& Bivector::operator*=(double s) {
    components *= s;
    return *this;
}

Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
Bivector operator*(double s, Bivector b) { return b *= s; }

Bivector wedge(const Vector& base_point, const Vector& u, const Vector& w) {
    if (u.size() != w.size() || u.size() != base_point.size())
        throw GeometryError(ErrorKind::DimensionMismatch, "wedge factors differ in dimension");
    return {base_point, u * w.transpose() - w * u.transpose()};
}

double norm(const Matrix& g, const Bivector& b) {
    const Matrix lowered = g * b.components * g.transpose();
    const double sq = 0.5 * lowered.cwiseProduct(b.components).sum();
    return std::sqrt(std::max(sq, 0.0));
}

double max_component(const Bivector& b) { return b.components.cwiseAbs().maxCoeff(); }

Bivector bivector_covariant_derivative(const Tensor3& gamma, const Vector& curve_point,
                                       const Vector& velocity, const Bivector& b,
                                       const Matrix& dB_dt) {
    require_same_base(curve_point, b.base_point);
    const int n = b.dim();
    if (gamma.dim() != n || velocity.size() != n || dB_dt.rows() != n)
        throw GeometryError(ErrorKind::DimensionMismatch, "covariant derivative operands differ in dimension");
    // C^m_s = Gamma^m_{r s} v^r
    Matrix conn = Matrix::Zero(n, n);
    for (int m = 0; m < n; ++m)
        for (int s = 0; s < n; ++s)
            for (int r = 0; r < n; ++r) conn(m, s) += gamma(m, r, s) * velocity(r);
    return {curve_point, dB_dt + conn * b.components + b.components * conn.transpose()};
}

Bivector bivector_covariant_derivative(const MetricField& field, const Vector& curve_point,
                                       const Vector& velocity, const Bivector& b,
                                       const Matrix& dB_dt) {
    return bivector_covariant_derivative(christoffel(field, curve_point), curve_point, velocity, b, dB_dt);
}

}  // namespace confgeo::geometry
