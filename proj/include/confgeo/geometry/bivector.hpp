#pragma once

#include "confgeo/geometry/metric_field.hpp"
#include "confgeo/geometry/types.hpp"

namespace confgeo::geometry {

// Antisymmetric contravariant 2-tensor B^{mu nu} attached to a point.
struct Bivector {
    Vector base_point;
    Matrix components;

    int dim() const { return static_cast<int>(components.rows()); }

    Bivector& operator+=(const Bivector& o);
    Bivector& operator-=(const Bivector& o);
    Bivector& operator*=(double s);
};

Bivector operator+(Bivector a, const Bivector& b);
Bivector operator-(Bivector a, const Bivector& b);
Bivector operator*(double s, Bivector b);

// (u ^ w)^{mu nu} = u^mu w^nu - u^nu w^mu.
Bivector wedge(const Vector& base_point, const Vector& u, const Vector& w);

// |B|^2 = 1/2 g_{ma} g_{nb} B^{mn} B^{ab}; |u ^ w| is the area spanned.
double norm(const Matrix& g, const Bivector& b);
// Largest absolute component, chart dependent but metric free.
double max_component(const Bivector& b);

// (nabla_v B)^{mn} = dB^{mn}/dt + Gamma^m_{rs} v^r B^{sn} + Gamma^n_{rs} v^r B^{ms}.
// `dB_dt` holds coordinate derivatives of the components along the curve.
// Throws GeometryError(BasePointMismatch) if B is not based at curve_point.
Bivector bivector_covariant_derivative(const Tensor3& gamma, const Vector& curve_point,
                                       const Vector& velocity, const Bivector& b,
                                       const Matrix& dB_dt);
Bivector bivector_covariant_derivative(const MetricField& field, const Vector& curve_point,
                                       const Vector& velocity, const Bivector& b,
                                       const Matrix& dB_dt);

}  // namespace confgeo::geometry
