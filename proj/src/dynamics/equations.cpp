#include "confgeo/dynamics/equations.hpp"
#include "confgeo/geometry/error.hpp"

#include <cmath>

namespace confgeo::dynamics {

using geometry::CurvatureBundle;
using geometry::Tensor3;

namespace {

// Connection, metric and Schouten-like tensor at one point.
struct PointGeometry {
    Matrix g;
    Matrix g_inv;
    Tensor3 gamma;
    Matrix schouten;
};

PointGeometry point_geometry(const MetricField& field, const Vector& x, const SchoutenSource& schouten) {
    if (schouten) {
        const geometry::MetricPartials p =
            geometry::metric_derivatives(field, x, geometry::DerivativeOrder::First);
        Matrix gi = geometry::inverse_metric(p.g);
        Tensor3 gamma = geometry::christoffel_from_partials(p, gi);
        return {p.g, std::move(gi), std::move(gamma), schouten(x)};
    }
    CurvatureBundle cb = geometry::curvature(field, x);
    if (!cb.schouten)
        throw GeometryError(ErrorKind::DimensionMismatch,
                            "Schouten tensor undefined in dimension 2; supply a SchoutenSource");
    return {cb.metric, cb.inverse_metric, cb.christoffel, *cb.schouten};
}

double dot(const Matrix& g, const Vector& a, const Vector& b) { return a.dot(g * b); }

}  // namespace

SchoutenSource schouten_of(const MetricField& field, const geometry::DerivativeOptions& options) {
    return [field, options](const Vector& x) {
        CurvatureBundle cb = geometry::curvature(field, x, options);
        if (!cb.schouten)
            throw GeometryError(ErrorKind::DimensionMismatch, "Schouten tensor undefined in dimension 2");
        return *cb.schouten;
    };
}

StateDerivative propertime_rhs(const MetricField& field, const GeodesicState& state,
                               const SchoutenSource& schouten) {
    const PointGeometry pg = point_geometry(field, state.x, schouten);
    const Vector lu = geometry::hat(pg.g_inv, pg.schouten, state.u);
    const double c = -dot(pg.g, state.a, state.a) - dot(pg.g, state.u, lu);
    const Vector nabla_a = c * state.u + lu;

    StateDerivative d;
    d.dx = state.u;
    d.du = state.a - geometry::contract_christoffel(pg.gamma, state.u, state.u);
    d.da = nabla_a - geometry::contract_christoffel(pg.gamma, state.u, state.a);
    return d;
}

Bivector wedge_form_residual(const MetricField& field, const GeodesicState& state, const Vector& da,
                             const SchoutenSource& schouten) {
    const PointGeometry pg = point_geometry(field, state.x, schouten);
    const Vector du = state.a - geometry::contract_christoffel(pg.gamma, state.u, state.u);
    const Bivector b = geometry::wedge(state.x, state.u, state.a);
    const Matrix db = du * state.a.transpose() - state.a * du.transpose() +
                      state.u * da.transpose() - da * state.u.transpose();
    const Bivector transported = geometry::bivector_covariant_derivative(pg.gamma, state.x, state.u, b, db);
    const Vector lu = geometry::hat(pg.g_inv, pg.schouten, state.u);
    return transported - geometry::wedge(state.x, state.u, lu);
}

UnparamTerms unparam_terms(const MetricField& field, const UnparamState& state, const Vector& db,
                           const SchoutenSource& schouten) {
    const PointGeometry pg = point_geometry(field, state.x, schouten);
    const double speed2 = dot(pg.g, state.v, state.v);
    if (!(speed2 > 0.0) || !std::isfinite(speed2))
        throw GeometryError(ErrorKind::NotImmersed, "velocity vanishes; curve is not immersed");
    const double speed = std::sqrt(speed2);
    const double speed3 = speed2 * speed;

    // d|v|/dt = g(v, b) / |v| by metric compatibility.
    const double vb = dot(pg.g, state.v, state.b);
    const Vector dv = state.b - geometry::contract_christoffel(pg.gamma, state.v, state.v);

    const Bivector vb_wedge = geometry::wedge(state.x, state.v, state.b);
    const Bivector normalized = (1.0 / speed3) * vb_wedge;
    const Matrix d_wedge = dv * state.b.transpose() - state.b * dv.transpose() +
                           state.v * db.transpose() - db * state.v.transpose();
    const Matrix d_normalized = d_wedge / speed3 - (3.0 * vb / (speed3 * speed2)) * vb_wedge.components;

    UnparamTerms terms{
        geometry::bivector_covariant_derivative(pg.gamma, state.x, state.v, normalized, d_normalized),
        (1.0 / speed) * geometry::wedge(state.x, state.v, geometry::hat(pg.g_inv, pg.schouten, state.v))};
    return terms;
}

Bivector unparam_residual(const MetricField& field, const UnparamState& state, const Vector& db,
                          const SchoutenSource& schouten) {
    UnparamTerms t = unparam_terms(field, state, db, schouten);
    return t.transport - t.forcing;
}

GeodesicState from_unparametrized(const MetricField& field, const UnparamState& state) {
    field.chart().require_regular(state.x);
    const Matrix g = field.evaluate(state.x);
    const double speed2 = dot(g, state.v, state.v);
    if (!(speed2 > 0.0) || !std::isfinite(speed2))
        throw GeometryError(ErrorKind::NotImmersed, "velocity vanishes; curve is not immersed");
    const double speed = std::sqrt(speed2);
    GeodesicState out;
    out.x = state.x;
    out.u = state.v / speed;
    out.a = (state.b - (dot(g, state.v, state.b) / speed2) * state.v) / speed2;
    out.s = 0.0;
    return out;
}

GaugeDefect gauge_defect(const Matrix& g, const GeodesicState& state) {
    return {std::abs(dot(g, state.u, state.u) - 1.0), std::abs(dot(g, state.u, state.a))};
}

GaugeDefect gauge_defect(const MetricField& field, const GeodesicState& state) {
    return gauge_defect(field.evaluate(state.x), state);
}

double project_to_gauge(const Matrix& g, GeodesicState& state) {
    const double speed = std::sqrt(dot(g, state.u, state.u));
    const Vector u = state.u / speed;
    const Vector a = state.a - dot(g, u, state.a) * u;
    const Vector du = u - state.u;
    const Vector da = a - state.a;
    state.u = u;
    state.a = a;
    return std::max(std::sqrt(std::max(dot(g, du, du), 0.0)), std::sqrt(std::max(dot(g, da, da), 0.0)));
}

}  // namespace confgeo::dynamics
