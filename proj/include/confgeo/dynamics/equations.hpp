#pragma once

#include "confgeo/dynamics/state.hpp"
#include "confgeo/geometry/bivector.hpp"
#include "confgeo/geometry/curvature.hpp"

#include <functional>

namespace confgeo::dynamics {

using geometry::Bivector;
using geometry::MetricField;

// Supplies the covariant 2-tensor that plays the role of the Schouten tensor
// at a point. The default reads it off the curvature of the metric; tests and
// the planar forcing identity substitute their own.
using SchoutenSource = std::function<Matrix(const Vector&)>;

SchoutenSource schouten_of(const MetricField& field,
                           const geometry::DerivativeOptions& options = {});

// Proper-time conformal geodesic equation
//   nabla_u a = u (-|a|^2 - g(u, L-hat u)) + L-hat u
// in coordinates: dx = u, du = a - Gamma(u, u), da = nabla_u a - Gamma(u, a).
StateDerivative propertime_rhs(const MetricField& field, const GeodesicState& state,
                               const SchoutenSource& schouten = {});

// nabla_u (u ^ a) - u ^ L-hat u evaluated with the coordinate derivative
// `da` supplied by the caller. Vanishes exactly when (state, da) solves the
// proper-time equation.
Bivector wedge_form_residual(const MetricField& field, const GeodesicState& state,
                             const Vector& da, const SchoutenSource& schouten = {});

// nabla_v (v ^ b / |v|^3) - (v ^ L-hat v) / |v| with `db` the coordinate
// derivative of b along the parameter. Invariant under reparametrization.
// Throws GeometryError(NotImmersed) when |v| = 0.
Bivector unparam_residual(const MetricField& field, const UnparamState& state,
                          const Vector& db, const SchoutenSource& schouten = {});

// Pieces of the unparametrized residual, for reporting relative sizes.
struct UnparamTerms {
    Bivector transport;  // nabla_v (v ^ b / |v|^3)
    Bivector forcing;    // (v ^ L-hat v) / |v|
};
UnparamTerms unparam_terms(const MetricField& field, const UnparamState& state,
                           const Vector& db, const SchoutenSource& schouten = {});

// Proper-time data of a curve given in any parametrization:
// u = v / |v|, a = (b - g(v, b) v / |v|^2) / |v|^2.
GeodesicState from_unparametrized(const MetricField& field, const UnparamState& state);

struct GaugeDefect {
    double norm = 0.0;        // | |u|^2 - 1 |
    double orthogonal = 0.0;  // |g(u, a)|
};
GaugeDefect gauge_defect(const Matrix& g, const GeodesicState& state);
GaugeDefect gauge_defect(const MetricField& field, const GeodesicState& state);

// Rescales u to unit length and removes the u-component of a. Returns the
// size of the correction (max of the two component changes in the g-norm).
double project_to_gauge(const Matrix& g, GeodesicState& state);

}  // namespace confgeo::dynamics
