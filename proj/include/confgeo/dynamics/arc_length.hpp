#pragma once

#include "confgeo/geometry/metric_field.hpp"

#include <functional>

namespace confgeo::dynamics {

using geometry::MetricField;
using geometry::Vector;

struct CurveSample {
    Vector x;
    Vector v;  // dx/dt
};
using Curve = std::function<CurveSample(double)>;

struct ArcLengthResult {
    double length = 0.0;
    double error_estimate = 0.0;
    // Set when the quadrature did not reach the tolerance; `length` is then
    // the partial sum, a lower bound for a positive integrand.
    bool lower_bound_only = false;
};

// Length of t -> x(t) on [t_begin, t_end] in the metric `field`, by adaptive
// Gauss-Kronrod quadrature of |v|_g to relative tolerance `tolerance`.
ArcLengthResult arc_length(const MetricField& field, const Curve& curve, double t_begin, double t_end,
                           double tolerance = 1e-10);

}  // namespace confgeo::dynamics
