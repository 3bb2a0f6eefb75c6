#pragma once

#include "confgeo/geometry/metric_field.hpp"

namespace confgeo::geometry {

struct DerivativeOptions {
    // Relative step: the stencil spacing along coordinate a is
    // relative_step * max(1, |x_a|).
    double relative_step = 1e-4;
    // Use analytic partials when the field supplies them.
    bool prefer_analytic = true;
};

enum class DerivativeOrder { First = 1, Second = 2 };

// Metric partials at a regular point. Falls back to fourth-order central
// differences (five-point first derivatives, five-point diagonal and 4x4
// tensor-product mixed second derivatives) when no analytic partials exist.
// Second partials are exactly symmetric in the derivative indices.
MetricPartials metric_derivatives(const MetricField& field, const Vector& x,
                                  DerivativeOrder order,
                                  const DerivativeOptions& options = {});

}  // namespace confgeo::geometry
