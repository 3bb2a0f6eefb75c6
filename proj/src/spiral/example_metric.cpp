#include "confgeo/spiral/example_metric.hpp"
#include "confgeo/geometry/error.hpp"

#include <cmath>

namespace confgeo::spiral {

using geometry::Chart;
using geometry::Matrix;
using geometry::MetricField;
using geometry::Vector;

geometry::MetricField example_metric(const ExampleMetricOptions& options) {
    const double scale = options.h_scale;
    if (options.chart == ExampleChart::Cartesian) {
        auto formula = [scale](const auto& x) { return example_metric_cartesian(x, scale); };
        return geometry::make_metric_field(Chart::cartesian(3), formula, options.partials);
    }
    auto formula = [scale](const auto& x) {
        if (geometry::value_of(x[0]) < Chart::kAxisCutoff)
            throw GeometryError(ErrorKind::ChartSingularity,
                                "cylindrical chart is singular on the axis; use the Cartesian chart");
        return example_metric_cylindrical(x, scale);
    };
    return geometry::make_metric_field(Chart::cylindrical(), formula, options.partials);
}

Matrix cylindrical_to_cartesian_metric(const Matrix& g_cyl, const Vector& p) {
    const double x = p(0), y = p(1);
    const double r2 = x * x + y * y;
    const double r = std::sqrt(r2);
    Matrix jac = Matrix::Zero(3, 3);
    jac(0, 0) = x / r;
    jac(0, 1) = y / r;
    jac(1, 0) = -y / r2;
    jac(1, 1) = x / r2;
    jac(2, 2) = 1.0;
    return jac.transpose() * g_cyl * jac;
}

}  // namespace confgeo::spiral
