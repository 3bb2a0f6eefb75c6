#pragma once

#include "confgeo/geometry/metric_field.hpp"
#include "confgeo/spiral/forcing.hpp"

namespace confgeo::spiral {

using geometry::Components;
using geometry::Coordinates;
using geometry::kMaxDim;

enum class ExampleChart { Cylindrical, Cartesian };

struct ExampleMetricOptions {
    ExampleChart chart = ExampleChart::Cylindrical;
    geometry::PartialsSource partials = geometry::PartialsSource::Analytic;
    // Multiplies h; 0 gives the flat metric in the same chart.
    double h_scale = 1.0;
};

// ds^2 = (1 + h^2 z^4)(dr^2 + r^2 dphi^2) + 4 h z^2 r dr dphi + dz^2.
template <class S>
Components<S> example_metric_cylindrical(const Coordinates<S>& x, double h_scale) {
    const S& r = x[0];
    const S& z = x[2];
    const S h = h_profile(r, h_scale);
    const S z2 = z * z;
    const S radial = 1.0 + h * h * z2 * z2;
    Components<S> g{};
    g[0 * kMaxDim + 0] = radial;
    g[1 * kMaxDim + 1] = r * r * radial;
    g[0 * kMaxDim + 1] = g[1 * kMaxDim + 0] = 2.0 * h * z2 * r;
    g[2 * kMaxDim + 2] = S(1.0);
    return g;
}

// Radius below which h is identically zero in double precision; the
// Cartesian chart drops the h terms there so h / r^2 is never 0 / 0.
inline constexpr double kCartesianAxisRadius = kFlatBelow;

// Same metric in (x, y, z) with c = 4 h z^2 / r^2:
// g_xx = 1 + h^2 z^4 - c x y, g_yy = 1 + h^2 z^4 + c x y, g_xy = c (x^2 - y^2) / 2.
template <class S>
Components<S> example_metric_cartesian(const Coordinates<S>& p, double h_scale) {
    using std::sqrt;
    const S& x = p[0];
    const S& y = p[1];
    const S& z = p[2];
    Components<S> g{};
    g[0] = g[1 * kMaxDim + 1] = g[2 * kMaxDim + 2] = S(1.0);
    const S r2 = x * x + y * y;
    if (geometry::value_of(r2) < kCartesianAxisRadius * kCartesianAxisRadius) return g;
    const S h = h_profile(sqrt(r2), h_scale);
    const S z2 = z * z;
    const S radial = 1.0 + h * h * z2 * z2;
    const S c = 4.0 * h * z2 / r2;
    g[0] = radial - c * x * y;
    g[1 * kMaxDim + 1] = radial + c * x * y;
    g[0 * kMaxDim + 1] = g[1 * kMaxDim + 0] = 0.5 * c * (x * x - y * y);
    return g;
}

// Throws GeometryError(ChartSingularity) when the cylindrical realization is
// evaluated within kAxisCutoff of the axis.
geometry::MetricField example_metric(const ExampleMetricOptions& options = {});

// Cylindrical components mapped to Cartesian ones, g_cart = J^T g_cyl J with
// J = d(r, phi, z) / d(x, y, z); used for chart-consistency checks.
geometry::Matrix cylindrical_to_cartesian_metric(const geometry::Matrix& g_cyl,
                                                 const geometry::Vector& cartesian_point);

}  // namespace confgeo::spiral
