#pragma once

#include "confgeo/dynamics/integrator.hpp"

namespace confgeo::spiral {

// Proper time allowed for the run from radius t_start down to t_end: twice
// the length of the analytic arc between them, capped to stay finite.
double proper_time_budget(double t_start, double t_end);

// Integrates the proper-time system backwards from the spiral's data at
// t_start until the radius reaches t_end. Each sample records its tracking
// error as distance_to_mark. Throws GeometryError(InvalidArgument) unless
// 0 < t_end <= t_start <= 1; t_end == t_start gives a single sample.
dynamics::Trajectory integrate_spiral(const geometry::MetricField& field, double t_start, double t_end,
                                      const dynamics::IntegratorConfig& config);

}  // namespace confgeo::spiral
