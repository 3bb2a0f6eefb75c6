#pragma once

#include "confgeo/dynamics/equations.hpp"
#include "confgeo/dynamics/state.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace confgeo::dynamics {

struct IntegratorConfig {
    double relative_tolerance = 1e-10;
    double absolute_tolerance = 1e-12;
    double max_step = std::numeric_limits<double>::infinity();
    double min_step = 1e-12;
    long max_steps = 1'000'000;
    bool renormalize_gauge = true;
    // A run is flagged as failing validation if a projection exceeds this.
    double max_projection = 1e-6;

    // Throws GeometryError(InvalidArgument) on inconsistent settings.
    void validate() const;
};

struct TrajectorySample {
    double s = 0.0;
    GeodesicState state;
    double arc_length = 0.0;
    GaugeDefect gauge;        // before projection
    double projection = 0.0;  // size of the gauge correction applied
    double distance_to_mark = std::numeric_limits<double>::quiet_NaN();
};

enum class IntegrationStatus {
    Completed,       // reached the end of the span
    Stopped,         // the stop function crossed zero
    StepUnderflow,   // step size fell below min_step
    LeftDomain,      // the right-hand side raised a geometry error
    MaxStepsExceeded,
};

const char* to_string(IntegrationStatus status);

struct Trajectory {
    std::vector<TrajectorySample> samples;
    IntegrationStatus status = IntegrationStatus::Completed;
    std::string diagnostic;
    long rejected_steps = 0;
    double max_projection = 0.0;
    bool gauge_validation_failed = false;

    bool ok() const {
        return (status == IntegrationStatus::Completed || status == IntegrationStatus::Stopped) &&
               !gauge_validation_failed;
    }
    const TrajectorySample& back() const { return samples.back(); }
};

struct IntegrationOptions {
    SchoutenSource schouten;
    // Integration terminates where this function first changes sign from
    // positive to non-positive; the final step is shortened to land on the
    // root.
    std::function<double(const GeodesicState&)> stop_function;
    // Distance from a marked point, recorded per sample.
    std::function<double(const GeodesicState&)> mark_distance;
};

// Adaptive Dormand-Prince 5(4) integration of the proper-time conformal
// geodesic system on [s_begin, s_end]; s_end < s_begin integrates backwards.
// Failures return the partial trajectory with a diagnostic instead of
// throwing.
Trajectory integrate(const MetricField& field, const GeodesicState& initial, double s_begin,
                     double s_end, const IntegratorConfig& config,
                     const IntegrationOptions& options = {});

}  // namespace confgeo::dynamics
