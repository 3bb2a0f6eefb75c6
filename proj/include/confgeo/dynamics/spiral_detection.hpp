#pragma once

#include "confgeo/dynamics/integrator.hpp"

#include <optional>
#include <vector>

namespace confgeo::dynamics {

struct ContainmentResult {
    double radius = 0.0;
    // First proper time after which every later sample lies strictly inside
    // the ball; nullopt when the trajectory ends outside it.
    std::optional<double> entry_time;
};

struct SpiralReport {
    std::vector<ContainmentResult> containment;
    bool arc_length_growing = false;
    // True iff every tested ball eventually contains the trajectory and the
    // arc length is still increasing at the end. A finite sample can only
    // ever be consistent with a spiral, never prove one.
    bool spiral_consistent = false;
};

// Distances are Euclidean after mapping samples through the chart's
// Cartesian embedding; the candidate is given in Cartesian coordinates.
// Throws GeometryError(InvalidArgument) for charts without an embedding.
SpiralReport detect_spiral(const Trajectory& traj, const geometry::Chart& chart,
                           const Vector& candidate_cartesian, const std::vector<double>& radii);

// Same analysis on precomputed distances, one per sample.
SpiralReport detect_spiral(const Trajectory& traj, const std::vector<double>& distances,
                           const std::vector<double>& radii);

const char* verdict(const SpiralReport& report);

}  // namespace confgeo::dynamics
