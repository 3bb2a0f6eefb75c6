#include "confgeo/dynamics/spiral_detection.hpp"
#include "confgeo/geometry/error.hpp"

namespace confgeo::dynamics {

SpiralReport detect_spiral(const Trajectory& traj, const std::vector<double>& distances,
                           const std::vector<double>& radii) {
    if (distances.size() != traj.samples.size())
        throw GeometryError(ErrorKind::DimensionMismatch, "one distance per sample required");
    SpiralReport report;
    for (double rho : radii) {
        ContainmentResult c{rho, std::nullopt};
        // Walk backwards to the last sample outside the ball.
        std::size_t i = distances.size();
        while (i > 0 && distances[i - 1] < rho) --i;
        if (i < distances.size()) c.entry_time = traj.samples[i].s;
        report.containment.push_back(c);
    }
    const std::size_t n = traj.samples.size();
    report.arc_length_growing = n >= 2 && traj.samples[n - 1].arc_length > traj.samples[n - 2].arc_length;
    bool all = !report.containment.empty();
    for (const auto& c : report.containment) all = all && c.entry_time.has_value();
    report.spiral_consistent = all && report.arc_length_growing;
    return report;
}

SpiralReport detect_spiral(const Trajectory& traj, const geometry::Chart& chart,
                           const Vector& candidate_cartesian, const std::vector<double>& radii) {
    std::vector<double> distances;
    distances.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        const auto p = chart.to_cartesian(s.state.x);
        if (!p) throw GeometryError(ErrorKind::InvalidArgument, "chart has no Cartesian embedding");
        if (p->size() != candidate_cartesian.size())
            throw GeometryError(ErrorKind::DimensionMismatch, "candidate point has wrong dimension");
        distances.push_back((*p - candidate_cartesian).norm());
    }
    return detect_spiral(traj, distances, radii);
}

const char* verdict(const SpiralReport& report) {
    return report.spiral_consistent ? "spiral-consistent" : "not-spiral-consistent";
}

}  // namespace confgeo::dynamics
