#include "confgeo/spiral/trajectory.hpp"

#include "confgeo/dynamics/arc_length.hpp"
#include "confgeo/geometry/error.hpp"
#include "confgeo/spiral/curve.hpp"

#include <cmath>

namespace confgeo::spiral {

double proper_time_budget(double t_start, double t_end) {
    if (t_start == t_end) return 0.0;
    const geometry::MetricField plane = geometry::flat_cylindrical();
    const dynamics::Curve curve = [](double t) {
        const dynamics::UnparamState s = spiral_state(t);
        return dynamics::CurveSample{s.x, s.v};
    };
    const double length = dynamics::arc_length(plane, curve, t_end, t_start).length;
    constexpr double cap = 1e300;
    return std::isfinite(length) ? std::min(2.0 * length, cap) : cap;
}

dynamics::Trajectory integrate_spiral(const geometry::MetricField& field, double t_start, double t_end,
                                      const dynamics::IntegratorConfig& config) {
    if (!(t_end > 0.0) || !(t_end <= t_start) || !(t_start <= kCurveEnd))
        throw GeometryError(ErrorKind::InvalidArgument, "need 0 < t_end <= t_start <= 1");
    const dynamics::GeodesicState init = dynamics::from_unparametrized(field, spiral_state(t_start));
    dynamics::IntegrationOptions io;
    io.stop_function = [t_end](const dynamics::GeodesicState& s) { return s.x(0) - t_end; };
    io.mark_distance = [](const dynamics::GeodesicState& s) { return tracking_error(s.x); };
    return dynamics::integrate(field, init, 0.0, -proper_time_budget(t_start, t_end), config, io);
}

}  // namespace confgeo::spiral
