#include "confgeo/cli/trace.hpp"

#include "confgeo/spiral/curve.hpp"
#include "confgeo/spiral/example_metric.hpp"
#include "confgeo/spiral/trajectory.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace confgeo::cli {

using geometry::make_vector;

TraceResult trace(const TraceRequest& rq) {
    TraceResult out;
    if (rq.mode == TraceRequest::Mode::Spiral) {
        spiral::ExampleMetricOptions mo;
        mo.h_scale = rq.h_scale;
        out.trajectory = spiral::integrate_spiral(spiral::example_metric(mo), rq.t0, rq.t_end, rq.integrator);
        for (const auto& smp : out.trajectory.samples) {
            const auto& x = smp.state.x;
            const double r = x(0), phi = x(1), z = x(2);
            out.rows.push_back({smp.s, r, r * std::cos(phi), r * std::sin(phi), z, r, phi, smp.arc_length,
                                smp.distance_to_mark, std::abs(z)});
        }
        return out;
    }

    const double R = rq.radius;
    dynamics::GeodesicState st;
    st.x = make_vector({R, 0.0, 0.0});
    st.u = make_vector({0.0, 1.0, 0.0});
    st.a = make_vector({-1.0 / R, 0.0, 0.0});
    dynamics::IntegrationOptions io;
    io.mark_distance = [R](const dynamics::GeodesicState& s) {
        const double angle = s.s / R;
        return (s.x - make_vector({R * std::cos(angle), R * std::sin(angle), 0.0})).norm();
    };
    out.trajectory = dynamics::integrate(geometry::flat_cartesian(3), st, 0.0, 2.0 * std::numbers::pi * R,
                                         rq.integrator, io);
    for (const auto& smp : out.trajectory.samples) {
        const auto& x = smp.state.x;
        out.rows.push_back({smp.s, smp.s / R, x(0), x(1), x(2), std::hypot(x(0), x(1)), std::atan2(x(1), x(0)),
                            smp.arc_length, smp.distance_to_mark, std::abs(x(2))});
    }
    return out;
}

void write_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
    os << kTraceHeader << '\n';
    char buf[512];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.s,
                      r.t_param, r.x, r.y, r.z, r.r, r.phi, r.arc_length, r.track_err, r.z_err);
        os << buf;
    }
}

std::string gnuplot_script(const std::string& csv_name, const std::string& png_name) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set terminal pngcairo size 1200,600\n";
    s += "set output '" + png_name + "'\n";
    s += "set multiplot layout 1,2\n";
    s += "set size ratio -1\n";
    s += "set xlabel 'x'\nset ylabel 'y'\n";
    s += "plot '" + csv_name + "' every ::1 using 3:4 with lines title 'trajectory'\n";
    s += "set size noratio\n";
    s += "set xlabel 'arc length'\nset ylabel 'r'\n";
    s += "plot '" + csv_name + "' every ::1 using 8:6 with lines title 'r'\n";
    s += "unset multiplot\n";
    return s;
}

}  // namespace confgeo::cli
