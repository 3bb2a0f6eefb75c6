#pragma once

#include "confgeo/dynamics/integrator.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace confgeo::cli {

struct TraceRequest {
    enum class Mode { Spiral, Circle };
    Mode mode = Mode::Spiral;
    double t0 = 0.8;
    double t_end = 0.3;
    double h_scale = 1.0;  // spiral mode; 0 is flat space
    double radius = 1.0;   // circle mode
    dynamics::IntegratorConfig integrator{};
};

struct TraceRow {
    double s, t_param, x, y, z, r, phi, arc_length, track_err, z_err;
};

struct TraceResult {
    dynamics::Trajectory trajectory;
    std::vector<TraceRow> rows;
};

// Spiral mode starts on the analytic spiral at t0 in the example metric and
// stops at radius t_end; t_param is the radius and track_err the distance to
// the spiral at that radius. Circle mode runs one period of the circle of
// the given radius in flat space; t_param is the angle s / R.
TraceResult trace(const TraceRequest& request);

inline constexpr const char* kTraceHeader = "s,t_param,x,y,z,r,phi,arc_length,track_err,z_err";

// Header line, then one row per sample with 17 significant digits.
void write_csv(std::ostream& os, const std::vector<TraceRow>& rows);
// gnuplot script plotting (x, y) and r against arc length from `csv_name`.
std::string gnuplot_script(const std::string& csv_name, const std::string& png_name);

}  // namespace confgeo::cli
