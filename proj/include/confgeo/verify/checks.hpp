#pragma once

#include "confgeo/dynamics/integrator.hpp"
#include "confgeo/verify/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace confgeo::verify {

// Proper-time equation versus its wedge form on random metrics.
struct WedgeFormOptions {
    int trials = 100;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    double epsilon = 0.1;
    // Added to the computed da along a unit vector orthogonal to u; a nonzero
    // value must make the check fail.
    double perturbation = 0.0;
};
CheckReport check_wedge_form(const WedgeFormOptions& options = {});

// Reparametrization invariance of the unparametrized equation.
struct ReparametrizationOptions {
    int curves = 50;
    int reparametrizations = 5;
    std::uint64_t seed = 7;
    double tolerance = 1e-8;
    double identity_tolerance = 1e-12;
    double epsilon = 0.1;
    // Drops the 3 s' s'' a term from the reparametrized acceleration jet.
    bool break_chain_rule = false;
};
CheckReport check_reparametrization(const ReparametrizationOptions& options = {});

// The spiral in the flat plane driven by L = k(r) M.
struct PlanarSpiralOptions {
    int grid_points = 50;
    double t_min = 0.3;
    double t_max = 1.0;
    double tolerance = 1e-9;
    int max_flatness_order = 8;
    // |k(t)| / t^n must decrease strictly along this sequence, for every
    // n = 0..max_flatness_order.
    std::vector<double> flatness_points{0.2, 0.15, 0.1, 0.07, 0.05};
    std::vector<double> arc_length_starts{0.5, 0.2, 0.1};
    // Multiplies the forcing; anything but 1 must fail.
    double k_scale = 1.0;
};
CheckReport check_planar_spiral(const PlanarSpiralOptions& options = {});

// Curvature of the example metric on the plane z = 0, from finite
// differences of the metric alone.
struct ExampleCurvatureOptions {
    std::vector<double> radii{0.2, 0.35, 0.5, 0.75, 1.0};
    double phi = 0.7;
    double tolerance = 1e-6;
    double exact_tolerance = 1e-12;
    // Scale of h in the metric under test; the expected curvature always
    // uses the true profile.
    double metric_h_scale = 1.0;
};
CheckReport check_example_curvature(const ExampleCurvatureOptions& options = {});

// Integration of the example metric from spiral data.
struct SpiralIntegrationOptions {
    double t_start = 0.8;
    double t_end = 0.3;
    double tracking_tolerance = 1e-4;
    double z_tolerance = 1e-8;
    double identity_tolerance = 1e-10;
    std::vector<double> radii{0.8, 0.6, 0.4};
    double min_arc_over_chord = 10.0;
    dynamics::IntegratorConfig integrator{};
    double h_scale = 1.0;
    // Repeat at half the tolerance and require the tracking error to halve.
    bool convergence_study = false;
    double convergence_ratio_min = 1.7;
    double convergence_ratio_max = 2.3;
};
CheckReport check_spiral_integration(const SpiralIntegrationOptions& options = {});

// Selection names accepted by run_checks: "all", "lemma1", "lemma2",
// "lemma3", "lemma5", "proposition".
const std::vector<std::string>& check_names();
struct CheckOverrides {
    std::uint64_t seed = 0;  // randomized checks only; 0 keeps their defaults
    // Replaces the headline tolerance of each selected check.
    std::optional<double> tolerance;
};
bool is_check_name(const std::string& selection);
// Runs one named check (or all five with "all") with default options.
// Throws GeometryError(InvalidArgument) for an unknown name.
std::vector<CheckReport> run_checks(const std::string& selection, const CheckOverrides& overrides = {});

// Circles of radius R in flat 3-space: closure after one period and radial
// deviation.
struct CircleOptions {
    std::vector<double> radii{0.1, 1.0, 10.0};
    double tolerance = 1e-6;
    dynamics::IntegratorConfig integrator{};
};
CheckReport check_flat_circles(const CircleOptions& options = {});

// Cylindrical and Cartesian realizations of the example metric agree, and
// the metric is positive definite, on a sample of the given box.
struct ChartConsistencyOptions {
    int points = 1000;
    std::uint64_t seed = 11;
    double box = 2.0;     // samples are drawn from [-box, box]^3
    double r_min = 1e-3;  // agreement is checked only off the axis
    double tolerance = 1e-12;
    double min_eigenvalue = 0.5;
};
CheckReport check_chart_consistency(const ChartConsistencyOptions& options = {});

}  // namespace confgeo::verify
