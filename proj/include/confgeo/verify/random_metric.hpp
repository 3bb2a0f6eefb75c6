#pragma once

#include "confgeo/dynamics/state.hpp"
#include "confgeo/geometry/metric_field.hpp"

#include <cstdint>
#include <random>

namespace confgeo::verify {

// Reproducible uniform draws: the engine is fully specified by the standard
// and the conversion below does not depend on the library's distributions.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct RandomMetricSpec {
    double epsilon = 0.1;  // bound on every polynomial coefficient
    std::uint64_t seed = 0;
};

// Box on which random metrics are required to be positive definite.
inline constexpr double kUnitBox = 1.0;

// Flat metric plus a symmetric perturbation whose entries are polynomials of
// degree <= 3 in (x, y, z) with coefficients uniform in [-epsilon, epsilon].
// Candidates that fail a positive-definiteness scan of [-1, 1]^3 are
// discarded and redrawn. Analytic partials are supplied.
struct RandomMetric {
    geometry::MetricField field;
    int attempts = 0;
    double min_eigenvalue = 0.0;  // over the scan grid
};
RandomMetric random_metric(const RandomMetricSpec& spec);

// A random point in [-0.5, 0.5]^3 with unit velocity and an orthogonal
// acceleration of g-norm in [0.1, 2].
dynamics::GeodesicState random_gauge_state(const geometry::MetricField& field, SeededRng& rng);

}  // namespace confgeo::verify
