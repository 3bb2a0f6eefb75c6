#pragma once

#include "confgeo/geometry/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace confgeo::geometry {

// A coordinate chart. The singular locus marks points where the chart fails
// to be a diffeomorphism (the axis of cylindrical coordinates, the poles of
// the sphere); derivative-taking operations refuse to work there.
class Chart {
public:
    using Predicate = std::function<bool(const Vector&)>;
    using Embedding = std::function<Vector(const Vector&)>;

    Chart(std::string name, std::vector<std::string> coordinate_names,
          Predicate singular_locus = {}, Embedding to_cartesian = {});

    static Chart cartesian(int dim);
    // (r, phi); singular for r < kAxisCutoff.
    static Chart polar();
    // (r, phi, z); singular for r < kAxisCutoff.
    static Chart cylindrical();
    // (theta, phi) on the unit sphere; singular where sin(theta) < kAxisCutoff.
    static Chart sphere();

    static constexpr double kAxisCutoff = 1e-6;

    const std::string& name() const { return name_; }
    int dimension() const { return static_cast<int>(coordinate_names_.size()); }
    const std::vector<std::string>& coordinate_names() const { return coordinate_names_; }

    bool is_singular(const Vector& x) const { return singular_ && singular_(x); }

    // Position in flat Cartesian space of the same dimension for charts that
    // are reparametrizations of Euclidean space; nullopt otherwise.
    std::optional<Vector> to_cartesian(const Vector& x) const;

    // Throws GeometryError(ChartSingularity) on the singular locus and
    // GeometryError(DimensionMismatch) for a wrong-sized point.
    void require_regular(const Vector& x) const;

private:
    std::string name_;
    std::vector<std::string> coordinate_names_;
    Predicate singular_;
    Embedding to_cartesian_;
};

}  // namespace confgeo::geometry
