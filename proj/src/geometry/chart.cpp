#include "confgeo/geometry/chart.hpp"
#include "confgeo/geometry/error.hpp"

#include <cmath>
#include <sstream>

namespace confgeo::geometry {

Chart::Chart(std::string name, std::vector<std::string> coordinate_names,
             Predicate singular_locus, Embedding to_cartesian)
    : name_(std::move(name)),
      coordinate_names_(std::move(coordinate_names)),
      singular_(std::move(singular_locus)),
      to_cartesian_(std::move(to_cartesian)) {
    if (coordinate_names_.size() < 2 || coordinate_names_.size() > static_cast<size_t>(kMaxDim))
        throw GeometryError(ErrorKind::InvalidArgument,
                            "chart '" + name_ + "' must have between 2 and 3 coordinates");
}

Chart Chart::cartesian(int dim) {
    static const char* names[] = {"x", "y", "z"};
    if (dim < 2 || dim > kMaxDim)
        throw GeometryError(ErrorKind::InvalidArgument, "cartesian chart dimension must be 2 or 3");
    std::vector<std::string> coords(names, names + dim);
    return Chart("cartesian", std::move(coords), {}, [](const Vector& x) { return x; });
}

Chart Chart::polar() {
    return Chart(
        "polar", {"r", "phi"}, [](const Vector& x) { return x(0) < kAxisCutoff; },
        [](const Vector& x) {
            return make_vector({x(0) * std::cos(x(1)), x(0) * std::sin(x(1))});
        });
}

Chart Chart::cylindrical() {
    return Chart(
        "cylindrical", {"r", "phi", "z"}, [](const Vector& x) { return x(0) < kAxisCutoff; },
        [](const Vector& x) {
            return make_vector({x(0) * std::cos(x(1)), x(0) * std::sin(x(1)), x(2)});
        });
}

Chart Chart::sphere() {
    return Chart("sphere", {"theta", "phi"},
                 [](const Vector& x) { return std::abs(std::sin(x(0))) < kAxisCutoff; });
}

std::optional<Vector> Chart::to_cartesian(const Vector& x) const {
    if (!to_cartesian_) return std::nullopt;
    return to_cartesian_(x);
}

void Chart::require_regular(const Vector& x) const {
    if (x.size() != dimension()) {
        std::ostringstream os;
        os << "point has " << x.size() << " coordinates, chart '" << name_ << "' has "
           << dimension();
        throw GeometryError(ErrorKind::DimensionMismatch, os.str());
    }
    for (int a = 0; a < x.size(); ++a)
        if (!std::isfinite(x(a)))
            throw GeometryError(ErrorKind::InvalidArgument, "point has non-finite coordinates");
    if (is_singular(x)) {
        std::ostringstream os;
        os << "point (" << x.transpose() << ") lies on the singular locus of the '" << name_
           << "' chart";
        throw GeometryError(ErrorKind::ChartSingularity, os.str());
    }
}

}  // namespace confgeo::geometry
