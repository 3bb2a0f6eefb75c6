#include "confgeo/dynamics/arc_length.hpp"
#include "confgeo/geometry/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace confgeo::dynamics {

ArcLengthResult arc_length(const MetricField& field, const Curve& curve, double t_begin, double t_end,
                           double tolerance) {
    if (!(tolerance > 0.0)) throw GeometryError(ErrorKind::InvalidArgument, "quadrature tolerance must be positive");
    if (t_begin == t_end) return {};

    auto speed = [&](double t) {
        const CurveSample c = curve(t);
        const geometry::Matrix g = field.evaluate(c.x);
        const double s2 = c.v.dot(g * c.v);
        if (!(s2 > 0.0)) throw GeometryError(ErrorKind::NotImmersed, "curve velocity vanishes");
        return std::sqrt(s2);
    };

    constexpr unsigned kMaxDepth = 30;
    double error = 0.0;
    const double length = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        speed, t_begin, t_end, kMaxDepth, tolerance, &error);
    ArcLengthResult out;
    out.length = length;
    out.error_estimate = error;
    out.lower_bound_only = !std::isfinite(length) || error > tolerance * std::abs(length);
    return out;
}

}  // namespace confgeo::dynamics
