#include "confgeo/spiral/forcing.hpp"
#include "confgeo/geometry/error.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>

namespace confgeo::spiral {

namespace {

void require_positive(double t) {
    if (!(t > 0.0)) throw GeometryError(ErrorKind::OutsideDomain, "spiral functions need t > 0");
}

constexpr double kLogSpaceBelow = 0.05;

}  // namespace

double log_f(double t) {
    require_positive(t);
    return 1.0 / t - 2.0 * std::log(t);
}

double f(double t) {
    require_positive(t);
    if (t < kLogSpaceBelow) return std::exp(log_f(t));
    return std::exp(1.0 / t) / (t * t);
}

double f_dot(double t) {
    require_positive(t);
    // f' = -f (2t + 1) / t^2
    if (t < kLogSpaceBelow) return -std::exp(log_f(t) + std::log(2.0 * t + 1.0) - 2.0 * std::log(t));
    return -(2.0 / (t * t * t) + 1.0 / (t * t * t * t)) * std::exp(1.0 / t);
}

double f_ddot(double t) {
    require_positive(t);
    // f'' = (6 t^-4 + 6 t^-5 + t^-6) e^{1/t} = f (6 t^2 + 6 t + 1) / t^4
    const double poly = 6.0 * t * t + 6.0 * t + 1.0;
    if (t < kLogSpaceBelow) return std::exp(log_f(t) + std::log(poly) - 4.0 * std::log(t));
    return poly / (t * t * t * t * t * t) * std::exp(1.0 / t);
}

double forcing_pole() {
    // e^{1/t} = t  <=>  1/t - log t = 0, a single sign change on (1, 2).
    static const double root = [] {
        auto g = [](double t) { return 1.0 / t - std::log(t); };
        boost::uintmax_t iterations = 200;
        const auto bracket = boost::math::tools::toms748_solve(
            g, 1.0, 2.0, boost::math::tools::eps_tolerance<double>(52), iterations);
        return 0.5 * (bracket.first + bracket.second);
    }();
    return root;
}

ForcingValue k_exact_checked(double t) {
    const double pole = forcing_pole();
    if (!(t > 0.0) || !(t < pole))
        throw GeometryError(ErrorKind::OutsideDomain, "forcing function defined only on (0, t*)");
    return {forcing_k_formula(t), t > 0.95 * pole};
}

double k_exact(double t) { return k_exact_checked(t).k; }

}  // namespace confgeo::spiral
