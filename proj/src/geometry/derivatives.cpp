#include "confgeo/geometry/derivatives.hpp"
#include "confgeo/geometry/error.hpp"

#include <cmath>
#include <limits>

namespace confgeo::geometry {

namespace {

// Five-point first-derivative weights for offsets -2, -1, 1, 2 (divide by 12h).
constexpr std::array<int, 4> kOffsets = {-2, -1, 1, 2};
constexpr std::array<double, 4> kFirst = {1.0, -8.0, 8.0, -1.0};

double stencil_step(double relative_step, double coordinate) {
    const double h = relative_step * std::max(1.0, std::abs(coordinate));
    // The step must survive being added to the coordinate with several
    // significant bits intact.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(coordinate));
    if (!(h > floor) || (coordinate + h) - coordinate == 0.0)
        throw GeometryError(ErrorKind::StepUnderflow, "finite-difference step underflows at this point");
    return h;
}

}  // namespace

MetricPartials metric_derivatives(const MetricField& field, const Vector& x,
                                  DerivativeOrder order, const DerivativeOptions& options) {
    field.chart().require_regular(x);
    if (!(options.relative_step > 0.0))
        throw GeometryError(ErrorKind::StepUnderflow, "finite-difference step must be positive");

    if (options.prefer_analytic && field.has_analytic_partials()) {
        MetricPartials p = field.analytic_partials(x);
        if (order == DerivativeOrder::First || p.has_second) return p;
    }

    const int n = field.dimension();
    MetricPartials p{field.evaluate(x), Tensor3(n), Tensor4(n), order == DerivativeOrder::Second};

    std::array<double, kMaxDim> h{};
    for (int a = 0; a < n; ++a) h[a] = stencil_step(options.relative_step, x(a));

    auto shifted = [&](int a, int ka, int b, int kb) {
        Vector y = x;
        y(a) += ka * h[a];
        if (b >= 0) y(b) += kb * h[b];
        return field.evaluate(y);
    };

    // Single-axis samples: reused by first and diagonal second derivatives.
    for (int a = 0; a < n; ++a) {
        std::array<Matrix, 4> samples;
        for (int s = 0; s < 4; ++s) samples[s] = shifted(a, kOffsets[s], -1, 0);

        Matrix d1 = (kFirst[0] * samples[0] + kFirst[1] * samples[1] + kFirst[2] * samples[2] +
                     kFirst[3] * samples[3]) / (12.0 * h[a]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p.dg(i, j, a) = d1(i, j);

        if (order == DerivativeOrder::Second) {
            Matrix d2 = (-samples[0] + 16.0 * samples[1] - 30.0 * p.g + 16.0 * samples[2] - samples[3]) /
                        (12.0 * h[a] * h[a]);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) p.ddg(i, j, a, a) = d2(i, j);
        }
    }

    if (order == DerivativeOrder::Second) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Matrix acc = Matrix::Zero(n, n);
                for (int s = 0; s < 4; ++s)
                    for (int t = 0; t < 4; ++t)
                        acc += kFirst[s] * kFirst[t] * shifted(a, kOffsets[s], b, kOffsets[t]);
                acc /= 144.0 * h[a] * h[b];
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        p.ddg(i, j, a, b) = acc(i, j);
                        p.ddg(i, j, b, a) = acc(i, j);
                    }
            }
    }
    return p;
}

}  // namespace confgeo::geometry
