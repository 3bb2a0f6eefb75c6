#include "confgeo/geometry/bivector.hpp"
#include "confgeo/geometry/curvature.hpp"
#include "confgeo/geometry/derivatives.hpp"
#include "confgeo/geometry/jet.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace confgeo;
using namespace confgeo::geometry;
using confgeo::testing::error_kind;

namespace {

// g = e^{2 sigma} delta with sigma = 0.3 x + 0.2 y^2 - 0.1 x z.
template <class S>
S sigma(const Coordinates<S>& p) {
    return 0.3 * p[0] + 0.2 * p[1] * p[1] - 0.1 * p[0] * p[2];
}

MetricField conformally_flat(PartialsSource src) {
    return make_metric_field(
        Chart::cartesian(3),
        [](const auto& p) {
            using std::exp;
            using S = std::decay_t<decltype(p[0])>;
            Components<S> g{};
            const S e = exp(2.0 * sigma(p));
            g[0] = g[4] = g[8] = e;
            return g;
        },
        src);
}

// Closed form for g = e^{2 sigma} delta in dimension n:
// Ric = -(n-2)(Hess sigma - d sigma d sigma) - (Lap sigma + (n-2)|d sigma|^2) delta.
Matrix conformal_ricci_oracle(const Vector& p) {
    const double x = p(0), y = p(1), z = p(2);
    Eigen::Vector3d ds(0.3 - 0.1 * z, 0.4 * y, -0.1 * x);
    Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
    hess(1, 1) = 0.4;
    hess(0, 2) = hess(2, 0) = -0.1;
    const Eigen::Matrix3d ric = -(hess - ds * ds.transpose()) -
                                (hess.trace() + ds.squaredNorm()) * Eigen::Matrix3d::Identity();
    return ric;
}

MetricField wavy_metric() {
    return make_metric_field(
        Chart::cartesian(3),
        [](const auto& p) {
            using std::cos;
            using std::sin;
            using S = std::decay_t<decltype(p[0])>;
            Components<S> g{};
            g[0] = 1.0 + 0.2 * sin(p[1]) * p[2];
            g[4] = 1.5 + 0.1 * p[0] * p[0];
            g[8] = 1.0 + 0.3 * cos(p[0] + p[1]);
            g[1] = g[3] = 0.1 * p[2] * p[0];
            g[2] = g[6] = 0.05 * sin(p[1] * p[2]);
            g[5] = g[7] = S(0.0) + 0.1 * p[1];
            return g;
        },
        PartialsSource::Analytic);
}

}  // namespace

TEST_CASE("jet carries exact first and second derivatives") {
    const Jet x = Jet::variable(0.7, 0);
    const Jet y = Jet::variable(-0.4, 1);
    const Jet f = exp(sin(x)) * y + sqrt(x) / y - log(x * x + 1.0);
    const double sx = std::sin(0.7), cx = std::cos(0.7), ex = std::exp(sx);
    CHECK(f.d[0] == doctest::Approx(ex * cx * -0.4 + 0.5 / std::sqrt(0.7) / -0.4 - 1.4 / 1.49).epsilon(1e-14));
    CHECK(f.d[1] == doctest::Approx(ex - std::sqrt(0.7) / 0.16).epsilon(1e-14));
    CHECK(f.hess(0, 1) == doctest::Approx(ex * cx - 0.5 / std::sqrt(0.7) / 0.16).epsilon(1e-14));
    CHECK(f.hess(0, 1) == f.hess(1, 0));
    CHECK(f.hess(1, 1) == doctest::Approx(2.0 * std::sqrt(0.7) / -0.064).epsilon(1e-14));
}

TEST_CASE("charts: embeddings and singular loci") {
    const Chart cyl = Chart::cylindrical();
    const Vector c = *cyl.to_cartesian(make_vector({2.0, M_PI / 2, 3.0}));
    CHECK(c(0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c(1) == doctest::Approx(2.0));
    CHECK(c(2) == 3.0);
    CHECK(cyl.is_singular(make_vector({0.5e-6, 0.0, 0.0})));
    CHECK_FALSE(cyl.is_singular(make_vector({2e-6, 0.0, 0.0})));
    CHECK(error_kind([&] { cyl.require_regular(make_vector({0.0, 1.0, 0.0})); }) == ErrorKind::ChartSingularity);
    CHECK(error_kind([&] { cyl.require_regular(make_vector({1.0, 1.0})); }) == ErrorKind::DimensionMismatch);
    CHECK_FALSE(Chart::sphere().to_cartesian(make_vector({1.0, 1.0})).has_value());
    CHECK(Chart::sphere().is_singular(make_vector({M_PI, 0.3})));
}

TEST_CASE("metric evaluation outside the domain is rejected") {
    MetricField f(Chart::cartesian(2), [](const Vector&) { Matrix g = Matrix::Identity(2, 2); return g; },
                  std::nullopt, [](const Vector& x) { return x(0) > 0.0; });
    CHECK(error_kind([&] { f.evaluate(make_vector({-1.0, 0.0})); }) == ErrorKind::OutsideDomain);
    CHECK(f.evaluate(make_vector({1.0, 0.0}))(1, 1) == 1.0);
}

TEST_CASE("flat polar Christoffel symbols") {
    const Vector x = make_vector({2.0, 0.3});
    for (auto src : {PartialsSource::Analytic, PartialsSource::FiniteDifference}) {
        const Tensor3 g = christoffel(flat_polar(src), x);
        CHECK(g(0, 1, 1) == doctest::Approx(-2.0).epsilon(1e-10));
        CHECK(g(1, 0, 1) == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(g(1, 1, 0) == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(std::abs(g(0, 0, 0)) < 1e-12);
    }
}

TEST_CASE("flat metrics have vanishing curvature") {
    const auto cb = curvature(flat_cylindrical(), make_vector({0.7, 1.0, -0.3}));
    CHECK(cb.riemann.max_abs() < 1e-14);
    CHECK(cb.ricci.cwiseAbs().maxCoeff() < 1e-14);
    CHECK(cb.schouten.has_value());
    const auto fd = curvature(flat_cylindrical(PartialsSource::FiniteDifference), make_vector({0.7, 1.0, -0.3}));
    CHECK(fd.riemann_lowered.max_abs() < 1e-7);
}

TEST_CASE("unit sphere: Ricci equals g, Riemann is half g owedge g, no Schouten") {
    const Vector x = make_vector({1.1, 0.4});
    const auto cb = curvature(round_sphere(), x);
    CHECK((cb.ricci - cb.metric).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(cb.scalar == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_FALSE(cb.schouten.has_value());
    const Tensor4 kn = kulkarni_nomizu(cb.metric, cb.metric);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    CHECK(cb.riemann_lowered(a, b, c, d) == doctest::Approx(0.5 * kn(a, b, c, d)).epsilon(1e-12));
    CHECK_THROWS_AS(schouten_from_ricci(cb.ricci, cb.scalar, cb.metric), GeometryError);
}

TEST_CASE("finite-difference curvature converges at fourth order on the sphere") {
    const Vector x = make_vector({1.1, 0.4});
    const MetricField fd = round_sphere(PartialsSource::FiniteDifference);
    const auto err = [&](double step) {
        DerivativeOptions o;
        o.relative_step = step;
        return (curvature(fd, x, o).ricci - curvature(round_sphere(), x).ricci).cwiseAbs().maxCoeff();
    };
    const double coarse = err(4e-2), fine = err(2e-2);
    CHECK(coarse > 1e-9);
    CHECK(coarse / fine >= 8.0);
}

TEST_CASE("conformally flat metric matches the closed-form Ricci tensor") {
    const Vector p = make_vector({0.3, -0.5, 0.8});
    const Matrix oracle = conformal_ricci_oracle(p);
    const auto an = curvature(conformally_flat(PartialsSource::Analytic), p);
    CHECK((an.ricci - oracle).cwiseAbs().maxCoeff() < 1e-12);
    const auto fd = curvature(conformally_flat(PartialsSource::FiniteDifference), p);
    CHECK((fd.ricci - oracle).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("Riemann tensor symmetries on a generic metric") {
    const auto cb = curvature(wavy_metric(), make_vector({0.2, 0.6, -0.4}));
    const Tensor4& R = cb.riemann_lowered;
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    worst = std::max(worst, std::abs(R(a, b, c, d) + R(b, a, c, d)));
                    worst = std::max(worst, std::abs(R(a, b, c, d) + R(a, b, d, c)));
                    worst = std::max(worst, std::abs(R(a, b, c, d) - R(c, d, a, b)));
                    worst = std::max(worst, std::abs(R(a, b, c, d) + R(a, c, d, b) + R(a, d, b, c)));
                }
    CHECK(worst < 1e-13);
    CHECK((cb.ricci - cb.ricci.transpose()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(R.max_abs() > 1e-3);
}

TEST_CASE("analytic and finite-difference partials agree") {
    const MetricField f = wavy_metric();
    const Vector x = make_vector({0.2, 0.6, -0.4});
    const auto an = metric_derivatives(f, x, DerivativeOrder::Second);
    const auto fd = metric_derivatives(f.without_analytic_partials(), x, DerivativeOrder::Second);
    CHECK(max_abs_difference(an.dg, fd.dg) < 1e-10);
    CHECK(max_abs_difference(an.ddg, fd.ddg) < 1e-7);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(fd.ddg(0, 1, a, b) == fd.ddg(0, 1, b, a));
}

TEST_CASE("derivative failures") {
    const MetricField fd = flat_cylindrical(PartialsSource::FiniteDifference);
    DerivativeOptions tiny;
    tiny.relative_step = 1e-18;
    CHECK(error_kind([&] { metric_derivatives(fd, make_vector({1.0, 0.0, 0.0}), DerivativeOrder::First, tiny); }) ==
          ErrorKind::StepUnderflow);
    CHECK(error_kind([&] { metric_derivatives(fd, make_vector({0.0, 0.0, 0.0}), DerivativeOrder::First); }) ==
          ErrorKind::ChartSingularity);
    Matrix degenerate = Matrix::Zero(2, 2);
    degenerate(0, 0) = 1.0;
    CHECK(error_kind([&] { inverse_metric(degenerate); }) == ErrorKind::DegenerateMetric);
}

TEST_CASE("Kulkarni-Nomizu product symmetries") {
    Matrix a(3, 3), b(3, 3);
    a << 1, 2, 3, 2, 5, 6, 3, 6, 9;
    b << 0.5, -1, 0, -1, 2, 0.3, 0, 0.3, -4;
    const Tensor4 k = kulkarni_nomizu(a, b);
    const Tensor4 k2 = kulkarni_nomizu(b, a);
    CHECK(max_abs_difference(k, k2) < 1e-14);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) {
                    CHECK(std::abs(k(m, n, p, q) + k(n, m, p, q)) < 1e-14);
                    CHECK(std::abs(k(m, n, p, q) - k(p, q, m, n)) < 1e-14);
                }
}

TEST_CASE("bivectors: wedge, norm and base points") {
    const Vector p = make_vector({0.0, 0.0, 0.0});
    const Bivector w = wedge(p, make_vector({1.0, 0.0, 0.0}), make_vector({0.0, 2.0, 0.0}));
    CHECK(w.components(0, 1) == 2.0);
    CHECK(w.components(1, 0) == -2.0);
    CHECK(norm(Matrix::Identity(3, 3), w) == doctest::Approx(2.0));
    const Bivector other = wedge(make_vector({1.0, 0.0, 0.0}), make_vector({1.0, 0.0, 0.0}), make_vector({0.0, 1.0, 0.0}));
    CHECK(error_kind([&] { (void)(w - other); }) == ErrorKind::BasePointMismatch);
    CHECK(max_component(w - w) == 0.0);
}

TEST_CASE("the polar area element is parallel along any curve") {
    // mu = e_r ^ e_phi has components mu^{r phi} = 1/r.
    const MetricField plane = flat_polar();
    for (double t : {0.3, 0.7, 1.4}) {
        const Vector x = make_vector({1.0 + t * t, std::sin(3.0 * t)});
        const Vector v = make_vector({2.0 * t, 3.0 * std::cos(3.0 * t)});
        const double r = x(0);
        Bivector mu{x, Matrix::Zero(2, 2)};
        mu.components(0, 1) = 1.0 / r;
        mu.components(1, 0) = -1.0 / r;
        Matrix dmu = Matrix::Zero(2, 2);
        dmu(0, 1) = -v(0) / (r * r);
        dmu(1, 0) = v(0) / (r * r);
        CHECK(max_component(bivector_covariant_derivative(plane, x, v, mu, dmu)) < 1e-15);
    }
}
