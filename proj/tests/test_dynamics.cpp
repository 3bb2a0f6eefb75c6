#include "confgeo/dynamics/arc_length.hpp"
#include "confgeo/dynamics/equations.hpp"
#include "confgeo/dynamics/integrator.hpp"
#include "confgeo/dynamics/spiral_detection.hpp"
#include "confgeo/spiral/curve.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

using namespace confgeo;
using namespace confgeo::dynamics;
using geometry::make_vector;
using geometry::Matrix;
using geometry::MetricField;
using geometry::Vector;
using confgeo::testing::error_kind;

namespace {

GeodesicState circle_state(double R) {
    GeodesicState st;
    st.x = make_vector({R, 0.0, 0.0});
    st.u = make_vector({0.0, 1.0, 0.0});
    st.a = make_vector({-1.0 / R, 0.0, 0.0});
    return st;
}

// Composite trapezoid with one Richardson step: (4 T(h/2) - T(h)) / 3.
double richardson_trapezoid(const std::function<double(double)>& f, double a, double b, long n) {
    const auto trap = [&](long m) {
        const double h = (b - a) / m;
        double sum = 0.5 * (f(a) + f(b));
        for (long i = 1; i < m; ++i) sum += f(a + i * h);
        return sum * h;
    };
    return (4.0 * trap(2 * n) - trap(n)) / 3.0;
}

MetricField cylindrical_paraboloid_like() {
    // Non-flat metric: dr^2 (1 + r^2) + r^2 dphi^2 + dz^2.
    return geometry::make_metric_field(
        geometry::Chart::cylindrical(),
        [](const auto& x) {
            using S = std::decay_t<decltype(x[0])>;
            geometry::Components<S> g{};
            g[0] = 1.0 + x[0] * x[0];
            g[4] = x[0] * x[0];
            g[8] = S(1.0);
            return g;
        },
        geometry::PartialsSource::Analytic);
}

}  // namespace

TEST_CASE("flat-space circle data solves the proper-time system") {
    const MetricField flat = geometry::flat_cartesian(3);
    const GeodesicState st = circle_state(2.0);
    const StateDerivative d = propertime_rhs(flat, st);
    CHECK((d.dx - st.u).norm() == 0.0);
    CHECK((d.du - st.a).norm() == 0.0);
    // nabla_u a = -|a|^2 u on a circle.
    CHECK((d.da - (-0.25) * st.u).norm() < 1e-15);
    CHECK(geometry::norm(Matrix::Identity(3, 3), wedge_form_residual(flat, st, d.da)) < 1e-15);
    const Vector off = d.da + make_vector({0.0, 0.0, 1e-3});
    CHECK(geometry::norm(Matrix::Identity(3, 3), wedge_form_residual(flat, st, off)) ==
          doctest::Approx(1e-3).epsilon(1e-9));
}

TEST_CASE("proper-time data satisfies the unparametrized residual for any constant rescaling") {
    const MetricField m = cylindrical_paraboloid_like();
    GeodesicState st;
    st.x = make_vector({0.8, 0.2, 0.1});
    const Matrix g = m.evaluate(st.x);
    st.u = make_vector({0.3, 0.5, 0.2});
    st.u /= std::sqrt(st.u.dot(g * st.u));
    st.a = make_vector({0.1, -0.4, 0.7});
    st.a -= st.u.dot(g * st.a) * st.u;
    const auto gamma = geometry::christoffel(m, st.x);
    const Vector da = propertime_rhs(m, st).da;
    const Vector nabla_a = da + geometry::contract_christoffel(gamma, st.u, st.a);
    for (double c : {1.0, 0.25, 3.0}) {
        UnparamState us{st.x, c * st.u, c * c * st.a, 0.0};
        const Vector db = c * c * c * nabla_a - geometry::contract_christoffel(gamma, us.v, us.b);
        CHECK(geometry::norm(g, unparam_residual(m, us, db)) < 1e-12);
    }
    UnparamState still{st.x, Vector::Zero(3), st.a, 0.0};
    CHECK(error_kind([&] { unparam_residual(m, still, da); }) == ErrorKind::NotImmersed);
}

TEST_CASE("from_unparametrized on the spiral at t = 1") {
    const MetricField plane = geometry::flat_cylindrical();
    const UnparamState us = spiral::spiral_state(1.0);
    const double e = std::numbers::e;
    CHECK(us.v.norm() == doctest::Approx(std::sqrt(1.0 + e * e)));
    CHECK(us.v.norm() == doctest::Approx(2.8964).epsilon(1e-4));
    const GeodesicState st = from_unparametrized(plane, us);
    const auto gd = gauge_defect(plane, st);
    CHECK(gd.norm < 1e-15);
    CHECK(gd.orthogonal < 1e-14);
    // a is the curvature vector: |a| = |v ^ b| / |v|^3 in the plane.
    const Matrix g = plane.evaluate(us.x);
    const double area = geometry::norm(g, geometry::wedge(us.x, us.v, us.b));
    CHECK(std::sqrt(st.a.dot(g * st.a)) == doctest::Approx(area / std::pow(us.v.norm(), 3)).epsilon(1e-13));
}

TEST_CASE("gauge projection") {
    GeodesicState st = circle_state(1.0);
    st.u *= 1.001;
    st.a += 0.01 * st.u;
    const Matrix g = Matrix::Identity(3, 3);
    CHECK(gauge_defect(g, st).norm > 1e-3);
    const double moved = project_to_gauge(g, st);
    CHECK(moved > 1e-3);
    CHECK(gauge_defect(g, st).norm < 1e-15);
    CHECK(gauge_defect(g, st).orthogonal < 1e-15);
}

TEST_CASE("circles of several radii close after one period") {
    const MetricField flat = geometry::flat_cartesian(3);
    for (double R : {0.1, 1.0, 10.0}) {
        const auto traj = integrate(flat, circle_state(R), 0.0, 2.0 * std::numbers::pi * R, IntegratorConfig{});
        REQUIRE(traj.ok());
        CHECK(traj.status == IntegrationStatus::Completed);
        CHECK((traj.back().state.x - circle_state(R).x).norm() <= 1e-6);
        CHECK(traj.back().arc_length == doctest::Approx(2.0 * std::numbers::pi * R));
        for (const auto& s : traj.samples) {
            CHECK(std::abs(s.state.x.head(2).norm() - R) <= 1e-6);
            CHECK(s.gauge.norm < 1e-9);
        }
    }
}

TEST_CASE("integration is reversible and preserves the gauge in a curved metric") {
    const MetricField m = cylindrical_paraboloid_like();
    GeodesicState st;
    st.x = make_vector({1.0, 0.0, 0.0});
    const Matrix g = m.evaluate(st.x);
    st.u = make_vector({0.2, 0.7, 0.3});
    st.u /= std::sqrt(st.u.dot(g * st.u));
    st.a = make_vector({0.0, 0.1, -0.2});
    st.a -= st.u.dot(g * st.a) * st.u;
    IntegratorConfig cfg;
    const auto fwd = integrate(m, st, 0.0, 3.0, cfg);
    REQUIRE(fwd.ok());
    for (const auto& s : fwd.samples) CHECK(s.gauge.norm < kGaugeTolerance);
    const auto back = integrate(m, fwd.back().state, 3.0, 0.0, cfg);
    REQUIRE(back.ok());
    CHECK((back.back().state.x - st.x).norm() < 1e-8);
    CHECK((back.back().state.u - st.u).norm() < 1e-8);
    CHECK(back.back().s == 0.0);

    IntegratorConfig raw = cfg;
    raw.renormalize_gauge = false;
    const auto unprojected = integrate(m, st, 0.0, 3.0, raw);
    CHECK(unprojected.max_projection == 0.0);
    CHECK(gauge_defect(m, unprojected.back().state).norm < 1e-8);
}

TEST_CASE("stop function lands on its root") {
    const MetricField flat = geometry::flat_cartesian(3);
    IntegrationOptions io;
    io.stop_function = [](const GeodesicState& s) { return s.x(0); };
    const auto traj = integrate(flat, circle_state(1.0), 0.0, 10.0, IntegratorConfig{}, io);
    CHECK(traj.status == IntegrationStatus::Stopped);
    CHECK(std::abs(traj.back().state.x(0)) < 1e-10);
    CHECK(traj.back().s == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
}

TEST_CASE("runs into the cylindrical axis fail with a diagnostic") {
    const MetricField cyl = geometry::flat_cylindrical();
    GeodesicState st;
    st.x = make_vector({0.5, 0.0, 0.0});
    st.u = make_vector({-1.0, 0.0, 0.0});
    st.a = make_vector({0.0, 0.0, 0.0});
    const auto traj = integrate(cyl, st, 0.0, 1.0, IntegratorConfig{});
    CHECK_FALSE(traj.ok());
    CHECK(traj.status == IntegrationStatus::StepUnderflow);
    CHECK_FALSE(traj.diagnostic.empty());
    CHECK(traj.back().state.x(0) > 0.0);
    CHECK(traj.back().state.x(0) < 1e-3);

    st.x(0) = 0.0;
    CHECK(integrate(cyl, st, 0.0, 1.0, IntegratorConfig{}).status == IntegrationStatus::LeftDomain);
}

TEST_CASE("integrator configuration is validated") {
    IntegratorConfig c;
    c.relative_tolerance = -1.0;
    CHECK(error_kind([&] { c.validate(); }) == ErrorKind::InvalidArgument);
    IntegratorConfig few;
    few.max_steps = 3;
    const auto traj = integrate(geometry::flat_cartesian(3), circle_state(1.0), 0.0, 100.0, few);
    CHECK(traj.status == IntegrationStatus::MaxStepsExceeded);
    const auto empty = integrate(geometry::flat_cartesian(3), circle_state(1.0), 2.0, 2.0, IntegratorConfig{});
    CHECK(empty.samples.size() == 1);
    CHECK(empty.ok());
}

TEST_CASE("arc length: circle and spiral against a Richardson trapezoid oracle") {
    const MetricField plane = geometry::flat_polar();
    const Curve circle = [](double t) {
        return CurveSample{make_vector({3.0, t}), make_vector({0.0, 1.0})};
    };
    CHECK(arc_length(plane, circle, 0.0, std::numbers::pi).length == doctest::Approx(3.0 * std::numbers::pi));

    const Curve spiral_curve = [](double t) {
        const auto s = spiral::spiral_state_polar(t);
        return CurveSample{s.x, s.v};
    };
    for (double t0 : {0.5, 0.2}) {
        const auto L = arc_length(plane, spiral_curve, t0, 1.0);
        CHECK_FALSE(L.lower_bound_only);
        const double oracle = richardson_trapezoid(
            [](double t) { return std::hypot(1.0, std::exp(1.0 / t) / t); }, t0, 1.0, 1'000'000);
        CHECK(std::abs(L.length - oracle) / oracle <= 1e-6);
        CHECK(L.length >= std::log(1.0 / t0));
    }
}

TEST_CASE("spiral detection on synthetic trajectories") {
    Trajectory traj;
    std::vector<double> dist;
    for (int i = 0; i < 100; ++i) {
        TrajectorySample s;
        s.s = i;
        s.arc_length = i;
        traj.samples.push_back(s);
        dist.push_back(1.0 / (1.0 + i));
    }
    const auto rep = detect_spiral(traj, dist, {0.5, 0.1});
    CHECK(rep.spiral_consistent);
    REQUIRE(rep.containment.size() == 2);
    CHECK(*rep.containment[0].entry_time == 2.0);
    CHECK(*rep.containment[1].entry_time == 10.0);
    CHECK(std::string(verdict(rep)) == "spiral-consistent");

    dist.back() = 0.6;
    const auto out = detect_spiral(traj, dist, {0.5});
    CHECK_FALSE(out.containment[0].entry_time.has_value());
    CHECK_FALSE(out.spiral_consistent);
    CHECK(std::string(verdict(out)) == "not-spiral-consistent");

    CHECK(error_kind([&] { detect_spiral(traj, geometry::Chart::sphere(), make_vector({0.0, 0.0}), {0.5}); }) ==
          ErrorKind::InvalidArgument);
}
