#include "confgeo/verify/checks.hpp"

#include "confgeo/dynamics/arc_length.hpp"
#include "confgeo/dynamics/equations.hpp"
#include "confgeo/dynamics/spiral_detection.hpp"
#include "confgeo/geometry/curvature.hpp"
#include "confgeo/geometry/error.hpp"
#include "confgeo/spiral/curve.hpp"
#include "confgeo/spiral/example_metric.hpp"
#include "confgeo/spiral/forcing.hpp"
#include "confgeo/spiral/trajectory.hpp"
#include "confgeo/verify/random_metric.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace confgeo::verify {

using dynamics::GeodesicState;
using dynamics::UnparamState;
using geometry::Bivector;
using geometry::Matrix;
using geometry::MetricField;
using geometry::PartialsSource;
using geometry::Vector;

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double g_dot(const Matrix& g, const Vector& a, const Vector& b) { return a.dot(g * b); }

// Unit vector orthogonal to u in the metric g.
Vector orthogonal_unit(const Matrix& g, const Vector& u, SeededRng& rng) {
    for (;;) {
        Vector w(u.size());
        for (int i = 0; i < w.size(); ++i) w(i) = rng.uniform(-1.0, 1.0);
        w -= (g_dot(g, u, w) / g_dot(g, u, u)) * u;
        const double len = std::sqrt(g_dot(g, w, w));
        if (len > 0.1) return w / len;
    }
}

}  // namespace

CheckReport check_wedge_form(const WedgeFormOptions& o) {
    if (o.trials < 1) throw GeometryError(ErrorKind::InvalidArgument, "trials must be >= 1");
    Stopwatch clock;
    CheckReport rep;
    rep.name = "lemma1";
    rep.seed = o.seed;

    SeededRng rng(o.seed);
    double worst_residual = 0.0, worst_converse = 0.0, worst_gauge = 0.0;
    int attempts = 0;
    for (int trial = 0; trial < o.trials; ++trial) {
        const RandomMetric rm = random_metric({o.epsilon, rng.next()});
        attempts += rm.attempts;
        GeodesicState st = random_gauge_state(rm.field, rng);

        const geometry::CurvatureBundle cb = geometry::curvature(rm.field, st.x);
        const Matrix& g = cb.metric;
        const auto gd = dynamics::gauge_defect(g, st);
        worst_gauge = std::max({worst_gauge, gd.norm, gd.orthogonal});

        Vector da = dynamics::propertime_rhs(rm.field, st).da;
        if (o.perturbation != 0.0) da += o.perturbation * orthogonal_unit(g, st.u, rng);

        const Bivector res = dynamics::wedge_form_residual(rm.field, st, da);
        worst_residual = std::max(worst_residual, geometry::norm(g, res));

        // Converse: the wedge condition fixes nabla_u a up to a multiple of u,
        // recovered by contracting u ^ L-hat u with u; the multiple follows from
        // differentiating g(u, a) = 0.
        const Vector lu = geometry::hat(cb.inverse_metric, *cb.schouten, st.u);
        const Matrix target = geometry::wedge(st.x, st.u, lu).components;
        const Vector normal_part = -(target * (g * st.u));
        const Vector nabla_a = normal_part - g_dot(g, st.a, st.a) * st.u;
        const Vector da_converse = nabla_a - geometry::contract_christoffel(cb.christoffel, st.u, st.a);
        worst_converse = std::max(worst_converse, (da_converse - da).cwiseAbs().maxCoeff());
    }
    rep.record("trials", o.trials);
    rep.record("metric_attempts", attempts);
    rep.require_at_most("max_gauge_defect", worst_gauge, 1e-12);
    rep.require_at_most("max_wedge_residual", worst_residual, o.tolerance);
    rep.require_at_most("max_converse_difference", worst_converse, o.tolerance);
    if (o.perturbation != 0.0) rep.record("perturbation", o.perturbation);
    rep.wall_time_seconds = clock.seconds();
    return rep;
}

CheckReport check_reparametrization(const ReparametrizationOptions& o) {
    if (o.curves < 1 || o.reparametrizations < 1)
        throw GeometryError(ErrorKind::InvalidArgument, "trial counts must be >= 1");
    Stopwatch clock;
    CheckReport rep;
    rep.name = "lemma2";
    rep.seed = o.seed;

    SeededRng rng(o.seed);
    double worst_residual = 0.0, worst_identity = 0.0, worst_unit = 0.0;
    for (int c = 0; c < o.curves; ++c) {
        const RandomMetric rm = random_metric({o.epsilon, rng.next()});
        const GeodesicState st = random_gauge_state(rm.field, rng);
        const auto pg = geometry::curvature(rm.field, st.x);
        const Matrix& g = pg.metric;
        const auto& gamma = pg.christoffel;

        const Vector da = dynamics::propertime_rhs(rm.field, st).da;
        const Vector nabla_a = da + geometry::contract_christoffel(gamma, st.u, st.a);
        const Bivector ua = geometry::wedge(st.x, st.u, st.a);

        for (int k = 0; k <= o.reparametrizations; ++k) {
            // k = 0 is the identity reparametrization.
            const double s1 = k == 0 ? 1.0 : std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
            const double s2 = k == 0 ? 0.0 : rng.uniform(-2.0, 2.0);
            const double s3 = k == 0 ? 0.0 : rng.uniform(-2.0, 2.0);

            // Jets of x(s(t)): v = s' u, b = s'' u + s'^2 a,
            // nabla_v b = s''' u + 3 s' s'' a + s'^3 nabla_u a.
            UnparamState us;
            us.x = st.x;
            us.v = s1 * st.u;
            us.b = s2 * st.u + s1 * s1 * st.a;
            us.t = 0.0;
            const double chain = o.break_chain_rule ? 0.0 : 3.0 * s1 * s2;
            const Vector nabla_b = s3 * st.u + chain * st.a + s1 * s1 * s1 * nabla_a;
            const Vector db = nabla_b - geometry::contract_christoffel(gamma, us.v, us.b);

            const Bivector res = dynamics::unparam_residual(rm.field, us, db);
            const double r = geometry::norm(g, res);
            worst_residual = std::max(worst_residual, r);
            if (k == 0) worst_unit = std::max(worst_unit, r);

            const double speed = std::sqrt(g_dot(g, us.v, us.v));
            const Bivector vb = geometry::wedge(st.x, us.v, us.b);
            const double id = geometry::norm(g, vb - (speed * speed * speed) * ua);
            worst_identity = std::max(worst_identity, id);
        }
    }
    rep.record("curves", o.curves);
    rep.record("reparametrizations_per_curve", o.reparametrizations);
    rep.require_at_most("max_residual_identity_reparametrization", worst_unit, o.tolerance);
    rep.require_at_most("max_unparametrized_residual", worst_residual, o.tolerance);
    rep.require_at_most("max_wedge_scaling_defect", worst_identity, o.identity_tolerance);
    if (o.break_chain_rule) rep.note("chain-rule term 3 s' s'' a removed");
    rep.wall_time_seconds = clock.seconds();
    return rep;
}

CheckReport check_planar_spiral(const PlanarSpiralOptions& o) {
    if (o.grid_points < 2 || !(o.t_min > 0.0) || !(o.t_max <= spiral::kCurveEnd) || !(o.t_min < o.t_max))
        throw GeometryError(ErrorKind::InvalidArgument, "invalid grid for the planar spiral check");
    Stopwatch clock;
    CheckReport rep;
    rep.name = "lemma3";

    const MetricField plane = geometry::flat_polar();
    const double scale = o.k_scale;
    const dynamics::SchoutenSource forcing = [scale](const Vector& x) -> Matrix {
        return scale * spiral::k_exact(x(0)) * spiral::m_tensor_polar(x(0));
    };

    double worst = 0.0, worst_at = 0.0;
    for (int i = 0; i < o.grid_points; ++i) {
        const double t = o.t_min + (o.t_max - o.t_min) * i / (o.grid_points - 1);
        const UnparamState st = spiral::spiral_state_polar(t);
        const auto terms = dynamics::unparam_terms(plane, st, spiral::spiral_b_dot_polar(t), forcing);
        const Matrix g = plane.evaluate(st.x);
        const double size = std::max(geometry::norm(g, terms.transport), geometry::norm(g, terms.forcing));
        const double rel = geometry::norm(g, terms.transport - terms.forcing) / size;
        if (rel > worst) worst = rel, worst_at = t;
    }
    rep.require_at_most("max_relative_forcing_residual", worst, o.tolerance);
    rep.record("worst_residual_at_t", worst_at);

    // |k(t)| / t^n along the decreasing sample.
    const auto& pts = o.flatness_points;
    for (int n = 0; n <= o.max_flatness_order; ++n) {
        int violations = 0;
        double prev = std::numeric_limits<double>::infinity();
        for (double t : pts) {
            const double value = std::abs(spiral::k_exact(t)) / std::pow(t, n);
            if (!(value < prev)) ++violations;
            prev = value;
        }
        rep.record("flatness_last_value_n" + std::to_string(n), prev);
        rep.require_at_most("flatness_violations_n" + std::to_string(n), violations, 0.0);
    }
    double leading = 0.0;
    for (double t : pts) {
        const double oracle = std::exp(-1.0 / t) / t;
        leading = std::max(leading, std::abs(std::abs(spiral::k_exact(t)) / oracle - 1.0));
    }
    rep.require_at_most("max_leading_term_deviation", leading, 1e-3);

    for (double t0 : o.arc_length_starts) {
        const dynamics::Curve curve = [](double t) {
            const UnparamState s = spiral::spiral_state_polar(t);
            return dynamics::CurveSample{s.x, s.v};
        };
        const auto L = dynamics::arc_length(plane, curve, t0, spiral::kCurveEnd, 1e-10);
        std::ostringstream key;
        key << "arc_length_margin_t" << t0;
        rep.require_at_least(key.str(), L.length - std::log(1.0 / t0), 0.0);
        rep.require(key.str() + "_converged", !L.lower_bound_only);
        rep.record(key.str() + "_relative_error", L.error_estimate / L.length);
    }
    if (o.k_scale != 1.0) rep.record("k_scale", o.k_scale);
    rep.wall_time_seconds = clock.seconds();
    return rep;
}

CheckReport check_example_curvature(const ExampleCurvatureOptions& o) {
    Stopwatch clock;
    CheckReport rep;
    rep.name = "lemma5";

    spiral::ExampleMetricOptions mo;
    mo.partials = PartialsSource::FiniteDifference;
    mo.h_scale = o.metric_h_scale;
    const MetricField field = spiral::example_metric(mo);
    const MetricField flat = geometry::flat_cylindrical(PartialsSource::FiniteDifference);

    Matrix dz2 = Matrix::Zero(3, 3);
    dz2(2, 2) = 1.0;

    double induced = 0.0, dz = 0.0, ricci = 0.0, riemann = 0.0, trace = 0.0, contraction = 0.0,
           floor = 0.0;
    for (double r : o.radii) {
        const Vector x = geometry::make_vector({r, o.phi, 0.0});
        const Matrix g = field.evaluate(x);
        const Matrix g_flat = flat.evaluate(x);
        induced = std::max(induced, (g - g_flat).cwiseAbs().maxCoeff());

        const auto p = geometry::metric_derivatives(field, x, geometry::DerivativeOrder::First);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) dz = std::max(dz, std::abs(p.dg(i, j, 2)));

        const auto cb = geometry::curvature(field, x);
        const double h = spiral::h_profile(r);
        const Matrix hm = h * spiral::m_tensor_cylindrical(r);
        ricci = std::max(ricci, (cb.ricci - (-2.0) * hm).cwiseAbs().maxCoeff());

        const geometry::Tensor4 kn = geometry::kulkarni_nomizu(dz2, hm);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d)
                        riemann = std::max(riemann, std::abs(cb.riemann_lowered(a, b, c, d) + 2.0 * kn(a, b, c, d)));

        const Matrix gi = geometry::inverse_metric(g_flat);
        const Matrix m = spiral::m_tensor_cylindrical(r);
        trace = std::max(trace, std::abs((gi * m).trace()));
        contraction = std::max({contraction, (dz2 * gi * m).cwiseAbs().maxCoeff(),
                                (m * gi * dz2).cwiseAbs().maxCoeff()});

        const auto flat_cb = geometry::curvature(flat, x);
        floor = std::max({floor, flat_cb.ricci.cwiseAbs().maxCoeff(), flat_cb.riemann_lowered.max_abs()});
    }
    rep.require_at_most("induced_metric_deviation", induced, o.exact_tolerance);
    rep.require_at_most("max_dz_metric", dz, 1e-10);
    rep.require_at_most("max_ricci_deviation", ricci, o.tolerance);
    rep.require_at_most("max_riemann_deviation", riemann, o.tolerance);
    rep.require_at_most("m_trace", trace, o.exact_tolerance);
    rep.require_at_most("m_dz2_contraction", contraction, o.exact_tolerance);
    // The same stencil on a flat metric must sit well below the tolerance.
    rep.require_at_most("flat_noise_floor", floor, 0.1 * o.tolerance);
    if (o.metric_h_scale != 1.0) rep.record("metric_h_scale", o.metric_h_scale);
    rep.wall_time_seconds = clock.seconds();
    return rep;
}

namespace {

struct SpiralRun {
    dynamics::Trajectory traj;
    double max_tracking = 0.0;
    double max_z = 0.0;
};

SpiralRun run_spiral(const MetricField& field, double t_start, double t_end,
                     const dynamics::IntegratorConfig& cfg) {
    SpiralRun run{spiral::integrate_spiral(field, t_start, t_end, cfg)};
    for (const auto& s : run.traj.samples) {
        run.max_tracking = std::max(run.max_tracking, s.distance_to_mark);
        run.max_z = std::max(run.max_z, std::abs(s.state.x(2)));
    }
    return run;
}

}  // namespace

CheckReport check_spiral_integration(const SpiralIntegrationOptions& o) {
    if (!(o.t_end > 0.0) || !(o.t_end < o.t_start) || o.t_start > spiral::kCurveEnd)
        throw GeometryError(ErrorKind::InvalidArgument, "need 0 < t_end < t_start <= 1");
    Stopwatch clock;
    CheckReport rep;
    rep.name = "proposition";

    spiral::ExampleMetricOptions mo;
    mo.h_scale = o.h_scale;
    const MetricField field = spiral::example_metric(mo);
    const MetricField truth = spiral::example_metric();

    // In three dimensions Schouten and Ricci differ by a multiple of g, which
    // drops out of u ^ L-hat u.
    double identity = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t = o.t_end + (o.t_start - o.t_end) * i / 9.0;
        const UnparamState st = spiral::spiral_state(t);
        const auto cb = geometry::curvature(truth, st.x);
        const Vector u = st.v / std::sqrt(g_dot(cb.metric, st.v, st.v));
        const Bivector with_l = geometry::wedge(st.x, u, geometry::hat(cb.inverse_metric, *cb.schouten, u));
        const Bivector with_ric = geometry::wedge(st.x, u, geometry::hat(cb.inverse_metric, cb.ricci, u));
        identity = std::max(identity, geometry::norm(cb.metric, with_l - with_ric));
    }
    rep.require_at_most("schouten_ricci_wedge_difference", identity, o.identity_tolerance);

    const dynamics::Curve curve = [](double t) {
        const UnparamState s = spiral::spiral_state(t);
        return dynamics::CurveSample{s.x, s.v};
    };
    rep.record("analytic_arc_length", dynamics::arc_length(truth, curve, o.t_end, o.t_start).length);

    const SpiralRun run = run_spiral(field, o.t_start, o.t_end, o.integrator);
    const auto& traj = run.traj;
    rep.record("accepted_steps", static_cast<double>(traj.samples.size() - 1));
    rep.record("rejected_steps", static_cast<double>(traj.rejected_steps));
    rep.require("integration_stopped_at_end_radius", traj.status == dynamics::IntegrationStatus::Stopped);
    if (!traj.diagnostic.empty()) rep.note(traj.diagnostic);
    rep.require_at_most("max_gauge_projection", traj.max_projection, o.integrator.max_projection);
    rep.record("final_radius", traj.back().state.x(0));
    rep.require_at_most("max_tracking_error", run.max_tracking, o.tracking_tolerance);
    rep.require_at_most("max_abs_z", run.max_z, o.z_tolerance);

    const auto sr = dynamics::detect_spiral(traj, field.chart(), geometry::make_vector({0.0, 0.0, 0.0}), o.radii);
    for (const auto& c : sr.containment) {
        std::ostringstream key;
        key << "contained_in_ball_" << c.radius;
        rep.require(key.str(), c.entry_time.has_value());
        if (c.entry_time) rep.record(key.str() + "_entry_s", *c.entry_time);
    }
    rep.require("spiral_consistent", sr.spiral_consistent);
    rep.note(std::string("verdict: ") + dynamics::verdict(sr));

    const double arc = traj.back().arc_length;
    const auto p0 = field.chart().to_cartesian(traj.samples.front().state.x);
    const auto p1 = field.chart().to_cartesian(traj.back().state.x);
    const double chord = (*p1 - *p0).norm();
    rep.record("arc_length", arc);
    rep.record("chord", chord);
    rep.require_at_least("arc_over_chord", arc / chord, o.min_arc_over_chord);

    if (o.convergence_study) {
        dynamics::IntegratorConfig half = o.integrator;
        half.relative_tolerance *= 0.5;
        half.absolute_tolerance *= 0.5;
        const SpiralRun fine = run_spiral(field, o.t_start, o.t_end, half);
        const double ratio = run.max_tracking / fine.max_tracking;
        rep.record("max_tracking_error_half_tolerance", fine.max_tracking);
        rep.require_at_least("tracking_ratio_at_least", ratio, o.convergence_ratio_min);
        rep.require_at_most("tracking_ratio_at_most", ratio, o.convergence_ratio_max);
    }
    if (o.h_scale != 1.0) rep.record("h_scale", o.h_scale);
    rep.wall_time_seconds = clock.seconds();
    return rep;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"lemma1", "lemma2", "lemma3", "lemma5", "proposition"};
    return names;
}

bool is_check_name(const std::string& selection) {
    const auto& names = check_names();
    return selection == "all" || std::find(names.begin(), names.end(), selection) != names.end();
}

std::vector<CheckReport> run_checks(const std::string& selection, const CheckOverrides& ov) {
    if (!is_check_name(selection))
        throw GeometryError(ErrorKind::InvalidArgument, "unknown check: " + selection);
    std::vector<CheckReport> out;
    const auto want = [&](const char* n) { return selection == "all" || selection == n; };
    if (want("lemma1")) {
        WedgeFormOptions o;
        if (ov.seed) o.seed = ov.seed;
        if (ov.tolerance) o.tolerance = *ov.tolerance;
        out.push_back(check_wedge_form(o));
    }
    if (want("lemma2")) {
        ReparametrizationOptions o;
        if (ov.seed) o.seed = ov.seed;
        if (ov.tolerance) o.tolerance = *ov.tolerance;
        out.push_back(check_reparametrization(o));
    }
    if (want("lemma3")) {
        PlanarSpiralOptions o;
        if (ov.tolerance) o.tolerance = *ov.tolerance;
        out.push_back(check_planar_spiral(o));
    }
    if (want("lemma5")) {
        ExampleCurvatureOptions o;
        if (ov.tolerance) o.tolerance = *ov.tolerance;
        out.push_back(check_example_curvature(o));
    }
    if (want("proposition")) {
        SpiralIntegrationOptions o;
        if (ov.tolerance) o.tracking_tolerance = *ov.tolerance;
        out.push_back(check_spiral_integration(o));
    }
    return out;
}

CheckReport check_flat_circles(const CircleOptions& o) {
    Stopwatch clock;
    CheckReport rep;
    rep.name = "circles";
    const MetricField flat = geometry::flat_cartesian(3);
    for (double R : o.radii) {
        GeodesicState st;
        st.x = geometry::make_vector({R, 0.0, 0.0});
        st.u = geometry::make_vector({0.0, 1.0, 0.0});
        st.a = geometry::make_vector({-1.0 / R, 0.0, 0.0});
        const auto traj = dynamics::integrate(flat, st, 0.0, 2.0 * std::numbers::pi * R, o.integrator);
        double radial = 0.0;
        for (const auto& s : traj.samples)
            radial = std::max(radial, std::abs(std::hypot(s.state.x(0), s.state.x(1)) - R) +
                                          std::abs(s.state.x(2)));
        std::ostringstream key;
        key << "R" << R;
        rep.require(key.str() + "_completed", traj.ok());
        rep.require_at_most(key.str() + "_closure", (traj.back().state.x - st.x).norm(), o.tolerance);
        rep.require_at_most(key.str() + "_radial_deviation", radial, o.tolerance);
    }
    rep.wall_time_seconds = clock.seconds();
    return rep;
}

CheckReport check_chart_consistency(const ChartConsistencyOptions& o) {
    Stopwatch clock;
    CheckReport rep;
    rep.name = "chart_consistency";
    rep.seed = o.seed;
    const MetricField cyl = spiral::example_metric();
    ::confgeo::spiral::ExampleMetricOptions co;
    co.chart = spiral::ExampleChart::Cartesian;
    const MetricField cart = spiral::example_metric(co);

    SeededRng rng(o.seed);
    double agreement = 0.0, lowest = std::numeric_limits<double>::infinity();
    int compared = 0;
    for (int i = 0; i < o.points; ++i) {
        Vector p(3);
        for (int a = 0; a < 3; ++a) p(a) = rng.uniform(-o.box, o.box);
        const Matrix gc = cart.evaluate(p);
        Eigen::SelfAdjointEigenSolver<Matrix> es(gc, Eigen::EigenvaluesOnly);
        lowest = std::min(lowest, es.eigenvalues()(0));

        const double r = std::hypot(p(0), p(1));
        if (!(r > o.r_min)) continue;
        const Vector q = geometry::make_vector({r, std::atan2(p(1), p(0)), p(2)});
        const Matrix mapped = spiral::cylindrical_to_cartesian_metric(cyl.evaluate(q), p);
        agreement = std::max(agreement, (mapped - gc).cwiseAbs().maxCoeff());
        ++compared;
    }
    rep.record("points_compared", compared);
    rep.require_at_most("max_chart_disagreement", agreement, o.tolerance);
    rep.require_at_least("min_eigenvalue", lowest, o.min_eigenvalue);
    rep.wall_time_seconds = clock.seconds();
    return rep;
}

}  // namespace confgeo::verify
