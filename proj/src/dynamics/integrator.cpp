#include "confgeo/dynamics/integrator.hpp"
#include "confgeo/geometry/error.hpp"

#include <boost/numeric/odeint.hpp>

#include <cmath>
#include <sstream>

namespace confgeo::dynamics {

namespace odeint = boost::numeric::odeint;

const char* to_string(IntegrationStatus status) {
    switch (status) {
        case IntegrationStatus::Completed: return "completed";
        case IntegrationStatus::Stopped: return "stopped";
        case IntegrationStatus::StepUnderflow: return "step-underflow";
        case IntegrationStatus::LeftDomain: return "left-domain";
        case IntegrationStatus::MaxStepsExceeded: return "max-steps-exceeded";
    }
    return "unknown";
}

void IntegratorConfig::validate() const {
    if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0))
        throw GeometryError(ErrorKind::InvalidArgument, "integrator tolerances must be positive");
    if (!(min_step > 0.0) || !(min_step <= max_step))
        throw GeometryError(ErrorKind::InvalidArgument, "integrator needs 0 < min_step <= max_step");
    if (max_steps < 1) throw GeometryError(ErrorKind::InvalidArgument, "max_steps must be positive");
}

namespace {

using Flat = std::vector<double>;

Flat pack(const GeodesicState& s) {
    const int n = static_cast<int>(s.x.size());
    Flat y(3 * n);
    for (int i = 0; i < n; ++i) {
        y[i] = s.x(i);
        y[n + i] = s.u(i);
        y[2 * n + i] = s.a(i);
    }
    return y;
}

GeodesicState unpack(const Flat& y, double s) {
    const int n = static_cast<int>(y.size() / 3);
    GeodesicState st{Vector(n), Vector(n), Vector(n), s};
    for (int i = 0; i < n; ++i) {
        st.x(i) = y[i];
        st.u(i) = y[n + i];
        st.a(i) = y[2 * n + i];
    }
    return st;
}

class Recorder {
public:
    Recorder(const MetricField& field, const IntegratorConfig& config, const IntegrationOptions& options,
             Trajectory& traj)
        : field_(field), config_(config), options_(options), traj_(traj) {}

    // Projects (if enabled) and appends; returns the possibly corrected state.
    GeodesicState accept(GeodesicState st) {
        const Matrix g = field_.evaluate(st.x);
        TrajectorySample sample;
        sample.s = st.s;
        sample.gauge = gauge_defect(g, st);
        if (config_.renormalize_gauge && !traj_.samples.empty()) {
            sample.projection = project_to_gauge(g, st);
            traj_.max_projection = std::max(traj_.max_projection, sample.projection);
            if (sample.projection > config_.max_projection) traj_.gauge_validation_failed = true;
        }
        sample.state = st;
        sample.arc_length = traj_.samples.empty()
                                ? 0.0
                                : traj_.samples.back().arc_length + std::abs(st.s - traj_.samples.back().s);
        if (options_.mark_distance) sample.distance_to_mark = options_.mark_distance(st);
        traj_.samples.push_back(std::move(sample));
        return st;
    }

private:
    const MetricField& field_;
    const IntegratorConfig& config_;
    const IntegrationOptions& options_;
    Trajectory& traj_;
};

}  // namespace

Trajectory integrate(const MetricField& field, const GeodesicState& initial, double s_begin, double s_end,
                     const IntegratorConfig& config, const IntegrationOptions& options) {
    config.validate();
    Trajectory traj;
    Recorder recorder(field, config, options, traj);

    const int n = field.dimension();
    if (initial.x.size() != n || initial.u.size() != n || initial.a.size() != n)
        throw GeometryError(ErrorKind::DimensionMismatch, "initial state does not match metric dimension");

    GeodesicState start = initial;
    start.s = s_begin;
    try {
        field.chart().require_regular(start.x);
        recorder.accept(start);
    } catch (const GeometryError& e) {
        traj.status = IntegrationStatus::LeftDomain;
        traj.diagnostic = e.what();
        return traj;
    }
    if (s_end == s_begin) return traj;

    auto system = [&](const Flat& y, Flat& dydt, double s) {
        const GeodesicState st = unpack(y, s);
        field.chart().require_regular(st.x);
        const StateDerivative d = propertime_rhs(field, st, options.schouten);
        for (int i = 0; i < n; ++i) {
            dydt[i] = d.dx(i);
            dydt[n + i] = d.du(i);
            dydt[2 * n + i] = d.da(i);
        }
    };

    using Dopri = odeint::runge_kutta_dopri5<Flat>;
    // odeint reads a zero max_dt as "unbounded".
    const double max_dt = std::isfinite(config.max_step) ? config.max_step : 0.0;
    auto controlled =
        odeint::make_controlled(config.absolute_tolerance, config.relative_tolerance, max_dt, Dopri());
    Dopri fixed_stepper;

    const double direction = s_end > s_begin ? 1.0 : -1.0;
    const double span = std::abs(s_end - s_begin);
    Flat y = pack(start);
    double s = s_begin;
    double dt = 0.0;
    try {
        Flat f0(y.size());
        system(y, f0, s);
        double y_scale = 0.0, f_scale = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            y_scale = std::max(y_scale, std::abs(y[i]));
            f_scale = std::max(f_scale, std::abs(f0[i]));
        }
        dt = 1e-2 * std::max(1.0, y_scale) / std::max(f_scale, 1e-300);
    } catch (const GeometryError& e) {
        traj.status = IntegrationStatus::LeftDomain;
        traj.diagnostic = e.what();
        return traj;
    }
    dt = direction * std::min({config.max_step, span, dt});
    double stop_prev = options.stop_function ? options.stop_function(start) : 1.0;
    long steps = 0;

    try {
        while (direction * (s_end - s) > 0.0) {
            if (steps >= config.max_steps) {
                traj.status = IntegrationStatus::MaxStepsExceeded;
                traj.diagnostic = "maximum number of steps reached before the end of the span";
                return traj;
            }
            if (direction * (s + dt - s_end) > 0.0) dt = s_end - s;

            const Flat y_prev = y;
            const double s_prev = s;
            odeint::controlled_step_result result = odeint::fail;
            try {
                result = controlled.try_step(system, y, s, dt);
            } catch (const GeometryError&) {
                // A trial stage left the chart or domain: retry with a
                // shorter step; a genuine exit shows up as step underflow.
                y = y_prev;
                s = s_prev;
                dt *= 0.25;
                controlled.reset();
            }
            if (result == odeint::fail) {
                ++traj.rejected_steps;
                if (std::abs(dt) < config.min_step) {
                    std::ostringstream os;
                    os << "step size " << std::abs(dt) << " below minimum " << config.min_step
                       << " at s = " << s;
                    traj.status = IntegrationStatus::StepUnderflow;
                    traj.diagnostic = os.str();
                    return traj;
                }
                continue;
            }
            ++steps;

            GeodesicState st = unpack(y, s);
            if (options.stop_function) {
                const double stop_now = options.stop_function(st);
                if (stop_prev > 0.0 && stop_now <= 0.0) {
                    // Regula falsi (Illinois variant) on the step length from
                    // the last accepted state; each trial is one fixed step no
                    // longer than a step the controller accepted.
                    Flat dydt_prev(y_prev.size());
                    system(y_prev, dydt_prev, s_prev);
                    double lo = 0.0, hi = s - s_prev;
                    double f_lo = stop_prev, f_hi = stop_now;
                    Flat y_best = y;
                    double s_best = s;
                    int side = 0;
                    for (int it = 0; it < 100 && f_hi != 0.0; ++it) {
                        const double h = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
                        Flat trial(y_prev.size()), dydt_trial(y_prev.size());
                        fixed_stepper.do_step(system, y_prev, dydt_prev, s_prev, trial, dydt_trial, h);
                        const double f_trial = options.stop_function(unpack(trial, s_prev + h));
                        y_best = trial;
                        s_best = s_prev + h;
                        if (std::abs(f_trial) <= 1e-15 ||
                            std::abs(hi - lo) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi))
                            break;
                        if (f_trial > 0.0) {
                            lo = h;
                            f_lo = f_trial;
                            if (side == -1) f_hi *= 0.5;
                            side = -1;
                        } else {
                            hi = h;
                            f_hi = f_trial;
                            if (side == 1) f_lo *= 0.5;
                            side = 1;
                        }
                    }
                    recorder.accept(unpack(y_best, s_best));
                    traj.status = IntegrationStatus::Stopped;
                    return traj;
                }
                stop_prev = stop_now;
            }

            const GeodesicState corrected = recorder.accept(st);
            if (config.renormalize_gauge) {
                y = pack(corrected);
                controlled.reset();  // cached FSAL derivative belongs to the unprojected state
            }
        }
    } catch (const GeometryError& e) {
        traj.status = IntegrationStatus::LeftDomain;
        traj.diagnostic = e.what();
        return traj;
    }
    traj.status = IntegrationStatus::Completed;
    return traj;
}

}  // namespace confgeo::dynamics
