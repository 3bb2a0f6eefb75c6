#include "confgeo/cli/app.hpp"

#include "confgeo/cli/curvature_report.hpp"
#include "confgeo/cli/trace.hpp"
#include "confgeo/geometry/error.hpp"
#include "confgeo/spiral/example_metric.hpp"
#include "confgeo/verify/checks.hpp"

#include <CLI11.hpp>
#include <spdlog/cfg/helpers.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace confgeo::cli {

namespace fs = std::filesystem;

namespace {

void setup_logging() {
    static const bool done = [] {
        auto logger = spdlog::stderr_color_mt("confgeo");
        spdlog::set_default_logger(logger);
        spdlog::set_level(spdlog::level::warn);
        if (const char* env = std::getenv("CONFGEO_LOG")) spdlog::cfg::helpers::load_levels(env);
        return true;
    }();
    (void)done;
}

struct Common {
    std::string out_dir = "confgeo_out";
    std::uint64_t seed = 42;
    std::string config;  // consumed before parsing; listed for --help
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out_dir, "output directory")->capture_default_str();
    sub->add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
    sub->add_option("--config", c.config, "key = value file; flags override its entries");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << content;
}

void echo_config(const CLI::App* sub, const fs::path& dir) {
    write_file(dir / (sub->get_name() + "_config.ini"), sub->config_to_str(true, false));
}

struct VerifyArgs {
    std::string selection;
    std::optional<double> tol;
};

int cmd_verify(const VerifyArgs& a, const Common& c, const CLI::App* sub, std::ostream& out) {
    verify::CheckOverrides ov;
    ov.seed = c.seed;
    ov.tolerance = a.tol;
    spdlog::info("verify {} (seed {})", a.selection, c.seed);
    const auto reports = verify::run_checks(a.selection, ov);

    const fs::path dir(c.out_dir);
    fs::create_directories(dir);
    echo_config(sub, dir);
    int failed = 0;
    for (const auto& r : reports) {
        write_file(dir / (r.name + ".json"), r.to_json().dump(2) + "\n");
        write_file(dir / (r.name + ".txt"), r.to_text());
        out << r.to_text();
        if (!r.passed) ++failed;
        spdlog::debug("{}: {} in {:.3f} s", r.name, r.passed ? "pass" : "fail", r.wall_time_seconds);
    }
    out << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return failed ? kExitCheckFailed : kExitOk;
}

struct TraceArgs {
    double t0 = 0.8;
    double t_end = 0.3;
    double tol = 1e-10;
    std::string metric = "example";
    std::string circle;
    long max_steps = 1'000'000;
};

std::optional<double> parse_circle(const std::string& spec) {
    if (spec.rfind("R=", 0) != 0) return std::nullopt;
    try {
        std::size_t used = 0;
        const double r = std::stod(spec.substr(2), &used);
        if (used + 2 != spec.size() || !(r > 0.0)) return std::nullopt;
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int cmd_trace(const TraceArgs& a, const Common& c, const CLI::App* sub, std::ostream& out,
              std::ostream& err) {
    TraceRequest rq;
    rq.integrator.relative_tolerance = a.tol;
    rq.integrator.absolute_tolerance = a.tol * 1e-2;
    rq.integrator.max_steps = a.max_steps;
    if (!a.circle.empty()) {
        const auto r = parse_circle(a.circle);
        if (!r) {
            err << "error: --circle expects R=<positive radius>\n";
            return kExitUsage;
        }
        if (a.metric != "flat") {
            err << "error: circle mode needs --metric flat\n";
            return kExitUsage;
        }
        rq.mode = TraceRequest::Mode::Circle;
        rq.radius = *r;
    } else {
        if (!(a.t0 > 0.0 && a.t0 <= 1.0) || !(a.t_end > 0.0 && a.t_end <= a.t0)) {
            err << "error: need 0 < t-end <= t0 <= 1\n";
            return kExitUsage;
        }
        rq.t0 = a.t0;
        rq.t_end = a.t_end;
        rq.h_scale = a.metric == "flat" ? 0.0 : 1.0;
    }
    rq.integrator.validate();

    spdlog::info("trace: {} metric, tol {}", a.metric, a.tol);
    const TraceResult res = trace(rq);
    const fs::path dir(c.out_dir);
    fs::create_directories(dir);
    echo_config(sub, dir);
    {
        std::ofstream csv(dir / "trace.csv", std::ios::binary);
        write_csv(csv, res.rows);
    }
    write_file(dir / "trace.gp", gnuplot_script("trace.csv", "trace.png"));

    const auto& traj = res.trajectory;
    double worst = 0.0;
    for (const auto& r : res.rows) worst = std::max(worst, r.track_err);
    out << "samples: " << res.rows.size() << "\nstatus: " << dynamics::to_string(traj.status)
        << "\nmax track_err: " << worst << "\nfinal r: " << res.rows.back().r << '\n';
    if (!traj.ok()) {
        err << "error: integration did not finish: " << dynamics::to_string(traj.status);
        if (!traj.diagnostic.empty()) err << " (" << traj.diagnostic << ")";
        if (traj.gauge_validation_failed) err << " (gauge projection exceeded its bound)";
        err << "; partial trajectory written\n";
        return kExitRuntime;
    }
    return kExitOk;
}

struct CurvatureArgs {
    std::string metric = "example";
    std::string chart = "cylindrical";
    std::vector<double> point;
    std::string format = "text";
    std::string partials = "analytic";
};

int cmd_curvature(const CurvatureArgs& a, const Common& c, const CLI::App* sub, std::ostream& out) {
    const auto source = a.partials == "fd" ? geometry::PartialsSource::FiniteDifference
                                           : geometry::PartialsSource::Analytic;
    const bool cyl = a.chart == "cylindrical";
    geometry::MetricField field = [&] {
        if (a.metric == "flat") {
            if (cyl) return geometry::flat_cylindrical(source);
            return source == geometry::PartialsSource::Analytic
                       ? geometry::flat_cartesian(3)
                       : geometry::flat_cartesian(3).without_analytic_partials();
        }
        spiral::ExampleMetricOptions mo;
        mo.chart = cyl ? spiral::ExampleChart::Cylindrical : spiral::ExampleChart::Cartesian;
        mo.partials = source;
        return spiral::example_metric(mo);
    }();
    const geometry::Vector x = Eigen::Map<const Eigen::VectorXd>(a.point.data(), a.point.size());
    const auto cb = geometry::curvature(field, x);
    const std::string text = a.format == "json" ? to_json(cb).dump(2) + "\n" : to_text(cb);
    out << text;
    if (!sub->get_option("--out")->empty()) {
        const fs::path dir(c.out_dir);
        fs::create_directories(dir);
        echo_config(sub, dir);
        write_file(dir / (a.format == "json" ? "curvature.json" : "curvature.txt"), text);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    setup_logging();

    CLI::App app{"Conformal geodesic spirals: verification, trajectories and curvature"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common common;
    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run verification checks");
    std::vector<std::string> selections{"all"};
    for (const auto& n : verify::check_names()) selections.push_back(n);
    verify->add_option("selection", va.selection, "all, lemma1, lemma2, lemma3, lemma5 or proposition")
        ->required()
        ->check(CLI::IsMember(selections));
    verify->add_option("--tol", va.tol, "override the headline tolerance of each check");
    add_common(verify, common);

    TraceArgs ta;
    auto* trace_cmd = app.add_subcommand("trace", "integrate a trajectory and write CSV plus a gnuplot script");
    trace_cmd->add_option("--t0", ta.t0, "starting radius on the spiral")->capture_default_str();
    trace_cmd->add_option("--t-end", ta.t_end, "radius at which to stop")->capture_default_str();
    trace_cmd->add_option("--tol", ta.tol, "integrator relative tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    trace_cmd->add_option("--metric", ta.metric, "example or flat")
        ->capture_default_str()
        ->check(CLI::IsMember({"example", "flat"}));
    trace_cmd->add_option("--circle", ta.circle, "circle mode, R=<radius> (flat metric only)");
    trace_cmd->add_option("--max-steps", ta.max_steps, "step limit")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_common(trace_cmd, common);

    CurvatureArgs ca;
    auto* curv = app.add_subcommand("curvature", "print the curvature bundle at a point");
    curv->add_option("--metric", ca.metric, "example or flat")
        ->capture_default_str()
        ->check(CLI::IsMember({"example", "flat"}));
    curv->add_option("--chart", ca.chart, "cylindrical or cartesian")
        ->capture_default_str()
        ->check(CLI::IsMember({"cylindrical", "cartesian"}));
    curv->add_option("--point", ca.point, "three comma-separated coordinates")
        ->required()
        ->delimiter(',')
        ->expected(3);
    curv->add_option("--format", ca.format, "text or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    curv->add_option("--partials", ca.partials, "analytic or fd")
        ->capture_default_str()
        ->check(CLI::IsMember({"analytic", "fd"}));
    add_common(curv, common);

    std::vector<std::string> args;
    try {
        args = apply_config_file(raw_args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::vector<const char*> argv{"confgeo"};
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(va, common, verify, out);
        if (trace_cmd->parsed()) return cmd_trace(ta, common, trace_cmd, out, err);
        return cmd_curvature(ca, common, curv, out);
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << '\n';
        if (e.kind() == ErrorKind::ChartSingularity) err << "hint: the point is on the chart's singular locus; retry with --chart cartesian\n";
        return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace confgeo::cli
