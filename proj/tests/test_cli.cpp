#include "confgeo/cli/app.hpp"
#include "confgeo/cli/curvature_report.hpp"
#include "confgeo/cli/trace.hpp"
#include "confgeo/spiral/example_metric.hpp"
#include "confgeo/verify/checks.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace confgeo;
using namespace confgeo::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("confgeo_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<double>> read_rows(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("verify writes the module's reports") {
    const auto dir = scratch("verify1");
    const auto r = run_cli({"verify", "lemma1", "--seed", "42", "--out", dir.string()});
    CHECK(r.code == kExitOk);
    const auto direct = verify::run_checks("lemma1", {42, std::nullopt});
    CHECK(slurp(dir / "lemma1.json") == direct[0].to_json().dump(2) + "\n");
    CHECK(fs::exists(dir / "lemma1.txt"));
    CHECK(slurp(dir / "verify_config.ini").find("seed=42") != std::string::npos);
    CHECK(r.out.find("1/1 checks passed") != std::string::npos);
}

TEST_CASE("verify all exits according to the check outcomes") {
    const auto dir = scratch("verify_all");
    const auto r = run_cli({"verify", "all", "--seed", "42", "--out", dir.string()});
    const auto direct = verify::run_checks("all", {42, std::nullopt});
    REQUIRE(direct.size() == 5);
    bool all = true;
    for (const auto& rep : direct) {
        all = all && rep.passed;
        CHECK(slurp(dir / (rep.name + ".json")) == rep.to_json().dump(2) + "\n");
    }
    CHECK(r.code == (all ? kExitOk : kExitCheckFailed));

    const auto again = scratch("verify_all2");
    run_cli({"verify", "all", "--seed", "42", "--out", again.string()});
    for (const auto& rep : direct) CHECK(slurp(dir / (rep.name + ".json")) == slurp(again / (rep.name + ".json")));
}

TEST_CASE("verify usage errors and tolerance overrides") {
    CHECK(run_cli({"verify", "bogus"}).code == kExitUsage);
    CHECK(run_cli({}).code == kExitUsage);
    CHECK(run_cli({"verify", "lemma1", "--nope", "1"}).code == kExitUsage);
    const auto dir = scratch("verify_tol");
    const auto r = run_cli({"verify", "lemma3", "--tol", "1e-12", "--out", dir.string()});
    const auto j = nlohmann::json::parse(slurp(dir / "lemma3.json"));
    CHECK(j.at("tolerances").at("max_relative_forcing_residual") == 1e-12);
    CHECK(j.at("metrics").contains("max_relative_forcing_residual"));
    CHECK(r.code == (j.at("status") == "pass" ? kExitOk : kExitCheckFailed));
}

TEST_CASE("trace writes the module's trajectory as CSV") {
    const auto dir = scratch("trace");
    const auto r = run_cli({"trace", "--t0", "0.8", "--t-end", "0.4", "--out", dir.string()});
    REQUIRE(r.code == kExitOk);
    const std::string csv = slurp(dir / "trace.csv");
    CHECK(csv.rfind(std::string(kTraceHeader) + "\n", 0) == 0);

    TraceRequest rq;
    rq.t0 = 0.8;
    rq.t_end = 0.4;
    rq.integrator.absolute_tolerance = 1e-12;
    std::ostringstream golden;
    write_csv(golden, trace(rq).rows);
    CHECK(csv == golden.str());

    const auto rows = read_rows(dir / "trace.csv");
    REQUIRE(rows.size() > 10);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][5] < rows[i - 1][5]);
    CHECK(rows.back()[5] == doctest::Approx(0.4).epsilon(1e-12));
    for (const auto& row : rows) CHECK(row.size() == 10);
    CHECK(slurp(dir / "trace.gp").find("plot 'trace.csv'") != std::string::npos);

    const auto again = scratch("trace2");
    run_cli({"trace", "--t0", "0.8", "--t-end", "0.4", "--out", again.string()});
    CHECK(slurp(again / "trace.csv") == csv);
}

TEST_CASE("trace edge cases") {
    const auto one = scratch("trace_one");
    CHECK(run_cli({"trace", "--t0", "0.5", "--t-end", "0.5", "--out", one.string()}).code == kExitOk);
    CHECK(read_rows(one / "trace.csv").size() == 1);

    const auto circ = scratch("trace_circle");
    CHECK(run_cli({"trace", "--metric", "flat", "--circle", "R=1", "--out", circ.string()}).code == kExitOk);
    const auto rows = read_rows(circ / "trace.csv");
    CHECK(std::hypot(rows.back()[2] - 1.0, rows.back()[3]) <= 1e-6);
    CHECK(rows.back()[7] == doctest::Approx(2.0 * M_PI));

    const auto deep = scratch("trace_deep");
    const auto r = run_cli({"trace", "--t0", "0.5", "--t-end", "0.02", "--max-steps", "300", "--out", deep.string()});
    CHECK(r.code == kExitRuntime);
    CHECK(r.err.find("partial") != std::string::npos);
    CHECK(read_rows(deep / "trace.csv").size() > 1);

    CHECK(run_cli({"trace", "--t0", "0.4", "--t-end", "0.6"}).code == kExitUsage);
    CHECK(run_cli({"trace", "--t0", "1.5"}).code == kExitUsage);
    CHECK(run_cli({"trace", "--circle", "R=1"}).code == kExitUsage);
    CHECK(run_cli({"trace", "--metric", "flat", "--circle", "R=-2"}).code == kExitUsage);
}

TEST_CASE("curvature output matches the bundle") {
    const auto r = run_cli({"curvature", "--metric", "example", "--point", "0.5,0,0", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto cb = geometry::curvature(spiral::example_metric(), geometry::make_vector({0.5, 0.0, 0.0}));
    CHECK(nlohmann::json::parse(r.out) == to_json(cb));
    CHECK(nlohmann::json::parse(r.out).at("ricci")[0][1] == doctest::Approx(-0.145796773643735).epsilon(1e-12));

    const auto text = run_cli({"curvature", "--metric", "example", "--point", "0.5,0,0"});
    CHECK(text.out == to_text(cb));

    const auto flat = run_cli({"curvature", "--metric", "flat", "--chart", "cartesian", "--point", "1,2,3", "--format", "json"});
    const auto j = nlohmann::json::parse(flat.out);
    for (const auto& row : j.at("ricci"))
        for (double v : row) CHECK(v == 0.0);
    CHECK(j.at("scalar") == 0.0);

    const auto axis = run_cli({"curvature", "--point", "0,0,0"});
    CHECK(axis.code == kExitRuntime);
    CHECK(axis.err.find("--chart cartesian") != std::string::npos);
    CHECK(run_cli({"curvature", "--chart", "cartesian", "--point", "0,0,0"}).code == kExitOk);
    CHECK(run_cli({"curvature", "--point", "1,2"}).code == kExitUsage);
}

TEST_CASE("config files: flags win and echoed configs round-trip") {
    const auto dir = scratch("config");
    fs::create_directories(dir);
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "# trace settings\nt0 = 0.7\nt-end = 0.5\n\nmetric = \"example\"\n";
    }
    const auto out1 = dir / "a";
    CHECK(run_cli({"trace", "--config", (dir / "run.cfg").string(), "--t-end", "0.6", "--out", out1.string()}).code ==
          kExitOk);
    const auto rows = read_rows(out1 / "trace.csv");
    CHECK(rows.front()[5] == doctest::Approx(0.7));
    CHECK(rows.back()[5] == doctest::Approx(0.6));

    const auto out2 = dir / "b";
    CHECK(run_cli({"trace", "--config", (out1 / "trace_config.ini").string(), "--out", out2.string()}).code == kExitOk);
    CHECK(slurp(out2 / "trace.csv") == slurp(out1 / "trace.csv"));

    {
        std::ofstream bad(dir / "bad.cfg");
        bad << "unknown-key = 3\n";
    }
    CHECK(run_cli({"trace", "--config", (dir / "bad.cfg").string()}).code == kExitUsage);
    CHECK(run_cli({"trace", "--config", (dir / "missing.cfg").string()}).code == kExitUsage);
    {
        std::ofstream junk(dir / "junk.cfg");
        junk << "no equals sign\n";
    }
    CHECK(run_cli({"trace", "--config", (dir / "junk.cfg").string()}).code == kExitUsage);
}
