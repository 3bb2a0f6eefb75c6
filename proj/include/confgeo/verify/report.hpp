#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace confgeo::verify {

// Outcome of one verification check. `passed` is true iff every recorded
// criterion held.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::map<std::string, double> metrics;
    std::map<std::string, double> tolerances;
    std::map<std::string, bool> criteria;
    std::uint64_t seed = 0;
    double wall_time_seconds = 0.0;
    std::vector<std::string> notes;

    // Records `measured` under `key` and requires measured <= tolerance.
    void require_at_most(const std::string& key, double measured, double tolerance);
    // Records `measured` and requires measured >= bound.
    void require_at_least(const std::string& key, double measured, double bound);
    void require(const std::string& key, bool condition);
    void record(const std::string& key, double value) { metrics[key] = value; }
    void note(std::string text) { notes.push_back(std::move(text)); }

    // Deterministic for fixed inputs: wall time is left out.
    nlohmann::json to_json() const;
    // Human-readable summary including the wall time.
    std::string to_text() const;
};

}  // namespace confgeo::verify
