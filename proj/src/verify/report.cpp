#include "confgeo/verify/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace confgeo::verify {

void CheckReport::require_at_most(const std::string& key, double measured, double tolerance) {
    metrics[key] = measured;
    tolerances[key] = tolerance;
    const bool ok = std::isfinite(measured) && measured <= tolerance;
    criteria[key] = ok;
    passed = passed && ok;
}

void CheckReport::require_at_least(const std::string& key, double measured, double bound) {
    metrics[key] = measured;
    tolerances[key] = bound;
    const bool ok = std::isfinite(measured) && measured >= bound;
    criteria[key] = ok;
    passed = passed && ok;
}

void CheckReport::require(const std::string& key, bool condition) {
    criteria[key] = condition;
    passed = passed && condition;
}

namespace {

// JSON has no representation for inf / nan.
nlohmann::json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["status"] = passed ? "pass" : "fail";
    j["seed"] = seed;
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [k, v] : metrics) m[k] = number(v);
    j["metrics"] = m;
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, v] : tolerances) t[k] = number(v);
    j["tolerances"] = t;
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [k, v] : criteria) c[k] = v;
    j["criteria"] = c;
    j["notes"] = notes;
    return j;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    char buf[64];
    os << name << ": " << (passed ? "PASS" : "FAIL") << "  (seed " << seed << ", ";
    std::snprintf(buf, sizeof buf, "%.3f s", wall_time_seconds);
    os << buf << ")\n";
    for (const auto& [k, v] : metrics) {
        std::snprintf(buf, sizeof buf, "%.6e", v);
        os << "  " << k << " = " << buf;
        if (auto it = tolerances.find(k); it != tolerances.end()) {
            std::snprintf(buf, sizeof buf, "%.3e", it->second);
            os << "  [bound " << buf << "]";
        }
        if (auto it = criteria.find(k); it != criteria.end()) os << (it->second ? "  ok" : "  VIOLATED");
        os << '\n';
    }
    for (const auto& [k, v] : criteria)
        if (!metrics.count(k)) os << "  " << k << ": " << (v ? "ok" : "VIOLATED") << '\n';
    for (const auto& n : notes) os << "  note: " << n << '\n';
    return os.str();
}

}  // namespace confgeo::verify
