#include "confgeo/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace confgeo::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || trim(line.substr(0, eq)).empty())
            throw std::runtime_error(path + ":" + std::to_string(number) + ": expected key = value");
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        out.emplace_back(trim(line.substr(0, eq)), value);
    }
    return out;
}

std::vector<std::string> apply_config_file(std::vector<std::string> args) {
    std::string path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config" && it + 1 != args.end()) {
            path = *(it + 1);
            it = args.erase(it, it + 2);
        } else if (it->rfind("--config=", 0) == 0) {
            path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (path.empty()) return args;
    for (const auto& [key, value] : read_config_file(path)) {
        if (has_flag(args, key)) continue;
        args.push_back("--" + key);
        args.push_back(value);
    }
    return args;
}

}  // namespace confgeo::cli
