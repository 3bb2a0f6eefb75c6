#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confgeo::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitRuntime = 3,  // step underflow, singular point, other geometry errors
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reads a key = value file; blank lines and lines starting with '#' are
// skipped and surrounding double quotes are stripped from values. Throws std::runtime_error on unreadable files or malformed lines.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

// Removes `--config <path>` from args and appends `--key value` for every
// file entry whose flag is not already given, so flags win over the file.
std::vector<std::string> apply_config_file(std::vector<std::string> args);

}  // namespace confgeo::cli
