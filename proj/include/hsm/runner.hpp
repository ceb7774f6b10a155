#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsm/report.hpp"

namespace hsm {

struct RunConfig {
    std::string command = "verify-all";
    std::vector<double> s_grid = {0.5};
    int n = 2;
    std::map<std::string, double> tolerances;
    std::string output_format = "json";  // csv | json
    std::string output_path;
    std::uint64_t seed = 1;
    int threads = 1;
    bool quick = false;
    // profile subcommand extras
    std::string profile_kind = "A";
    double t_max = 10.0;
    int t_samples = 201;
};

struct CheckLine {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct RunOutput {
    std::vector<CheckLine> lines;
    std::string document;  // assembled report file body (json or csv)
    int exit_code = 0;
};

RunOutput run_command(const RunConfig& cfg);

// exit 0 on success, 1 on any failed check, 2 usage, 3 I/O error
int run(const RunConfig& cfg);

} // namespace hsm
