#pragma once

#include "igsim/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igsim {

struct RunOverrides {
    std::optional<ExperimentKind> experiment;
    std::optional<std::string> out_dir;
    std::optional<double> dt;
    std::optional<unsigned> seed;  // reserved; echoed in the manifest only
};

struct RunResult {
    std::string out_dir;
    std::vector<std::string> outputs;  // file names relative to out_dir, manifest last
    std::string summary;               // one-line result for the terminal
};

/// Execute the configured experiment and write its artifacts plus
/// manifest.txt. Identical configuration and overrides produce byte
/// identical artifacts.
RunResult run_experiment(const RunConfig& config, const RunOverrides& overrides,
                         const std::string& config_label);

RunResult run_config_file(const std::string& config_path, const RunOverrides& overrides);

/// Signature product of an edge stored in a CSV file (fom-on-file core).
double fom_contribution_of_file(const std::string& csv_path);

}  // namespace igsim
