#pragma once

#include "igsim/experiments.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace igsim {

enum class ExperimentKind { edge, sweep, compare, fom_on_file };

std::string to_string(ExperimentKind kind);

struct DriveConfig {
    std::string name;
    std::variant<CspDesignInputs, CatsProfile, PlainDrive> spec;
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::edge;
    std::string drive;                                          // primary drive name
    std::vector<double> i3_values{10e-3, 20e-3, 30e-3, 40e-3, 50e-3};
    double duty = 0.5;
    std::string cats_drive;             // compare: the CATS reference drive
    std::optional<double> target_loss;  // compare: W; unset tracks the measured CATS loss
    I3Bounds bounds;                    // compare: calibration range for i_3
    std::string input;                  // fom-on-file: CSV path
};

/// Fully resolved run configuration. `resolved` carries one line per key
/// ("section.key = value", suffixed with " (default)" when the file omitted
/// it) for the manifest.
struct RunConfig {
    DeviceParams device;
    CircuitParams circuit;
    SimConfig sim;
    std::vector<DriveConfig> drives;
    ExperimentConfig experiment;
    std::string output_dir = "out";
    std::vector<std::string> resolved;

    const DriveConfig* find_drive(const std::string& name) const;
};

/// Parse the flat key = value format with [section] headers. Parse errors
/// carry the file name, line number and offending key.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<config>");

}  // namespace igsim
