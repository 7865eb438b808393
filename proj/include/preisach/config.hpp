#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "preisach/bank.hpp"
#include "preisach/mesh.hpp"
#include "preisach/signals.hpp"

namespace preisach {

// Serializable description of a bank:
//   { "x_min", "x_max", "levels", "density": {"kind", "table"?}, "init", "x0" }
struct BankConfig {
    MeshSpec mesh;
    DensitySpec density;
    InitPreset init = InitPreset::negative_saturation;
    double x0 = 0.0;

    HysteronBank build(BankOptions options = {}) const;
};

enum class OutputFormat { csv, json };

struct OutputSpec {
    std::string path = "trajectory.csv";
    OutputFormat format = OutputFormat::csv;
    std::size_t decimation = 1;
};

struct ExperimentConfig {
    BankConfig model;
    signals::SignalSpec signal;
    OutputSpec output;
};

// JSON conversion. Parsing rejects unknown keys and type or range errors
// with a config_error naming the offending field.
nlohmann::json to_json(const BankConfig& config);
nlohmann::json to_json(const signals::SignalSpec& spec);
nlohmann::json to_json(const ExperimentConfig& config);

BankConfig bank_config_from_json(const nlohmann::json& doc, const std::string& where = "model");
signals::SignalSpec signal_spec_from_json(const nlohmann::json& doc, const std::string& where = "signal");
ExperimentConfig experiment_from_json(const nlohmann::json& doc);

// Parses JSON text; syntax errors are reported with line and column.
ExperimentConfig parse_experiment(std::string_view text);
ExperimentConfig load_experiment(const std::string& path);

// Built-in experiment presets: "fig5", "fig6a", "fig6b".
std::vector<std::string> preset_names();
ExperimentConfig preset(std::string_view name);

} // namespace preisach
