#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjsum/deviation.hpp"

namespace conjsum {

// Declarative description of a lab run, parsed from a JSON document with
// three named sections: "settings", "experiments", "checks". The parsed form
// serializes back to canonical JSON (round-trip stable).

struct RunSettings {
    std::string output_dir = "out";
    int grid_size = 2048;
};

struct FunctionConfig {
    std::string name; // const | cos | sin | trig-poly | weierstrass
    double value = 0.0;
    int freq = 1;
    double amplitude = 1.0;
    double alpha = 0.5;
    int levels = 8;
    TrigCoefficients coeffs;
};

struct MatrixConfig {
    std::string name; // cesaro | riesz | norlund | euler | identity |
                      // concentrated | synthetic-pi
    std::optional<double> param;
};

struct SpaceConfig {
    std::string kind = "sup"; // sup | lp
    double p = 2.0;
    std::optional<int> grid_size; // falls back to settings.grid_size
};

struct ModelConfig {
    std::string name; // power | log-lipschitz | reciprocal-log
    double alpha = 0.5;
};

struct ExpectConfig {
    std::optional<double> slope_min;
    std::optional<double> slope_max;
    std::optional<double> ratio_max;
    bool hypotheses = false; // require every hypothesis check to pass
};

struct ExperimentConfig {
    std::string id;
    FunctionConfig function;
    MatrixConfig matrix;
    SpaceConfig space;
    int r = 1;
    std::vector<int> n_values;
    std::string bound = "tail-variation";
    std::string variant = "full";
    int max_freq = 128;
    std::optional<ModelConfig> model;
    ExpectConfig expect;
};

struct CheckConfig {
    std::string id;
    MatrixConfig matrix;
    std::vector<std::string> conditions; // window-sums | mean-index |
                                         // tail-comparison
    int r = 1;
    double c = 2.0;
    int n_min = 8;
    int n_max = 1024;
    std::optional<bool> expect_ok;
};

struct LabConfig {
    RunSettings settings;
    std::vector<ExperimentConfig> experiments;
    std::vector<CheckConfig> checks;
};

// Parsing / serialization. Both throw ConfigError on malformed documents or
// unknown ids; serialize(parse(text)) round-trips to a fixed canonical form.
LabConfig parse_config_text(const std::string& text);
LabConfig parse_config_file(const std::string& path);
std::string serialize_config(const LabConfig& config);

// Materialization used by the runner (and directly by tests).
PeriodicFunction make_function(const FunctionConfig& fc);
NormSpace make_space(const SpaceConfig& sc, int default_grid);
std::optional<ModulusModel> make_model(const std::optional<ModelConfig>& mc);
ExperimentSpec make_experiment_spec(const ExperimentConfig& ec,
                                    const RunSettings& settings);

// Output directory: the environment override wins over the config value.
inline constexpr const char* output_dir_env = "CONJSUM_OUTPUT_DIR";
std::string resolve_output_dir(const LabConfig& config);

struct RunOutcome {
    int assertion_failures = 0;
    int errors = 0;
    std::vector<std::string> messages;
};

// Executes every experiment (worker pool, deterministic output order) and
// every matrix-condition check; writes per-experiment CSVs, log-log plot
// data, summary.csv and checks.csv under output_dir. Partial results are
// kept when an experiment fails; the failure is reported in the outcome.
RunOutcome run_lab(const LabConfig& config, const std::string& output_dir);

// Fixed-width decimal text used for all emitted numbers (17 significant
// digits, locale-independent, round-trip exact).
std::string format_number(double v);

} // namespace conjsum
