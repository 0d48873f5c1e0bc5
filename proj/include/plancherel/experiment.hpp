#pragma once

// Declarative experiment runner behind the CLI: every verification is a
// subcommand with a JSON-serializable config, seeded replica streams, and
// CSV + JSON outputs.

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace plancherel {

enum class ExperimentKind {
    exact,
    sample,
    shape,
    clt,
    cov,
    kerov,
    edge,
    kernel,
    series,
    tightness,
};

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::exact;
    std::optional<long long> n;
    std::optional<double> t;
    std::vector<double> x;         // vertical evaluation points
    std::vector<double> u;         // rotated evaluation points
    std::vector<double> s;         // separation exponents (cov) / Z_s grid
    std::vector<double> theta;     // series evaluation angles
    double x0 = 1.0;               // base point for cov
    double z = 0.0;                // interval offset (edge, kernel)
    double epsilon = 0.5;          // tightness threshold
    int kmax = 3;                  // kerov functionals k = 1..kmax
    long long m = 0;               // series truncation; 0 = ceil(sqrt(n))
    int replicas = 1;
    std::uint64_t master_seed = 1;
    int threads = 0;               // 0 = PLANCHEREL_THREADS or hardware
    std::string sampler = "rsk";
    std::string out_dir = "out";
    bool reproducible = false;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

void to_json(nlohmann::json& j, const ExperimentConfig& config);
void from_json(const nlohmann::json& j, ExperimentConfig& config);

struct ExperimentResult {
    int exit_code = 0;  // 0 ok, 1 validation, 2 acceptance-check failure, 3 I/O
    std::string message;
    std::vector<std::string> files;
    nlohmann::json* summary = nullptr;  // set by run_experiment when requested
};

/// Runs the configured experiment; deterministic outputs for a fixed config.
/// Files already written are removed again if the run fails midway.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                nlohmann::json* summary_out = nullptr);

}  // namespace plancherel
