// plancherel — command-line laboratory for random-partition experiments.
//
// Subcommands map one-to-one onto ExperimentKind; every run is deterministic
// given --seed, and writes CSV plus a JSON summary under --out.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "plancherel/experiment.hpp"

namespace {

using plancherel::ExperimentConfig;
using plancherel::ExperimentKind;

struct CliOptions {
    ExperimentConfig config;
    std::string config_path;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--replicas", opt.config.replicas, "number of Monte Carlo replicas");
    cmd->add_option("--seed", opt.config.master_seed, "master seed");
    cmd->add_option("--threads", opt.config.threads,
                    "worker threads (0 = PLANCHEREL_THREADS or hardware)");
    cmd->add_option("--out", opt.config.out_dir, "output directory");
    cmd->add_option("--config", opt.config_path, "JSON config file (flags override)");
    cmd->add_flag("--reproducible", opt.config.reproducible,
                  "suppress the timestamped CSV header line");
}

int run(CliOptions& opt, CLI::App* cmd, ExperimentKind kind) {
    opt.config.experiment = kind;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) {
            std::cerr << "cannot read config file: " << opt.config_path << "\n";
            return 3;
        }
        nlohmann::json j;
        try {
            in >> j;
            ExperimentConfig from_file = j.get<ExperimentConfig>();
            // explicit flags win over file values
            ExperimentConfig merged = from_file;
            merged.experiment = kind;
            if (cmd->count("--replicas")) merged.replicas = opt.config.replicas;
            if (cmd->count("--seed")) merged.master_seed = opt.config.master_seed;
            if (cmd->count("--threads")) merged.threads = opt.config.threads;
            if (cmd->count("--out")) merged.out_dir = opt.config.out_dir;
            if (cmd->count("--reproducible")) merged.reproducible = opt.config.reproducible;
            if (cmd->count("--n")) merged.n = opt.config.n;
            if (cmd->count("--t")) merged.t = opt.config.t;
            if (cmd->count("--x")) merged.x = opt.config.x;
            if (cmd->count("--u")) merged.u = opt.config.u;
            if (cmd->count("--s")) merged.s = opt.config.s;
            if (cmd->count("--theta")) merged.theta = opt.config.theta;
            if (cmd->count("--x0")) merged.x0 = opt.config.x0;
            if (cmd->count("--z")) merged.z = opt.config.z;
            if (cmd->count("--epsilon")) merged.epsilon = opt.config.epsilon;
            if (cmd->count("--kmax")) merged.kmax = opt.config.kmax;
            if (cmd->count("--m")) merged.m = opt.config.m;
            if (cmd->count("--sampler")) merged.sampler = opt.config.sampler;
            opt.config = merged;
        } catch (const std::exception& e) {
            std::cerr << "config parse error: " << e.what() << "\n";
            return 1;
        }
    }
    auto result = plancherel::run_experiment(opt.config);
    if (!result.message.empty())
        (result.exit_code == 0 ? std::cout : std::cerr) << result.message << "\n";
    for (const auto& f : result.files) std::cout << "wrote " << f << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plancherel-measure partition laboratory"};
    app.require_subcommand(1);

    CliOptions opt;
    long long n_arg = 0;
    double t_arg = 0;

    auto with_n = [&](CLI::App* cmd) {
        cmd->add_option_function<long long>(
            "--n", [&](long long v) { opt.config.n = v; }, "partition size n");
    };
    auto with_t = [&](CLI::App* cmd) {
        cmd->add_option_function<double>(
            "--t", [&](double v) { opt.config.t = v; }, "poissonization parameter t");
    };
    (void)n_arg;
    (void)t_arg;

    auto* exact = app.add_subcommand("exact", "exact Burnside identity and pmf tables");
    with_n(exact);
    add_common(exact, opt);

    auto* sample = app.add_subcommand("sample", "replicated sampler batches");
    with_n(sample);
    with_t(sample);
    sample->add_option("--sampler", opt.config.sampler, "rsk | growth | poissonized");
    add_common(sample, opt);

    auto* shape = app.add_subcommand("shape", "sup-distance to the limit shape");
    with_n(shape);
    add_common(shape, opt);

    auto* clt = app.add_subcommand("clt", "pointwise CLT statistics Y_n(x)");
    with_n(clt);
    clt->add_option("--x", opt.config.x, "evaluation points in (0, 2)");
    add_common(clt, opt);

    auto* cov = app.add_subcommand("cov", "covariance decay across separations n^(-s/2)");
    with_n(cov);
    cov->add_option("--x0", opt.config.x0, "base point in (0, 2)");
    cov->add_option("--s", opt.config.s, "separation exponents in [0, 1]")->delimiter(',');
    add_common(cov, opt);

    auto* kerov = app.add_subcommand("kerov", "Chebyshev functionals of the deviation field");
    with_n(kerov);
    kerov->add_option("--kmax", opt.config.kmax, "highest functional order");
    add_common(kerov, opt);

    auto* edge = app.add_subcommand("edge", "edge statistics and transposition identity");
    with_n(edge);
    edge->add_option("--z", opt.config.z, "edge threshold z >= 0");
    add_common(edge, opt);

    auto* kernel = app.add_subcommand("kernel", "Bessel kernel predictions vs Monte Carlo");
    with_t(kernel);
    kernel->add_option("--x", opt.config.x, "interval location in (0, 2)");
    kernel->add_option("--z", opt.config.z, "interval offset z");
    add_common(kernel, opt);

    auto* series = app.add_subcommand("series", "random series partial sums and Z_s vectors");
    with_n(series);
    series->add_option("--m", opt.config.m, "truncation order (default ceil(sqrt(n)))");
    series->add_option("--theta", opt.config.theta, "evaluation angles in (0, pi)")
        ->delimiter(',');
    series->add_option("--s", opt.config.s, "Z_s grid in [0, 1]")->delimiter(',');
    add_common(series, opt);

    auto* tightness = app.add_subcommand("tightness", "two-point tightness probe");
    with_n(tightness);
    tightness->add_option("--u", opt.config.u, "two evaluation points in (-2, 2)")
        ->delimiter(',');
    tightness->add_option("--epsilon", opt.config.epsilon, "exceedance threshold");
    add_common(tightness, opt);

    CLI11_PARSE(app, argc, argv);

    static const std::vector<std::pair<CLI::App*, ExperimentKind>> dispatch = {
        {exact, ExperimentKind::exact},     {sample, ExperimentKind::sample},
        {shape, ExperimentKind::shape},     {clt, ExperimentKind::clt},
        {cov, ExperimentKind::cov},         {kerov, ExperimentKind::kerov},
        {edge, ExperimentKind::edge},       {kernel, ExperimentKind::kernel},
        {series, ExperimentKind::series},   {tightness, ExperimentKind::tightness},
    };
    for (const auto& [cmd, kind] : dispatch)
        if (cmd->parsed()) return run(opt, cmd, kind);
    return 1;
}
