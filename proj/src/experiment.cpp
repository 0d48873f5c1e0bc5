#include "plancherel/experiment.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>

#include "plancherel/fluctuations.hpp"
#include "plancherel/io.hpp"
#include "plancherel/kernel.hpp"
#include "plancherel/kerov.hpp"
#include "plancherel/limit_shape.hpp"
#include "plancherel/parallel.hpp"
#include "plancherel/samplers.hpp"
#include "plancherel/stats.hpp"

namespace plancherel {

using nlohmann::json;

const char* to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::exact: return "exact";
        case ExperimentKind::sample: return "sample";
        case ExperimentKind::shape: return "shape";
        case ExperimentKind::clt: return "clt";
        case ExperimentKind::cov: return "cov";
        case ExperimentKind::kerov: return "kerov";
        case ExperimentKind::edge: return "edge";
        case ExperimentKind::kernel: return "kernel";
        case ExperimentKind::series: return "series";
        case ExperimentKind::tightness: return "tightness";
    }
    return "exact";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
    static const std::vector<std::pair<std::string, ExperimentKind>> table = {
        {"exact", ExperimentKind::exact},     {"sample", ExperimentKind::sample},
        {"shape", ExperimentKind::shape},     {"clt", ExperimentKind::clt},
        {"cov", ExperimentKind::cov},         {"kerov", ExperimentKind::kerov},
        {"edge", ExperimentKind::edge},       {"kernel", ExperimentKind::kernel},
        {"series", ExperimentKind::series},   {"tightness", ExperimentKind::tightness},
    };
    for (const auto& [key, kind] : table)
        if (key == name) return kind;
    throw std::invalid_argument("unknown experiment: " + name);
}

void to_json(json& j, const ExperimentConfig& c) {
    j = json{{"experiment", to_string(c.experiment)},
             {"x", c.x},
             {"u", c.u},
             {"s", c.s},
             {"theta", c.theta},
             {"x0", c.x0},
             {"z", c.z},
             {"epsilon", c.epsilon},
             {"kmax", c.kmax},
             {"m", c.m},
             {"replicas", c.replicas},
             {"master_seed", c.master_seed},
             {"threads", c.threads},
             {"sampler", c.sampler},
             {"out_dir", c.out_dir},
             {"reproducible", c.reproducible}};
    if (c.n) j["n"] = *c.n;
    if (c.t) j["t"] = *c.t;
}

void from_json(const json& j, ExperimentConfig& c) {
    c = ExperimentConfig{};
    c.experiment = experiment_kind_from_string(j.at("experiment").get<std::string>());
    if (j.contains("n") && !j["n"].is_null()) c.n = j["n"].get<long long>();
    if (j.contains("t") && !j["t"].is_null()) c.t = j["t"].get<double>();
    if (j.contains("x")) c.x = j["x"].get<std::vector<double>>();
    if (j.contains("u")) c.u = j["u"].get<std::vector<double>>();
    if (j.contains("s")) c.s = j["s"].get<std::vector<double>>();
    if (j.contains("theta")) c.theta = j["theta"].get<std::vector<double>>();
    if (j.contains("x0")) c.x0 = j["x0"].get<double>();
    if (j.contains("z")) c.z = j["z"].get<double>();
    if (j.contains("epsilon")) c.epsilon = j["epsilon"].get<double>();
    if (j.contains("kmax")) c.kmax = j["kmax"].get<int>();
    if (j.contains("m")) c.m = j["m"].get<long long>();
    if (j.contains("replicas")) c.replicas = j["replicas"].get<int>();
    if (j.contains("master_seed")) c.master_seed = j["master_seed"].get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j["threads"].get<int>();
    if (j.contains("sampler")) c.sampler = j["sampler"].get<std::string>();
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("reproducible")) c.reproducible = j["reproducible"].get<bool>();
}

void ExperimentConfig::validate() const {
    if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    for (double xi : x)
        if (!(xi > 0.0 && xi < 2.0))
            throw std::invalid_argument("x values must lie in (0, 2)");
    for (double ui : u)
        if (!(ui > -2.0 && ui < 2.0))
            throw std::invalid_argument("u values must lie in (-2, 2)");
    for (double si : s)
        if (si < 0.0 || si > 1.0)
            throw std::invalid_argument("s values must lie in [0, 1]");
    switch (experiment) {
        case ExperimentKind::exact:
            if (!n || *n < 0 || *n > 20)
                throw std::invalid_argument("exact: requires --n in [0, 20]");
            break;
        case ExperimentKind::sample:
            if (sampler == "poissonized") {
                if (!t || !(*t > 0)) throw std::invalid_argument("sample: requires --t > 0");
            } else if (!n || *n < 0) {
                throw std::invalid_argument("sample: requires --n >= 0");
            }
            break;
        case ExperimentKind::shape:
            if (!n || *n < 1) throw std::invalid_argument("shape: requires --n >= 1");
            break;
        case ExperimentKind::clt:
            if (!n || *n < 3) throw std::invalid_argument("clt: requires --n >= 3");
            if (x.empty()) throw std::invalid_argument("clt: requires --x");
            break;
        case ExperimentKind::cov: {
            if (!n || *n < 3) throw std::invalid_argument("cov: requires --n >= 3");
            if (s.empty()) throw std::invalid_argument("cov: requires --s list");
            if (!(x0 > 0.0 && x0 < 2.0))
                throw std::invalid_argument("cov: x0 must lie in (0, 2)");
            for (double si : s) {
                double xi = x0 + std::pow(static_cast<double>(*n), -si / 2.0);
                if (!(xi > 0.0 && xi < 2.0))
                    throw std::invalid_argument("cov: x0 + n^(-s/2) must stay in (0, 2)");
            }
            break;
        }
        case ExperimentKind::kerov:
            if (!n || *n < 1) throw std::invalid_argument("kerov: requires --n >= 1");
            if (kmax < 1) throw std::invalid_argument("kerov: kmax must be >= 1");
            break;
        case ExperimentKind::edge:
            if (!n || *n < 1) throw std::invalid_argument("edge: requires --n >= 1");
            if (z < 0) throw std::invalid_argument("edge: z must be >= 0");
            break;
        case ExperimentKind::kernel:
            if (!t || !(*t >= 2)) throw std::invalid_argument("kernel: requires --t >= 2");
            if (x.empty()) throw std::invalid_argument("kernel: requires --x");
            break;
        case ExperimentKind::series:
            if (m < 2 && (!n || *n < 4))
                throw std::invalid_argument("series: requires --m >= 2 or --n >= 4");
            for (double th : theta)
                if (!(th > 0.0 && th < std::numbers::pi))
                    throw std::invalid_argument("series: theta must lie in (0, pi)");
            break;
        case ExperimentKind::tightness:
            if (!n || *n < 3) throw std::invalid_argument("tightness: requires --n >= 3");
            if (u.size() != 2) throw std::invalid_argument("tightness: requires two u values");
            if (!(epsilon > 0)) throw std::invalid_argument("tightness: epsilon must be > 0");
            break;
    }
}

namespace {

struct OutputTracker {
    std::filesystem::path dir;
    std::vector<std::string> files;

    std::string path(const std::string& name) {
        files.push_back((dir / name).string());
        return files.back();
    }
    void cleanup() noexcept {
        for (const auto& f : files) {
            std::error_code ec;
            std::filesystem::remove(f, ec);
        }
    }
};

std::string fmt_ll(long long v) { return std::to_string(v); }

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// ceil(2 sqrt(n)) and the strict comparison q < 2 sqrt(n) in exact integers.
long long ceil_two_sqrt(long long n) {
    long long r = static_cast<long long>(std::sqrt(4.0 * static_cast<double>(n)));
    while (r * r < 4 * n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= 4 * n) --r;
    return r;  // = ceil(2 sqrt(n)) since 4n is a perfect square iff r*r == 4n
}

bool less_than_two_sqrt(long long q, long long n) { return q * q < 4 * n; }

/// Lattice-midpoint evaluation of the vertical statistic: the profile cell
/// containing sqrt(n) x is (K-1, K]; Y compares lambda_K against the shape at
/// the cell midpoint, a Remark-4 style sequence x_n -> x that removes the
/// deterministic staircase offset at finite n.
struct VerticalEval {
    long long k = 0;
    double x_lattice = 0;
    double center = 0;   // sqrt(n) * omega(x_lattice)
    double y_scale = 0;  // 2 theta(x_lattice) / sqrt(log n)
};

VerticalEval make_vertical_eval(long long n, double x) {
    VerticalEval e;
    const double root_n = std::sqrt(static_cast<double>(n));
    e.k = static_cast<long long>(std::ceil(root_n * x));
    e.x_lattice = (static_cast<double>(e.k) - 0.5) / root_n;
    e.center = root_n * omega(std::min(e.x_lattice, 2.0));
    e.y_scale = 2.0 * theta_of_x(std::min(e.x_lattice, 2.0)) /
                std::sqrt(std::log(static_cast<double>(n)));
    return e;
}

json moments_json(const Moments& m) {
    return json{{"mean", m.mean},
                {"variance", m.variance},
                {"skewness", m.skewness},
                {"excess_kurtosis", m.excess_kurtosis},
                {"count", m.count}};
}

// ---------------------------------------------------------------- exact ----

ExperimentResult run_exact(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    const int n = static_cast<int>(*c.n);
    auto pmf = plancherel_pmf(n);
    CsvWriter csv(out.path("exact_pmf.csv"), {"lambda", "d", "d_squared", "probability"},
                  c.reproducible);
    for (std::size_t i = 0; i < pmf.partitions.size(); ++i) {
        csv.row({to_text(pmf.partitions[i]), std::to_string(pmf.d[i]),
                 std::to_string(pmf.d_squared(i)), format_double(pmf.probability(i))});
    }
    csv.close();
    const std::uint64_t sum = pmf.sum_d_squared();
    const bool ok = sum == pmf.n_factorial;
    summary = json{{"n", n},
                   {"num_partitions", pmf.partitions.size()},
                   {"sum_d_squared", sum},
                   {"n_factorial", pmf.n_factorial},
                   {"burnside_ok", ok}};
    write_text_file(out.path("exact_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "sum d^2 = " + std::to_string(sum) +
                (ok ? " = " : " != ") + std::to_string(pmf.n_factorial) + " = " +
                std::to_string(n) + "!";
    r.exit_code = ok ? 0 : 2;
    return r;
}

// --------------------------------------------------------------- sample ----

ExperimentResult run_sample(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    SamplerKind kind = sampler_kind_from_string(c.sampler);
    double n_or_t = kind == SamplerKind::poissonized ? *c.t
                                                     : static_cast<double>(*c.n);
    auto batch = sample_batch(kind, n_or_t, c.replicas, c.master_seed, c.threads);
    CsvWriter csv(out.path("batch.csv"),
                  {"replica_index", "n", "lambda", "lambda1", "num_parts"},
                  c.reproducible);
    double mean_l1 = 0, mean_parts = 0;
    for (std::size_t i = 0; i < batch.draws.size(); ++i) {
        const auto& lambda = batch.draws[i];
        csv.row({std::to_string(i), fmt_ll(batch.realized_n[i]), to_text(lambda),
                 std::to_string(lambda.part(1)), std::to_string(lambda.length())});
        mean_l1 += lambda.part(1);
        mean_parts += static_cast<double>(lambda.length());
    }
    csv.close();
    mean_l1 /= c.replicas;
    mean_parts /= c.replicas;
    summary = json{{"sampler", c.sampler},
                   {"n_or_t", batch.n_or_t},
                   {"replicas", c.replicas},
                   {"master_seed", c.master_seed},
                   {"mean_lambda1", mean_l1},
                   {"mean_num_parts", mean_parts}};
    write_text_file(out.path("sample_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "sampled " + std::to_string(c.replicas) + " draws (" + c.sampler + ")";
    return r;
}

// ---------------------------------------------------------------- shape ----

ExperimentResult run_shape(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    const long long n = *c.n;
    auto draws = run_replicas<Partition>(
        c.replicas, c.threads, c.master_seed,
        [&](int, RandomStream& stream) { return sample_plancherel_rsk(n, stream); });
    std::vector<double> sups(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i)
        sups[i] = sup_distance_to_omega(draws[i], n);

    CsvWriter dist(out.path("shape_distance.csv"), {"replica_index", "n", "sup_distance"},
                   c.reproducible);
    for (std::size_t i = 0; i < sups.size(); ++i)
        dist.row({std::to_string(i), fmt_ll(n), format_double(sups[i])});
    dist.close();

    // first replica: rotated profile and staircase-vs-omega comparison
    const auto& lambda = draws.front();
    const double root_n = std::sqrt(static_cast<double>(n));
    RotatedProfile profile(lambda, root_n);
    CsvWriter prof(out.path("shape_profile.csv"), {"u", "v"}, c.reproducible);
    for (auto [u, v] : profile.breakpoints())
        prof.row({format_double(u), format_double(v)});
    prof.close();

    CsvWriter cmp(out.path("shape_compare.csv"), {"x", "lambda_bar", "omega", "diff"},
                  c.reproducible);
    std::string dat;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        double xi = static_cast<double>(i) / root_n;
        double bar = static_cast<double>(lambda.part(i)) / root_n;
        double om = xi >= 2.0 ? 0.0 : omega(xi);
        cmp.row({format_double(xi), format_double(bar), format_double(om),
                 format_double(bar - om)});
        dat += format_double(xi) + " " + format_double(bar) + " " + format_double(om) + "\n";
    }
    cmp.close();
    write_text_file(out.path("shape_compare.dat"), dat);

    auto mom = compute_moments(sups);
    summary = json{{"n", n},
                   {"replicas", c.replicas},
                   {"median_sup_distance", median_of(sups)},
                   {"mean_sup_distance", mom.mean},
                   {"max_sup_distance", *std::max_element(sups.begin(), sups.end())}};
    write_text_file(out.path("shape_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "median sup distance " + format_double(median_of(sups));
    return r;
}

// ------------------------------------------------------------------ clt ----

ExperimentResult run_clt(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    const long long n = *c.n;
    const double x = c.x.front();
    const VerticalEval ev = make_vertical_eval(n, x);
    auto values = run_replicas<long long>(
        c.replicas, c.threads, c.master_seed, [&](int, RandomStream& stream) {
            return profile_at_index(sample_plancherel_rsk(n, stream), ev.k);
        });

    CsvWriter csv(out.path("clt.csv"), {"replica_index", "n", "x", "delta", "y"},
                  c.reproducible);
    std::vector<double> ys(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        double delta = static_cast<double>(values[i]) - ev.center;
        ys[i] = delta * ev.y_scale;
        csv.row({std::to_string(i), fmt_ll(n), format_double(x), format_double(delta),
                 format_double(ys[i])});
    }
    csv.close();

    auto gof = lattice_normal_gof(values);
    std::string hist;
    for (std::size_t i = 0; i < gof.cell_values.size(); ++i)
        hist += std::to_string(gof.cell_values[i]) + " " +
                std::to_string(gof.cell_counts[i]) + "\n";
    write_text_file(out.path("clt_hist.dat"), hist);

    auto mom = compute_moments(ys);
    summary = moments_json(mom);
    summary["n"] = n;
    summary["x_requested"] = x;
    summary["x_lattice"] = ev.x_lattice;
    summary["profile_index"] = ev.k;
    summary["lattice_chi2_p"] = gof.chi2.p_value;
    summary["lattice_chi2_statistic"] = gof.chi2.statistic;
    summary["lattice_cells"] = gof.chi2.cells;
    summary["cell_counts"] = gof.cell_counts;
    summary["fitted_mean"] = gof.fitted_mean;
    summary["fitted_sd"] = gof.fitted_sd;
    write_text_file(out.path("clt_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "Y mean " + format_double(mom.mean) + ", var " + format_double(mom.variance) +
                ", lattice chi2 p " + format_double(gof.chi2.p_value);
    return r;
}

// ------------------------------------------------------------------ cov ----

ExperimentResult run_cov(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    const long long n = *c.n;
    std::vector<VerticalEval> evals;
    evals.push_back(make_vertical_eval(n, c.x0));
    for (double si : c.s)
        evals.push_back(
            make_vertical_eval(n, c.x0 + std::pow(static_cast<double>(n), -si / 2.0)));

    auto rows = run_replicas<std::vector<long long>>(
        c.replicas, c.threads, c.master_seed, [&](int, RandomStream& stream) {
            auto lambda = sample_plancherel_rsk(n, stream);
            std::vector<long long> vals(evals.size());
            for (std::size_t j = 0; j < evals.size(); ++j)
                vals[j] = profile_at_index(lambda, evals[j].k);
            return vals;
        });

    std::vector<std::string> header = {"replica_index", "y0"};
    for (double si : c.s) header.push_back("y_s" + format_double(si));
    CsvWriter csv(out.path("cov.csv"), header, c.reproducible);
    std::vector<std::vector<double>> ys(evals.size(),
                                        std::vector<double>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> cells = {std::to_string(i)};
        for (std::size_t j = 0; j < evals.size(); ++j) {
            ys[j][i] = (static_cast<double>(rows[i][j]) - evals[j].center) * evals[j].y_scale;
            cells.push_back(format_double(ys[j][i]));
        }
        csv.row(cells);
    }
    csv.close();

    json entries = json::array();
    bool monotone = true;
    double prev = -1e300;
    for (std::size_t j = 0; j < c.s.size(); ++j) {
        std::vector<std::pair<double, double>> pairs(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            pairs[i] = {ys[0][i], ys[j + 1][i]};
        auto est = empirical_cov(pairs);
        if (est.covariance <= prev) monotone = false;
        prev = est.covariance;
        entries.push_back(json{{"s", c.s[j]},
                               {"x", evals[j + 1].x_lattice},
                               {"covariance", est.covariance},
                               {"std_error", est.std_error}});
    }
    summary = json{{"n", n},
                   {"x0", c.x0},
                   {"replicas", c.replicas},
                   {"var_y0", compute_moments(ys[0]).variance},
                   {"entries", entries},
                   {"monotone_in_s", monotone}};
    write_text_file(out.path("cov_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = std::string("covariance sweep ") + (monotone ? "monotone" : "NOT monotone") +
                " in s";
    return r;
}

// ---------------------------------------------------------------- kerov ----

ExperimentResult run_kerov(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    const long long n = *c.n;
    const int kmax = c.kmax;
    auto rows = run_replicas<std::vector<double>>(
        c.replicas, c.threads, c.master_seed, [&](int, RandomStream& stream) {
            auto lambda = sample_plancherel_rsk(n, stream);
            RotatedProfile profile(lambda, std::sqrt(static_cast<double>(n)));
            std::vector<double> f(static_cast<std::size_t>(kmax));
            for (int k = 1; k <= kmax; ++k)
                f[static_cast<std::size_t>(k) - 1] = kerov_functional(profile, n, k);
            return f;
        });

    std::vector<std::string> header = {"replica_index"};
    for (int k = 1; k <= kmax; ++k) header.push_back("f" + std::to_string(k));
    CsvWriter csv(out.path("kerov.csv"), header, c.reproducible);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> cells = {std::to_string(i)};
        for (double v : rows[i]) cells.push_back(format_double(v));
        csv.row(cells);
    }
    csv.close();

    json per_k = json::array();
    std::vector<std::vector<double>> cols(static_cast<std::size_t>(kmax),
                                          std::vector<double>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int k = 0; k < kmax; ++k)
            cols[static_cast<std::size_t>(k)][i] = rows[i][static_cast<std::size_t>(k)];
    for (int k = 1; k <= kmax; ++k) {
        auto mom = compute_moments(cols[static_cast<std::size_t>(k) - 1]);
        per_k.push_back(json{{"k", k},
                             {"mean", mom.mean},
                             {"variance", mom.variance},
                             {"limit_variance", k == 1 ? 0.0 : 4.0 / k}});
    }
    json corr = json::array();
    for (int a = 2; a <= kmax; ++a)
        for (int b = a + 1; b <= kmax; ++b)
            corr.push_back(json{{"k1", a},
                                {"k2", b},
                                {"correlation",
                                 pearson_correlation(cols[static_cast<std::size_t>(a) - 1],
                                                     cols[static_cast<std::size_t>(b) - 1])}});
    summary = json{{"n", n}, {"replicas", c.replicas}, {"kmax", kmax},
                   {"per_k", per_k}, {"cross_correlations", corr}};
    write_text_file(out.path("kerov_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "kerov functionals up to k = " + std::to_string(kmax);
    return r;
}

// ----------------------------------------------------------------- edge ----

ExperimentResult run_edge(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    const long long n = *c.n;
    const double z = c.z;
    const long long k2 = ceil_two_sqrt(n);
    const long long zfloor = static_cast<long long>(std::floor(z));
    struct Row {
        long long delta2 = 0;
        long long lambda1 = 0;
        long long conj1 = 0;
        long long conj_at = 0;
        bool ok = false;
    };
    auto rows = run_replicas<Row>(
        c.replicas, c.threads, c.master_seed, [&](int, RandomStream& stream) {
            auto lambda = sample_plancherel_rsk(n, stream);
            auto conj = conjugate(lambda);
            Row r;
            r.delta2 = profile_at_index(lambda, k2);  // omega(2) = 0
            r.lambda1 = lambda.part(1);
            r.conj1 = conj.part(1);
            r.conj_at = conj.part(static_cast<std::size_t>(zfloor) + 1);
            bool lhs = static_cast<double>(r.delta2) <= z;
            bool rhs = less_than_two_sqrt(r.conj_at, n);
            r.ok = lhs == rhs;
            return r;
        });

    const double root_n = std::sqrt(static_cast<double>(n));
    const double n16 = std::pow(static_cast<double>(n), 1.0 / 6.0);
    CsvWriter csv(out.path("edge.csv"),
                  {"replica_index", "delta2", "lambda1", "conj_lambda1",
                   "equivalence_ok", "scaled_edge"},
                  c.reproducible);
    std::size_t ok_count = 0;
    std::vector<std::uint64_t> hist_l1, hist_c1;
    long long lo = rows.front().lambda1, hi = rows.front().lambda1;
    for (const auto& r : rows) {
        lo = std::min({lo, r.lambda1, r.conj1});
        hi = std::max({hi, r.lambda1, r.conj1});
    }
    hist_l1.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    hist_c1.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        ok_count += r.ok;
        // lambda_1 and lambda'_1 of one draw are correlated; the two-sample
        // test uses disjoint replica halves so its samples are independent
        if (i % 2 == 0)
            ++hist_l1[static_cast<std::size_t>(r.lambda1 - lo)];
        else
            ++hist_c1[static_cast<std::size_t>(r.conj1 - lo)];
        csv.row({std::to_string(i), fmt_ll(r.delta2), fmt_ll(r.lambda1), fmt_ll(r.conj1),
                 r.ok ? "1" : "0",
                 format_double((static_cast<double>(r.lambda1) - 2.0 * root_n) / n16)});
    }
    csv.close();

    auto transposition = chi2_two_sample(hist_l1, hist_c1);
    const double fraction =
        static_cast<double>(ok_count) / static_cast<double>(rows.size());
    summary = json{{"n", n},
                   {"z", z},
                   {"replicas", c.replicas},
                   {"equivalence_fraction", fraction},
                   {"transposition_chi2_p", transposition.p_value},
                   {"transposition_chi2_statistic", transposition.statistic}};
    write_text_file(out.path("edge_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "edge equivalence fraction " + format_double(fraction) +
                ", transposition p " + format_double(transposition.p_value);
    r.exit_code = fraction == 1.0 ? 0 : 2;
    return r;
}

// --------------------------------------------------------------- kernel ----

ExperimentResult run_kernel(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    const double t = *c.t;
    const double x = c.x.front();
    const double z = c.z;
    int threads = c.threads > 0 ? c.threads : default_thread_count();
    auto pred = predict_counts(t, x, z, threads);

    auto counts = run_replicas<std::pair<long long, long long>>(
        c.replicas, c.threads, c.master_seed, [&](int, RandomStream& stream) {
            auto lambda = sample_poissonized(t, stream);
            return std::pair{lambda.weight(), count_interval(lambda, t, x, z)};
        });
    CsvWriter csv(out.path("kernel_mc.csv"), {"replica_index", "realized_n", "count"},
                  c.reproducible);
    std::vector<double> values(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        values[i] = static_cast<double>(counts[i].second);
        csv.row({std::to_string(i), fmt_ll(counts[i].first), fmt_ll(counts[i].second)});
    }
    csv.close();

    auto mom = compute_moments(values);
    const double nrep = static_cast<double>(values.size());
    double m4 = 0;
    for (double v : values) m4 += std::pow(v - mom.mean, 4.0);
    m4 /= nrep;
    const double se_mean = std::sqrt(mom.variance / nrep);
    const double se_var = std::sqrt(
        std::max(0.0, m4 - (nrep - 3.0) / (nrep - 1.0) * mom.variance * mom.variance) / nrep);

    summary = json{{"t", pred.t},
                   {"x", pred.x},
                   {"z", pred.z},
                   {"mean_kernel", pred.mean},
                   {"var_kernel", pred.variance},
                   {"mean_lemma1", pred.lemma1_mean},
                   {"var_lemma1", pred.lemma1_variance},
                   {"cutoff", pred.cutoff},
                   {"tail_bound", pred.tail_bound},
                   {"interval_start", pred.interval_start},
                   {"mc", json{{"replicas", c.replicas},
                               {"mean", mom.mean},
                               {"variance", mom.variance},
                               {"se_mean", se_mean},
                               {"se_variance", se_var},
                               {"mean_sigmas", (mom.mean - pred.mean) / se_mean},
                               {"variance_sigmas", (mom.variance - pred.variance) / se_var}}}};
    write_text_file(out.path("kernel_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "kernel mean " + format_double(pred.mean) + " vs MC " +
                format_double(mom.mean) + " (" +
                format_double((mom.mean - pred.mean) / se_mean) + " SE)";
    return r;
}

// --------------------------------------------------------------- series ----

ExperimentResult run_series(const ExperimentConfig& c, OutputTracker& out, json& summary) {
    long long m = c.m;
    if (m < 2) m = degrees_of_freedom(*c.n);
    if (m < 2) m = 2;
    std::vector<double> thetas = c.theta;
    if (thetas.empty()) thetas = {std::numbers::pi / 2};

    auto rows = run_replicas<std::vector<double>>(
        c.replicas, c.threads, c.master_seed, [&](int, RandomStream& stream) {
            return sample_partial_sum(static_cast<int>(m), thetas, stream);
        });
    CsvWriter csv(out.path("series.csv"), {"replica_index", "theta", "s_m_value"},
                  c.reproducible);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < thetas.size(); ++j)
            csv.row({std::to_string(i), format_double(thetas[j]),
                     format_double(rows[i][j])});
    csv.close();

    json cov_entries = json::array();
    for (std::size_t a = 0; a < thetas.size(); ++a)
        for (std::size_t b = a; b < thetas.size(); ++b) {
            std::vector<std::pair<double, double>> pairs(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                pairs[i] = {rows[i][a], rows[i][b]};
            auto est = empirical_cov(pairs);
            cov_entries.push_back(
                json{{"theta_a", thetas[a]},
                     {"theta_b", thetas[b]},
                     {"empirical", est.covariance},
                     {"std_error", est.std_error},
                     {"closed_form",
                      cov_partial_sum(thetas[a], thetas[b], static_cast<int>(m))}});
        }

    json zs_summary = json::array();
    if (!c.s.empty()) {
        std::vector<double> svals = c.s;
        std::sort(svals.begin(), svals.end());
        auto spec = GaussianVectorSpec::make(svals);
        auto zrows = run_replicas<std::vector<double>>(
            c.replicas, c.threads, c.master_seed + 1, [&](int, RandomStream& stream) {
                return sample_limit_vector(spec, stream);
            });
        CsvWriter zcsv(out.path("zs.csv"), {"replica_index", "s", "z_value"},
                       c.reproducible);
        for (std::size_t i = 0; i < zrows.size(); ++i)
            for (std::size_t j = 0; j < svals.size(); ++j)
                zcsv.row({std::to_string(i), format_double(svals[j]),
                          format_double(zrows[i][j])});
        zcsv.close();
        for (std::size_t a = 0; a < svals.size(); ++a)
            for (std::size_t b = a; b < svals.size(); ++b) {
                std::vector<std::pair<double, double>> pairs(zrows.size());
                for (std::size_t i = 0; i < zrows.size(); ++i)
                    pairs[i] = {zrows[i][a], zrows[i][b]};
                auto est = empirical_cov(pairs);
                zs_summary.push_back(json{{"s_a", svals[a]},
                                          {"s_b", svals[b]},
                                          {"empirical", est.covariance},
                                          {"std_error", est.std_error},
                                          {"target", a == b ? 1.0 : svals[a]}});
            }
    }

    summary = json{{"m", m},
                   {"replicas", c.replicas},
                   {"thetas", thetas},
                   {"partial_sum_cov", cov_entries},
                   {"zs_cov", zs_summary}};
    write_text_file(out.path("series_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "series with m = " + std::to_string(m);
    return r;
}

// ------------------------------------------------------------ tightness ----

ExperimentResult run_tightness(const ExperimentConfig& c, OutputTracker& out,
                               json& summary) {
    const long long n = *c.n;
    const double u0 = c.u[0], u1 = c.u[1];
    auto rows = run_replicas<std::pair<double, double>>(
        c.replicas, c.threads, c.master_seed, [&](int, RandomStream& stream) {
            auto lambda = sample_plancherel_rsk(n, stream);
            RotatedProfile profile(lambda, std::sqrt(static_cast<double>(n)));
            return std::pair{y_rotated(profile, n, u0), y_rotated(profile, n, u1)};
        });
    CsvWriter csv(out.path("tightness.csv"), {"replica_index", "n", "y_u0", "y_u1"},
                  c.reproducible);
    std::size_t exceed = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        exceed += std::abs(rows[i].first - rows[i].second) >= c.epsilon;
        csv.row({std::to_string(i), fmt_ll(n), format_double(rows[i].first),
                 format_double(rows[i].second)});
    }
    csv.close();
    const double prob = static_cast<double>(exceed) / static_cast<double>(rows.size());
    summary = json{{"n", n},
                   {"u0", u0},
                   {"u1", u1},
                   {"epsilon", c.epsilon},
                   {"probability", prob},
                   {"replicas", c.replicas}};
    write_text_file(out.path("tightness_summary.json"), summary.dump(2) + "\n");
    ExperimentResult r;
    r.message = "P{|Y(u0) - Y(u1)| >= " + format_double(c.epsilon) + "} = " +
                format_double(prob);
    return r;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, json* summary_out) {
    try {
        config.validate();
    } catch (const std::exception& e) {
        ExperimentResult r;
        r.exit_code = 1;
        r.message = std::string("config error: ") + e.what();
        return r;
    }
    OutputTracker out;
    out.dir = config.out_dir;
    json summary;
    try {
        std::filesystem::create_directories(out.dir);
        ExperimentResult r;
        switch (config.experiment) {
            case ExperimentKind::exact: r = run_exact(config, out, summary); break;
            case ExperimentKind::sample: r = run_sample(config, out, summary); break;
            case ExperimentKind::shape: r = run_shape(config, out, summary); break;
            case ExperimentKind::clt: r = run_clt(config, out, summary); break;
            case ExperimentKind::cov: r = run_cov(config, out, summary); break;
            case ExperimentKind::kerov: r = run_kerov(config, out, summary); break;
            case ExperimentKind::edge: r = run_edge(config, out, summary); break;
            case ExperimentKind::kernel: r = run_kernel(config, out, summary); break;
            case ExperimentKind::series: r = run_series(config, out, summary); break;
            case ExperimentKind::tightness: r = run_tightness(config, out, summary); break;
        }
        r.files = out.files;
        if (summary_out) *summary_out = std::move(summary);
        return r;
    } catch (const IoError& e) {
        out.cleanup();
        ExperimentResult r;
        r.exit_code = 3;
        r.message = std::string("i/o error: ") + e.what();
        return r;
    } catch (const std::filesystem::filesystem_error& e) {
        out.cleanup();
        ExperimentResult r;
        r.exit_code = 3;
        r.message = std::string("i/o error: ") + e.what();
        return r;
    } catch (const std::exception& e) {
        out.cleanup();
        ExperimentResult r;
        r.exit_code = 1;
        r.message = std::string("error: ") + e.what();
        return r;
    }
}

}  // namespace plancherel
