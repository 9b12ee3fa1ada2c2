#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recharge/bandit.hpp"
#include "recharge/instance.hpp"

namespace recharge {

struct RunStats {
    int64_t count = 0;
    double mean = 0.0;
    double se = 0.0; // standard error of the mean
    double min = 0.0;
    double max = 0.0;
};

RunStats summarize(const std::vector<double>& xs);

// shortest decimal that round-trips the double (printf %.17g)
std::string format_double(double v);

uint64_t fnv1a(const std::string& text);
std::string hash_hex(const std::string& text);

// one CSV with a header row; every cell preformatted
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// $RECHARGE_OUT if set, else the current directory
std::string default_out_dir();

// "7,9,12" or "40x5" (5 seeds starting at 40)
std::vector<uint64_t> parse_seeds(const std::string& text);

struct ExperimentConfig {
    std::string algo = "rti"; // rti | greedy | etc
    int64_t horizon = 0;
    std::vector<uint64_t> seeds;
    int64_t window_start = 1;
    NoiseModel noise;                 // etc only
    std::optional<double> epsilon;    // etc only; defaults to the tuned value
    std::optional<double> delta;
    int64_t dp_budget = 10'000'000;
    int threads = 1;
};

struct SeedRow {
    uint64_t seed = 0;
    double mean_payoff = 0.0; // over [window_start, horizon]
    double total = 0.0;
    double regret = 0.0;        // etc only
    int64_t explore_rounds = 0; // etc only
};

struct ExperimentResult {
    std::vector<SeedRow> rows; // sorted by seed
    RunStats stats;            // over per-seed mean payoffs
    double lp_value = 0.0;     // relaxed per-round optimum of the true instance
    double gamma_k = 0.0;
    double reference = 0.0; // gamma_k * lp_value, the guaranteed per-round level
    double benchmark_total = 0.0;       // etc: DP optimum or horizon * lp_value
    bool benchmark_is_upper_bound = false;
};

// Replications fan out over worker threads when configured; rows are keyed by
// seed, so aggregation does not depend on completion order.
ExperimentResult run_experiment(const Instance& inst, const ExperimentConfig& cfg);

// canonical "key=value;" encoding used for the config hash in manifests
std::string canonical_config(const std::string& command, const std::vector<std::pair<std::string, std::string>>& fields);

// small JSON manifest next to each output: command, config echo, config hash,
// produced files; no timestamps, so reruns are byte-identical
void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& fields,
                    const std::vector<std::string>& outputs);

} // namespace recharge
