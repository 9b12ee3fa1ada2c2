#include "recharge/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include "recharge/benchmarks.hpp"
#include "recharge/errors.hpp"
#include "recharge/scheduler.hpp"
#include "recharge/submodular.hpp"

namespace recharge {

RunStats summarize(const std::vector<double>& xs) {
    if (xs.empty()) throw ConfigError("summarize: empty sample");
    RunStats s;
    s.count = static_cast<int64_t>(xs.size());
    s.min = xs.front();
    s.max = xs.front();
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
    }
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.se = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
    }
    return s;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

uint64_t fnv1a(const std::string& text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(const std::string& text) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size()) throw ConfigError("csv row width mismatch");
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

std::string default_out_dir() {
    const char* env = std::getenv("RECHARGE_OUT");
    return (env && *env) ? env : ".";
}

std::vector<uint64_t> parse_seeds(const std::string& text) {
    std::vector<uint64_t> seeds;
    if (text.empty()) throw ConfigError("seeds: empty specification");
    const auto x = text.find('x');
    try {
        if (x != std::string::npos) {
            const uint64_t base = std::stoull(text.substr(0, x));
            const uint64_t count = std::stoull(text.substr(x + 1));
            if (count == 0 || count > 1'000'000) throw ConfigError("seeds: bad count");
            for (uint64_t i = 0; i < count; ++i) seeds.push_back(base + i);
        } else {
            std::stringstream ss(text);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) continue;
                seeds.push_back(std::stoull(tok));
            }
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("seeds: cannot parse '" + text + "' (use \"1,2,3\" or \"BASExCOUNT\")");
    }
    if (seeds.empty()) throw ConfigError("seeds: none given");
    return seeds;
}

namespace {

SeedRow run_one(const Instance& inst, const ExperimentConfig& cfg, const DelayProfile& prof,
                uint64_t seed) {
    SeedRow row;
    row.seed = seed;
    if (cfg.algo == "rti") {
        row.mean_payoff = schedule_mean_payoff(inst.arms, prof, inst.k, seed, cfg.horizon,
                                               cfg.window_start);
        row.total = row.mean_payoff * static_cast<double>(cfg.horizon - cfg.window_start + 1);
    } else if (cfg.algo == "greedy") {
        GreedyResult g = greedy_baseline(inst.arms, inst.k, cfg.horizon);
        double window = 0.0;
        for (int64_t t = cfg.window_start; t <= cfg.horizon; ++t)
            window += g.per_round[static_cast<size_t>(t - 1)];
        row.mean_payoff = window / static_cast<double>(cfg.horizon - cfg.window_start + 1);
        row.total = g.total;
    } else if (cfg.algo == "etc") {
        StochasticEnv env(inst, cfg.noise, seed);
        EpsilonChoice tuned = tune_epsilon(inst.n, inst.k, inst.tau_max, cfg.horizon);
        const double eps = cfg.epsilon.value_or(tuned.epsilon);
        const double delta = cfg.delta.value_or(tuned.delta);
        EtcResult r = etc_run(env, inst.k, cfg.horizon, eps, delta, seed, cfg.dp_budget);
        double window = 0.0;
        for (int64_t t = cfg.window_start; t <= cfg.horizon; ++t)
            window += r.ledger.per_round[static_cast<size_t>(t - 1)];
        row.mean_payoff = window / static_cast<double>(cfg.horizon - cfg.window_start + 1);
        row.total = r.ledger.realized_total;
        row.regret = r.ledger.regret();
        row.explore_rounds = r.ledger.explore_rounds;
    } else {
        throw ConfigError("unknown algorithm '" + cfg.algo + "' (rti, greedy or etc)");
    }
    return row;
}

} // namespace

ExperimentResult run_experiment(const Instance& inst, const ExperimentConfig& cfg) {
    validate(inst);
    if (cfg.horizon < 1) throw ConfigError("experiment horizon must be >= 1");
    if (cfg.seeds.empty()) throw ConfigError("experiment needs at least one seed");
    if (cfg.window_start < 1 || cfg.window_start > cfg.horizon)
        throw ConfigError("experiment window_start must lie in [1, horizon]");

    ExperimentResult res;
    const LpSolution sol = solve_extreme(build_lp(inst));
    const DelayProfile prof = extract_profile(sol);
    res.lp_value = sol.value;
    res.gamma_k = gamma_factor(inst.k);
    res.reference = res.gamma_k * res.lp_value;

    res.rows.resize(cfg.seeds.size());
    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || cfg.seeds.size() == 1) {
        for (size_t i = 0; i < cfg.seeds.size(); ++i)
            res.rows[i] = run_one(inst, cfg, prof, cfg.seeds[i]);
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<size_t> next{0};
        for (int w = 0; w < threads; ++w)
            futs.push_back(std::async(std::launch::async, [&]() {
                while (true) {
                    const size_t i = next.fetch_add(1);
                    if (i >= cfg.seeds.size()) return;
                    res.rows[i] = run_one(inst, cfg, prof, cfg.seeds[i]);
                }
            }));
        for (auto& f : futs) f.get();
    }
    std::sort(res.rows.begin(), res.rows.end(),
              [](const SeedRow& a, const SeedRow& b) { return a.seed < b.seed; });

    std::vector<double> means;
    means.reserve(res.rows.size());
    for (const auto& r : res.rows) means.push_back(r.mean_payoff);
    res.stats = summarize(means);

    if (cfg.algo == "etc") {
        if (dp_within_budget(inst.arms, cfg.horizon, cfg.dp_budget)) {
            res.benchmark_total = dp_opt(inst.arms, inst.k, cfg.horizon, cfg.dp_budget);
            res.benchmark_is_upper_bound = false;
        } else {
            res.benchmark_total = static_cast<double>(cfg.horizon) * res.lp_value;
            res.benchmark_is_upper_bound = true;
        }
    }
    return res;
}

std::string canonical_config(const std::string& command,
                             const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string s = "command=" + command + ";";
    for (const auto& [k, v] : fields) s += k + "=" + v + ";";
    return s;
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& fields,
                    const std::vector<std::string>& outputs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << "{\n";
    out << "  \"command\": \"" << command << "\",\n";
    out << "  \"config\": {";
    for (size_t i = 0; i < fields.size(); ++i)
        out << (i ? ", " : "") << "\"" << fields[i].first << "\": \"" << fields[i].second << "\"";
    out << "},\n";
    out << "  \"config_hash\": \"" << hash_hex(canonical_config(command, fields)) << "\",\n";
    out << "  \"outputs\": [";
    for (size_t i = 0; i < outputs.size(); ++i) out << (i ? ", " : "") << "\"" << outputs[i] << "\"";
    out << "]\n";
    out << "}\n";
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

} // namespace recharge
