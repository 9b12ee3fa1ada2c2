// command line front end: generate instances, solve the planning relaxation,
// run the interleaved scheduler, run the explore-then-commit learner, and run
// the property batteries.  every run that writes files also writes a manifest
// with a hash of its own configuration and no timestamps, so reruns with the
// same flags are byte-identical.

#include <cinttypes>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recharge/bandit.hpp"
#include "recharge/benchmarks.hpp"
#include "recharge/delay_lp.hpp"
#include "recharge/errors.hpp"
#include "recharge/experiments.hpp"
#include "recharge/instance.hpp"
#include "recharge/scheduler.hpp"
#include "recharge/submodular.hpp"
#include "recharge/verify.hpp"

namespace {

using namespace recharge;

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_gen(const std::string& kind, int n, int k, int tau_max, uint64_t seed,
            const std::string& out) {
    ensure_dir(out);
    const Instance inst = generate(parse_kind(kind), n, k, tau_max, seed);
    const std::string path = join_path(out, "instance.json");
    save_instance(inst, path);
    write_manifest(join_path(out, "manifest_gen.json"), "gen",
                   {{"kind", kind},
                    {"n", std::to_string(n)},
                    {"k", std::to_string(k)},
                    {"tau_max", std::to_string(tau_max)},
                    {"seed", std::to_string(seed)}},
                   {"instance.json"});
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int cmd_solve_lp(const std::string& instance_path, const std::string& out) {
    ensure_dir(out);
    const Instance inst = load_instance(instance_path);
    const LpSolution sol = solve_extreme(build_lp(inst));
    const DelayProfile prof = extract_profile(sol);
    const std::string path = join_path(out, "solution.json");
    {
        const std::string text = profile_to_json_text(sol, prof);
        FILE* f = std::fopen(path.c_str(), "wb");
        if (!f) throw ConfigError("cannot write " + path);
        std::fwrite(text.data(), 1, text.size(), f);
        std::fclose(f);
    }
    write_manifest(join_path(out, "manifest_solve_lp.json"), "solve-lp",
                   {{"instance", instance_path}}, {"solution.json"});
    std::printf("lp value %s, %zu rates, %zu exact arms%s\n",
                format_double(sol.value).c_str(), sol.nonzeros.size(),
                prof.regular.size(), prof.irregular ? ", one split arm" : "");
    return 0;
}

int cmd_plan(const std::string& instance_path, uint64_t seed, int64_t horizon,
             const std::string& out) {
    if (horizon < 1) throw ConfigError("--horizon must be at least 1");
    ensure_dir(out);
    const Instance inst = load_instance(instance_path);
    const LpSolution sol = solve_extreme(build_lp(inst));
    const DelayProfile prof = extract_profile(sol);
    const auto trace = run_trace(inst.arms, prof, inst.k, seed, horizon);

    std::vector<std::vector<std::string>> rows;
    rows.reserve(trace.size());
    double total = 0.0;
    for (const TraceRow& row : trace) {
        total += row.payoff;
        rows.push_back({std::to_string(row.t), join_ints(row.candidate_set),
                        join_ints(row.played), format_double(row.payoff)});
    }
    write_csv(join_path(out, "trace.csv"), {"t", "candidates", "played", "payoff"}, rows);

    const double g = gamma_factor(inst.k);
    write_csv(join_path(out, "plan_summary.csv"),
              {"horizon", "mean_payoff", "lp_value", "gamma_k", "reference"},
              {{std::to_string(horizon), format_double(total / static_cast<double>(horizon)),
                format_double(sol.value), format_double(g), format_double(g * sol.value)}});
    write_manifest(join_path(out, "manifest_plan.json"), "plan",
                   {{"instance", instance_path},
                    {"seed", std::to_string(seed)},
                    {"horizon", std::to_string(horizon)}},
                   {"trace.csv", "plan_summary.csv"});
    std::printf("mean payoff %s over %" PRId64 " rounds (reference %s)\n",
                format_double(total / static_cast<double>(horizon)).c_str(), horizon,
                format_double(g * sol.value).c_str());
    return 0;
}

int cmd_simulate(const std::string& instance_path, const std::string& algos_text,
                 const std::string& seeds_text, int64_t horizon, int64_t window_start,
                 const std::string& noise_text, double epsilon, double delta,
                 int64_t budget, int threads, const std::string& out) {
    ensure_dir(out);
    const Instance inst = load_instance(instance_path);
    const std::vector<std::string> algos = split_list(algos_text);
    if (algos.empty()) throw ConfigError("--algo needs at least one of rti, greedy, etc");

    ExperimentConfig cfg;
    cfg.horizon = horizon;
    cfg.seeds = parse_seeds(seeds_text);
    cfg.window_start = window_start;
    cfg.noise = parse_noise(noise_text);
    if (epsilon > 0.0) cfg.epsilon = epsilon;
    if (delta > 0.0) cfg.delta = delta;
    cfg.dp_budget = budget;
    cfg.threads = threads;

    std::vector<std::string> outputs;
    std::vector<std::vector<std::string>> summary;
    for (const std::string& algo : algos) {
        cfg.algo = algo;
        const ExperimentResult res = run_experiment(inst, cfg);
        std::vector<std::vector<std::string>> rows;
        rows.reserve(res.rows.size());
        for (const SeedRow& r : res.rows) {
            rows.push_back({std::to_string(r.seed), format_double(r.mean_payoff),
                            format_double(r.total), format_double(r.regret),
                            std::to_string(r.explore_rounds)});
        }
        const std::string name = "seeds_" + algo + ".csv";
        write_csv(join_path(out, name),
                  {"seed", "mean_payoff", "total", "regret", "explore_rounds"}, rows);
        outputs.push_back(name);
        summary.push_back({algo, std::to_string(res.stats.count),
                           format_double(res.stats.mean), format_double(res.stats.se),
                           format_double(res.stats.min), format_double(res.stats.max),
                           format_double(res.lp_value), format_double(res.gamma_k),
                           format_double(res.reference), format_double(res.benchmark_total),
                           res.benchmark_is_upper_bound ? "1" : "0"});
        std::printf("%s: mean %s se %s over %" PRId64 " seeds\n", algo.c_str(),
                    format_double(res.stats.mean).c_str(),
                    format_double(res.stats.se).c_str(), res.stats.count);
    }
    write_csv(join_path(out, "simulate_summary.csv"),
              {"algo", "seeds", "mean", "se", "min", "max", "lp_value", "gamma_k",
               "reference", "benchmark_total", "benchmark_is_upper_bound"},
              summary);
    outputs.push_back("simulate_summary.csv");
    write_manifest(join_path(out, "manifest_simulate.json"), "simulate",
                   {{"instance", instance_path},
                    {"algo", algos_text},
                    {"seeds", seeds_text},
                    {"horizon", std::to_string(horizon)},
                    {"window_start", std::to_string(window_start)},
                    {"noise", noise_text},
                    {"epsilon", format_double(epsilon)},
                    {"delta", format_double(delta)},
                    {"budget", std::to_string(budget)}},
                   outputs);
    return 0;
}

int cmd_learn(const std::string& instance_path, const std::string& seeds_text,
              int64_t horizon, const std::string& noise_text, double epsilon,
              double delta, int64_t budget, const std::string& out) {
    ensure_dir(out);
    const Instance inst = load_instance(instance_path);
    const NoiseModel noise = parse_noise(noise_text);
    const std::vector<uint64_t> seeds = parse_seeds(seeds_text);

    double eps = epsilon, del = delta;
    if (eps <= 0.0 || del <= 0.0) {
        const EpsilonChoice tuned = tune_epsilon(inst.n, inst.k, inst.tau_max, horizon);
        if (eps <= 0.0) eps = tuned.epsilon;
        if (del <= 0.0) del = tuned.delta;
    }

    std::vector<std::string> outputs;
    std::vector<std::vector<std::string>> summary;
    for (uint64_t seed : seeds) {
        StochasticEnv env(inst, noise, seed);
        const EtcResult res = etc_run(env, inst.k, horizon, eps, del, seed, budget);
        const RegretLedger& led = res.ledger;

        std::vector<std::vector<std::string>> rows;
        rows.reserve(led.per_round.size());
        double cumulative = 0.0;
        for (size_t i = 0; i < led.per_round.size(); ++i) {
            cumulative += led.per_round[i];
            // benchmark prorated to the current round for a comparable curve
            const double bench = led.benchmark_total * static_cast<double>(i + 1) /
                                 static_cast<double>(led.horizon);
            rows.push_back({std::to_string(i + 1), format_double(led.per_round[i]),
                            format_double(cumulative), format_double(bench),
                            format_double(led.gamma_k * bench - cumulative)});
        }
        const std::string name = "ledger_" + std::to_string(seed) + ".csv";
        write_csv(join_path(out, name),
                  {"t", "realized", "cumulative", "benchmark", "regret"}, rows);
        outputs.push_back(name);
        summary.push_back({std::to_string(seed), format_double(led.epsilon),
                           format_double(led.delta), std::to_string(led.m),
                           std::to_string(led.explore_rounds),
                           format_double(led.realized_total),
                           format_double(led.benchmark_total),
                           led.benchmark_is_upper_bound ? "1" : "0",
                           format_double(led.gamma_k), format_double(led.regret())});
        std::printf("seed %" PRIu64 ": explored %" PRId64 " rounds, total %s, regret %s%s\n",
                    seed, led.explore_rounds, format_double(led.realized_total).c_str(),
                    format_double(led.regret()).c_str(),
                    led.benchmark_is_upper_bound ? " (pessimistic benchmark)" : "");
    }
    write_csv(join_path(out, "learn_summary.csv"),
              {"seed", "epsilon", "delta", "m", "explore_rounds", "realized_total",
               "benchmark_total", "benchmark_is_upper_bound", "gamma_k", "regret"},
              summary);
    outputs.push_back("learn_summary.csv");
    write_manifest(join_path(out, "manifest_learn.json"), "learn",
                   {{"instance", instance_path},
                    {"seeds", seeds_text},
                    {"horizon", std::to_string(horizon)},
                    {"noise", noise_text},
                    {"epsilon", format_double(eps)},
                    {"delta", format_double(del)},
                    {"budget", std::to_string(budget)}},
                   outputs);
    return 0;
}

int report_and_write(const std::vector<CheckReport>& reports, const std::string& command,
                     uint64_t seed, const std::string& csv_name, const std::string& out) {
    ensure_dir(out);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(reports.size());
    bool all_ok = true;
    for (const CheckReport& rep : reports) {
        rows.push_back({rep.name, std::to_string(rep.trials), std::to_string(rep.failures),
                        format_double(rep.worst_margin)});
        std::printf("[%s] %-34s trials=%-5d failures=%-3d worst_margin=%.3g\n",
                    rep.ok() ? "PASS" : "FAIL", rep.name.c_str(), rep.trials,
                    rep.failures, rep.worst_margin);
        if (!rep.ok()) {
            all_ok = false;
            if (!rep.detail.empty()) std::printf("       %s\n", rep.detail.c_str());
        }
    }
    write_csv(join_path(out, csv_name), {"check", "trials", "failures", "worst_margin"}, rows);
    write_manifest(join_path(out, "manifest_" + command + ".json"), command,
                   {{"seed", std::to_string(seed)}}, {csv_name});
    std::printf("%s\n", all_ok ? "all checks passed" : "checks FAILED");
    return all_ok ? 0 : 1;
}

int cmd_oracle(uint64_t seed, const std::string& out) {
    std::vector<CheckReport> reports;
    reports.push_back(check_lp_upper_bounds_dp(60, seed));
    reports.push_back(check_dp_superadditive(30, seed));
    reports.push_back(check_gap_bounds(300, seed));
    reports.push_back(check_linear_lower_bound(300, seed));
    reports.push_back(check_exclusive_coupling(200, seed));
    reports.push_back(check_closure_concavity(60, seed));
    reports.push_back(check_closure_matches_fractional_bound(200, seed));
    reports.push_back(check_multilinear_vertex_equality(200, seed));
    reports.push_back(check_schedule_meets_multilinear(6, 300, seed));
    return report_and_write(reports, "oracle", seed, "oracle_report.csv", out);
}

int cmd_verify(uint64_t seed, const std::string& out) {
    return report_and_write(verify_all(seed), "verify", seed, "verify_report.csv", out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planning and learning for bandits with recharging payoffs"};
    app.require_subcommand(1);

    std::string out = default_out_dir();
    app.add_option("--out", out, "output directory (default $RECHARGE_OUT or .)")
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_kind = "random-monotone";
    int gen_n = 0, gen_k = 0, gen_tau = 0;
    uint64_t gen_seed = 1;
    gen->add_option("--kind", gen_kind, "heaviside | concave | random-monotone")
        ->capture_default_str();
    gen->add_option("--n", gen_n, "number of arms")->required();
    gen->add_option("--k", gen_k, "plays per round")->required();
    gen->add_option("--tau-max", gen_tau, "global recovery bound")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();

    // solve-lp
    auto* solve = app.add_subcommand("solve-lp", "solve the relaxation to a vertex");
    std::string solve_instance;
    solve->add_option("--instance", solve_instance, "instance file")->required();

    // plan
    auto* plan = app.add_subcommand("plan", "run the interleaved schedule");
    std::string plan_instance;
    uint64_t plan_seed = 1;
    int64_t plan_horizon = 0;
    plan->add_option("--instance", plan_instance, "instance file")->required();
    plan->add_option("--seed", plan_seed, "schedule seed")->capture_default_str();
    plan->add_option("--horizon", plan_horizon, "rounds to play")->required();

    // simulate
    auto* sim = app.add_subcommand("simulate", "replicate algorithms across seeds");
    std::string sim_instance, sim_algos = "rti", sim_seeds = "1", sim_noise = "bernoulli";
    int64_t sim_horizon = 0, sim_window = 1, sim_budget = kDefaultStateRoundBudget;
    double sim_eps = 0.0, sim_delta = 0.0;
    int sim_threads = 1;
    sim->add_option("--instance", sim_instance, "instance file")->required();
    sim->add_option("--algo", sim_algos, "comma list of rti, greedy, etc")
        ->capture_default_str();
    sim->add_option("--seeds", sim_seeds, "list '1,2,3' or 'BASExCOUNT'")
        ->capture_default_str();
    sim->add_option("--horizon", sim_horizon, "rounds per replication")->required();
    sim->add_option("--window-start", sim_window, "first round of the scoring window")
        ->capture_default_str();
    sim->add_option("--noise", sim_noise, "none | bernoulli | uniform[:W] (etc only)")
        ->capture_default_str();
    sim->add_option("--epsilon", sim_eps, "etc accuracy override");
    sim->add_option("--delta", sim_delta, "etc confidence override");
    sim->add_option("--budget", sim_budget, "state-round budget for the exact benchmark")
        ->capture_default_str();
    sim->add_option("--threads", sim_threads, "worker threads across seeds")
        ->capture_default_str();

    // learn
    auto* learn = app.add_subcommand("learn", "explore-then-commit with regret ledger");
    std::string learn_instance, learn_seeds = "1", learn_noise = "bernoulli";
    int64_t learn_horizon = 0, learn_budget = kDefaultStateRoundBudget;
    double learn_eps = 0.0, learn_delta = 0.0;
    learn->add_option("--instance", learn_instance, "instance file")->required();
    learn->add_option("--seeds", learn_seeds, "list '1,2,3' or 'BASExCOUNT'")
        ->capture_default_str();
    learn->add_option("--horizon", learn_horizon, "total rounds (known horizon)")->required();
    learn->add_option("--noise", learn_noise, "none | bernoulli | uniform[:W]")
        ->capture_default_str();
    learn->add_option("--epsilon", learn_eps, "accuracy (default: horizon-tuned)");
    learn->add_option("--delta", learn_delta, "confidence (default: 1/horizon)");
    learn->add_option("--budget", learn_budget, "state-round budget for the exact benchmark")
        ->capture_default_str();

    // oracle / verify
    auto* oracle = app.add_subcommand("oracle", "brute-force reference sweeps");
    uint64_t oracle_seed = 1;
    oracle->add_option("--seed", oracle_seed, "sweep seed")->capture_default_str();
    auto* verify = app.add_subcommand("verify", "full property battery");
    uint64_t verify_seed = 1;
    verify->add_option("--seed", verify_seed, "sweep seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // bad flags are configuration errors
    }

    try {
        if (*gen) return cmd_gen(gen_kind, gen_n, gen_k, gen_tau, gen_seed, out);
        if (*solve) return cmd_solve_lp(solve_instance, out);
        if (*plan) return cmd_plan(plan_instance, plan_seed, plan_horizon, out);
        if (*sim) {
            return cmd_simulate(sim_instance, sim_algos, sim_seeds, sim_horizon, sim_window,
                                sim_noise, sim_eps, sim_delta, sim_budget, sim_threads, out);
        }
        if (*learn) {
            return cmd_learn(learn_instance, learn_seeds, learn_horizon, learn_noise,
                             learn_eps, learn_delta, learn_budget, out);
        }
        if (*oracle) return cmd_oracle(oracle_seed, out);
        if (*verify) return cmd_verify(verify_seed, out);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
