#include "recharge/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "recharge/benchmarks.hpp"
#include "recharge/errors.hpp"
#include "recharge/submodular.hpp"

namespace recharge {

NoiseModel parse_noise(const std::string& text) {
    NoiseModel m;
    if (text == "bernoulli") {
        m.kind = NoiseKind::bernoulli;
        return m;
    }
    if (text == "none") {
        m.kind = NoiseKind::none;
        return m;
    }
    if (text.rfind("uniform", 0) == 0) {
        m.kind = NoiseKind::uniform;
        if (text.size() > 7) {
            if (text[7] != ':') throw ConfigError("noise: expected uniform or uniform:W");
            try {
                m.half_width = std::stod(text.substr(8));
            } catch (const std::exception&) {
                throw ConfigError("noise: cannot parse half-width in '" + text + "'");
            }
            if (!(m.half_width >= 0.0 && m.half_width <= 0.5))
                throw ConfigError("noise: half-width must be in [0, 0.5]");
        }
        return m;
    }
    throw ConfigError("unknown noise model '" + text + "' (bernoulli, uniform[:W] or none)");
}

std::string noise_name(const NoiseModel& noise) {
    switch (noise.kind) {
        case NoiseKind::none: return "none";
        case NoiseKind::bernoulli: return "bernoulli";
        case NoiseKind::uniform: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "uniform:%.17g", noise.half_width);
            return buf;
        }
    }
    return "?";
}

StochasticEnv::StochasticEnv(std::vector<PayoffFunction> arms, int tau_max, NoiseModel noise,
                             uint64_t seed)
    : arms_(std::move(arms)), tau_max_(tau_max), noise_(noise), rng_(seed, 1ULL << 40) {
    if (arms_.empty()) throw ConfigError("env: no arms");
    if (tau_max_ < 1) throw ConfigError("env: tau_max must be >= 1");
    for (const auto& f : arms_)
        if (f.recovery_time > tau_max_)
            throw ConfigError("env: an arm recovers slower than the declared tau_max");
    last_play_.assign(arms_.size(), 0);
}

StochasticEnv::StochasticEnv(const Instance& inst, NoiseModel noise, uint64_t seed)
    : StochasticEnv(inst.arms, inst.tau_max, noise, seed) {}

double StochasticEnv::mean_payoff(int arm, int64_t delay) const {
    return evaluate(arms_[static_cast<size_t>(arm)], delay);
}

int64_t StochasticEnv::current_delay(int arm, int64_t t) const {
    return t - last_play_[static_cast<size_t>(arm)];
}

void StochasticEnv::reanchor(int64_t t) {
    for (auto& lp : last_play_) lp = t;
}

double StochasticEnv::play(int arm, int64_t t) {
    if (arm < 0 || arm >= num_arms()) throw ConfigError("env: arm index out of range");
    const int64_t delay = t - last_play_[static_cast<size_t>(arm)];
    if (delay < 1) throw ConfigError("env: round clock must advance between plays of an arm");
    const double p = mean_payoff(arm, delay);
    double realized = p;
    switch (noise_.kind) {
        case NoiseKind::none: break;
        case NoiseKind::bernoulli: realized = rng_.next_unit() < p ? 1.0 : 0.0; break;
        case NoiseKind::uniform: {
            const double hw = std::min({noise_.half_width, p, 1.0 - p});
            realized = p + (2.0 * rng_.next_unit() - 1.0) * hw;
            break;
        }
    }
    last_play_[static_cast<size_t>(arm)] = t;
    history_.push_back({t, arm, delay, realized});
    return realized;
}

int64_t required_samples(double eps, double delta, int n, int tau_max) {
    if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("required_samples: eps must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("required_samples: delta must be in (0,1)");
    if (n < 1 || tau_max < 1) throw ConfigError("required_samples: n and tau_max must be >= 1");
    const double m =
        std::log(2.0 * static_cast<double>(tau_max) * static_cast<double>(n) / delta) /
        (2.0 * eps * eps);
    return static_cast<int64_t>(std::ceil(m));
}

double EstimateTable::estimate(int arm, int tau) const {
    const auto& c = count[static_cast<size_t>(arm)][static_cast<size_t>(tau - 1)];
    if (c == 0) throw ConfigError("estimate: no samples for arm " + std::to_string(arm) +
                                  " at delay " + std::to_string(tau));
    return sum[static_cast<size_t>(arm)][static_cast<size_t>(tau - 1)] / static_cast<double>(c);
}

std::vector<PayoffFunction> EstimateTable::as_payoffs() const {
    std::vector<PayoffFunction> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)].recovery_time = tau_max;
        out[static_cast<size_t>(i)].values.resize(static_cast<size_t>(tau_max));
        for (int tau = 1; tau <= tau_max; ++tau)
            out[static_cast<size_t>(i)].values[static_cast<size_t>(tau - 1)] = estimate(i, tau);
    }
    return out;
}

ExplorationLog explore(StochasticEnv& env, int64_t m, int k) {
    if (m < 1) throw ConfigError("explore: need m >= 1 samples per cell");
    if (k < 1) throw ConfigError("explore: k must be >= 1");
    const int n = env.num_arms();
    const int tau_max = env.tau_max();

    ExplorationLog log;
    log.estimates.n = n;
    log.estimates.tau_max = tau_max;
    log.estimates.count.assign(static_cast<size_t>(n),
                               std::vector<int64_t>(static_cast<size_t>(tau_max), 0));
    log.estimates.sum.assign(static_cast<size_t>(n),
                             std::vector<double>(static_cast<size_t>(tau_max), 0.0));

    std::vector<std::vector<int64_t>> need(static_cast<size_t>(n),
                                           std::vector<int64_t>(static_cast<size_t>(tau_max), m));
    int64_t cells_left = static_cast<int64_t>(n) * tau_max;
    std::vector<int64_t> last_play(static_cast<size_t>(n), 0);

    // generous safety cap; the packer is far below it in practice
    const int64_t round_cap = 8 * static_cast<int64_t>(n) * m * tau_max * tau_max + 4 * tau_max + 16;

    int64_t t = 0;
    std::vector<int> plays;
    while (cells_left > 0) {
        ++t;
        if (t > round_cap) throw SolverError("explore: packer exceeded its round cap");
        plays.clear();
        // first serve arms sitting exactly on a needed delay
        for (int i = 0; i < n && static_cast<int>(plays.size()) < k; ++i) {
            const int64_t delay = t - last_play[static_cast<size_t>(i)];
            if (delay <= tau_max && need[static_cast<size_t>(i)][static_cast<size_t>(delay - 1)] > 0)
                plays.push_back(i);
        }
        // spend leftover slots resetting arms that overshot every remaining target
        for (int i = 0; i < n && static_cast<int>(plays.size()) < k; ++i) {
            if (std::find(plays.begin(), plays.end(), i) != plays.end()) continue;
            const int64_t delay = t - last_play[static_cast<size_t>(i)];
            int64_t largest_needed = 0;
            for (int tau = tau_max; tau >= 1; --tau)
                if (need[static_cast<size_t>(i)][static_cast<size_t>(tau - 1)] > 0) {
                    largest_needed = tau;
                    break;
                }
            if (largest_needed > 0 && delay > largest_needed) plays.push_back(i);
        }
        std::sort(plays.begin(), plays.end());

        double round_payoff = 0.0;
        for (int i : plays) {
            const int64_t delay = t - last_play[static_cast<size_t>(i)];
            const double realized = env.play(i, t);
            round_payoff += realized;
            last_play[static_cast<size_t>(i)] = t;
            if (delay <= tau_max && need[static_cast<size_t>(i)][static_cast<size_t>(delay - 1)] > 0) {
                const int tau = static_cast<int>(delay);
                auto& cell_need = need[static_cast<size_t>(i)][static_cast<size_t>(tau - 1)];
                --cell_need;
                if (cell_need == 0) --cells_left;
                log.estimates.count[static_cast<size_t>(i)][static_cast<size_t>(tau - 1)] += 1;
                log.estimates.sum[static_cast<size_t>(i)][static_cast<size_t>(tau - 1)] += realized;
                log.audit.push_back({i, tau, t, delay});
            }
        }
        log.per_round.push_back(round_payoff);
        log.realized_total += round_payoff;
    }
    log.rounds_used = t;
    return log;
}

EpsilonChoice tune_epsilon(int n, int k, int tau_max, int64_t horizon) {
    if (n < 1 || k < 1 || tau_max < 1) throw ConfigError("tune_epsilon: sizes must be >= 1");
    if (horizon < 2) throw ConfigError("tune_epsilon: horizon must be >= 2");
    const double nd = n, td = tau_max, kd = k, Td = static_cast<double>(horizon);
    const double raw = std::cbrt(nd * td * td * std::log(td * nd * Td) / (kd * Td));
    EpsilonChoice c;
    c.epsilon = std::min(raw, 1.0 - 1e-9);
    c.delta = 1.0 / Td;
    return c;
}

EtcResult etc_run(StochasticEnv& env, int k, int64_t horizon, double eps, double delta,
                  uint64_t seed, int64_t dp_budget, bool record_trace) {
    if (horizon < 1) throw ConfigError("etc_run: horizon must be >= 1");
    const int n = env.num_arms();
    const int tau_max = env.tau_max();

    EtcResult res;
    auto& ledger = res.ledger;
    ledger.horizon = horizon;
    ledger.k = k;
    ledger.gamma_k = gamma_factor(k);
    ledger.epsilon = eps;
    ledger.delta = delta;
    ledger.m = required_samples(eps, delta, n, tau_max);
    ledger.per_round.reserve(static_cast<size_t>(horizon));

    ExplorationLog ex = explore(env, ledger.m, k);
    if (ex.rounds_used >= horizon)
        throw BudgetExceeded("etc_run: exploration needs " + std::to_string(ex.rounds_used) +
                             " rounds but the horizon is only " + std::to_string(horizon) +
                             "; increase the horizon or relax eps/delta");
    res.estimates = ex.estimates;
    ledger.explore_rounds = ex.rounds_used;
    ledger.per_round = ex.per_round;
    ledger.realized_total = ex.realized_total;

    // plan on the estimates; delays are only known to be bounded by tau_max,
    // so every arm's table runs over the full 1..tau_max range
    const std::vector<PayoffFunction> hat = ex.estimates.as_payoffs();
    const DelayLp lp = build_lp(hat, k);
    const LpSolution sol = solve_extreme(lp);
    res.lp_value_hat = sol.value;
    res.profile_hat = extract_profile(sol);

    const int64_t boundary = ex.rounds_used;
    env.reanchor(boundary);
    SchedulerState st = init_schedule(res.profile_hat, n, k, seed);
    auto estimate_at = [&](int arm, int64_t delay) {
        return evaluate(hat[static_cast<size_t>(arm)], delay);
    };
    for (int64_t local = 1; local <= horizon - boundary; ++local) {
        RoundOutcome o = play_round(st, local, estimate_at);
        double realized = 0.0;
        for (int arm : o.played) realized += env.play(arm, boundary + local);
        ledger.per_round.push_back(realized);
        ledger.realized_total += realized;
        if (record_trace)
            res.commit_trace.push_back({local, std::move(o.candidate_set), std::move(o.played),
                                        std::move(o.delays), realized});
    }

    // benchmark against the true instance: exact DP when affordable, else the
    // relaxed bound horizon * V* (an upper bound on the DP, flagged as such)
    if (dp_within_budget(env.arms(), horizon, dp_budget)) {
        ledger.benchmark_total = dp_opt(env.arms(), k, horizon, dp_budget);
        ledger.benchmark_is_upper_bound = false;
    } else {
        const LpSolution true_sol = solve_extreme(build_lp(env.arms(), k));
        ledger.benchmark_total = static_cast<double>(horizon) * true_sol.value;
        ledger.benchmark_is_upper_bound = true;
    }
    return res;
}

} // namespace recharge
