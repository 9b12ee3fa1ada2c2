#include "recharge/scheduler.hpp"

#include <cmath>

#include "recharge/errors.hpp"

namespace recharge {

namespace {

// offsets draw from stream = arm index; the irregular roll must not share
// those streams, it gets the arm index tagged with a high bit
constexpr uint64_t kIrregularStreamTag = 1ULL << 32;

} // namespace

SchedulerState init_schedule(const DelayProfile& prof, int num_arms, int k, uint64_t seed) {
    if (k < 1) throw ConfigError("init_schedule: k must be >= 1");
    if (num_arms < 1) throw ConfigError("init_schedule: num_arms must be >= 1");

    SchedulerState st;
    st.k = k;
    st.num_arms = num_arms;
    st.last_play.assign(static_cast<size_t>(num_arms), 0);

    std::vector<std::pair<int, int>> retained = prof.regular; // (arm, tau*)
    if (prof.irregular) {
        const auto& ir = *prof.irregular;
        if (ir.arm < 0 || ir.arm >= num_arms)
            throw ConfigError("init_schedule: irregular arm index out of range");
        const double pa = ir.tau_a * ir.x_a;
        const double pb = ir.tau_b ? *ir.tau_b * ir.x_b : 0.0;
        if (pa < -kNonzeroTol || pb < -kNonzeroTol || pa + pb > 1.0 + 1e-9)
            throw ConfigError("init_schedule: irregular rates are not a sub-distribution");
        CounterRng roll(seed, kIrregularStreamTag | static_cast<uint64_t>(ir.arm));
        const double u = roll.next_unit();
        if (u < pa)
            retained.emplace_back(ir.arm, ir.tau_a);
        else if (ir.tau_b && u < pa + pb)
            retained.emplace_back(ir.arm, *ir.tau_b);
        // otherwise the irregular arm is dropped for this run
    }
    std::sort(retained.begin(), retained.end());

    for (const auto& [arm, tau] : retained) {
        if (arm < 0 || arm >= num_arms) throw ConfigError("init_schedule: arm index out of range");
        if (tau < 1) throw ConfigError("init_schedule: tau* must be >= 1");
        CounterRng rng(seed, static_cast<uint64_t>(arm));
        const int offset = static_cast<int>(rng.next_below(static_cast<uint64_t>(tau)));
        st.arms.push_back({arm, tau, offset});
    }
    return st;
}

std::vector<int> candidates(const SchedulerState& st, int64_t t) {
    if (t < 1) throw ConfigError("candidates: rounds start at t = 1");
    std::vector<int> out;
    for (const auto& a : st.arms)
        if (t % a.tau_star == a.offset) out.push_back(a.arm);
    return out;
}

std::vector<TraceRow> run_trace(const std::vector<PayoffFunction>& arms, const DelayProfile& prof,
                                int k, uint64_t seed, int64_t horizon) {
    SchedulerState st = init_schedule(prof, static_cast<int>(arms.size()), k, seed);
    auto payoff_at = [&](int arm, int64_t delay) {
        return evaluate(arms[static_cast<size_t>(arm)], delay);
    };
    std::vector<TraceRow> rows;
    rows.reserve(static_cast<size_t>(horizon));
    for (int64_t t = 1; t <= horizon; ++t) {
        RoundOutcome o = play_round(st, t, payoff_at);
        rows.push_back({o.t, std::move(o.candidate_set), std::move(o.played), std::move(o.delays),
                        o.payoff});
    }
    return rows;
}

double schedule_mean_payoff(const std::vector<PayoffFunction>& arms, const DelayProfile& prof,
                            int k, uint64_t seed, int64_t horizon, int64_t window_start) {
    if (horizon < 1 || window_start < 1 || window_start > horizon)
        throw ConfigError("schedule_mean_payoff: bad window");
    SchedulerState st = init_schedule(prof, static_cast<int>(arms.size()), k, seed);

    struct Ranked {
        double value;
        int arm;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(st.arms.size());
    double total = 0.0;
    for (int64_t t = 1; t <= horizon; ++t) {
        ranked.clear();
        for (const auto& a : st.arms) {
            if (t % a.tau_star != a.offset) continue;
            const int64_t delay = t - st.last_play[static_cast<size_t>(a.arm)];
            ranked.push_back({evaluate(arms[static_cast<size_t>(a.arm)], delay), a.arm});
        }
        std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
            return a.value != b.value ? a.value > b.value : a.arm < b.arm;
        });
        const size_t take = std::min<size_t>(static_cast<size_t>(k), ranked.size());
        double round_payoff = 0.0;
        for (size_t i = 0; i < take; ++i) {
            round_payoff += ranked[i].value;
            st.last_play[static_cast<size_t>(ranked[i].arm)] = t;
        }
        if (t >= window_start) total += round_payoff;
    }
    return total / static_cast<double>(horizon - window_start + 1);
}

GreedyResult greedy_baseline(const std::vector<PayoffFunction>& arms, int k, int64_t horizon) {
    if (k < 1) throw ConfigError("greedy_baseline: k must be >= 1");
    const int n = static_cast<int>(arms.size());
    std::vector<int64_t> last_play(static_cast<size_t>(n), 0);

    struct Ranked {
        double value;
        int arm;
    };
    std::vector<Ranked> ranked;
    GreedyResult res;
    res.per_round.reserve(static_cast<size_t>(horizon));
    for (int64_t t = 1; t <= horizon; ++t) {
        ranked.clear();
        for (int i = 0; i < n; ++i) {
            const double v = evaluate(arms[static_cast<size_t>(i)], t - last_play[static_cast<size_t>(i)]);
            if (v > 0.0) ranked.push_back({v, i});
        }
        std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
            return a.value != b.value ? a.value > b.value : a.arm < b.arm;
        });
        const size_t take = std::min<size_t>(static_cast<size_t>(k), ranked.size());
        double round_payoff = 0.0;
        for (size_t i = 0; i < take; ++i) {
            round_payoff += ranked[i].value;
            last_play[static_cast<size_t>(ranked[i].arm)] = t;
        }
        res.per_round.push_back(round_payoff);
        res.total += round_payoff;
    }
    return res;
}

} // namespace recharge
