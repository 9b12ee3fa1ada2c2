#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "recharge/delay_lp.hpp"
#include "recharge/instance.hpp"
#include "recharge/rng.hpp"

namespace recharge {

struct ScheduledArm {
    int arm = 0;
    int tau_star = 1; // sampled candidacy period
    int offset = 0;   // uniform phase in {0, .., tau_star - 1}
};

// Interleaved schedule: arm i is a candidate at round t iff t mod tau_star ==
// offset, so each retained arm recurs with period tau_star and, over the
// random offset, lands in the candidate set of any fixed round with
// probability exactly 1/tau_star, independently across arms.
struct SchedulerState {
    int k = 1;
    int num_arms = 0;                // arm indices run over the original instance
    std::vector<ScheduledArm> arms;  // retained support, ascending arm index
    std::vector<int64_t> last_play;  // 0 means "virtually played at t = 0"
};

// Rolls the irregular arm's period (tau_a with probability tau_a * x_a, tau_b
// with probability tau_b * x_b, otherwise the arm is dropped), then draws one
// offset per retained arm. Offsets use one RNG sub-stream per arm index and
// the irregular roll its own stream, so adding an arm to the profile never
// perturbs the draws of the others.
SchedulerState init_schedule(const DelayProfile& prof, int num_arms, int k, uint64_t seed);

std::vector<int> candidates(const SchedulerState& st, int64_t t);

struct RoundOutcome {
    int64_t t = 0;
    std::vector<int> candidate_set;
    std::vector<int> played;      // ascending arm index, at most k arms
    std::vector<int64_t> delays;  // actual delay of each played arm, aligned with played
    double payoff = 0.0;          // sum of payoff_at(arm, delay) over played
};

// Plays the <= k candidates with the highest payoff_at(arm, actual delay),
// breaking ties toward the lower arm index, and advances last_play.
template <class PayoffEval>
RoundOutcome play_round(SchedulerState& st, int64_t t, PayoffEval&& payoff_at) {
    RoundOutcome out;
    out.t = t;
    out.candidate_set = candidates(st, t);

    struct Ranked {
        double value;
        int arm;
        int64_t delay;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(out.candidate_set.size());
    for (int arm : out.candidate_set) {
        const int64_t delay = t - st.last_play[static_cast<size_t>(arm)];
        ranked.push_back({payoff_at(arm, delay), arm, delay});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        return a.value != b.value ? a.value > b.value : a.arm < b.arm;
    });
    const size_t take = std::min<size_t>(static_cast<size_t>(st.k), ranked.size());
    std::vector<Ranked> chosen(ranked.begin(), ranked.begin() + static_cast<long>(take));
    std::sort(chosen.begin(), chosen.end(),
              [](const Ranked& a, const Ranked& b) { return a.arm < b.arm; });
    for (const auto& c : chosen) {
        out.played.push_back(c.arm);
        out.delays.push_back(c.delay);
        out.payoff += c.value;
        st.last_play[static_cast<size_t>(c.arm)] = t;
    }
    return out;
}

struct TraceRow {
    int64_t t = 0;
    std::vector<int> candidate_set;
    std::vector<int> played;
    std::vector<int64_t> delays;
    double payoff = 0.0;
};

// Full planning run against the true means; per-round rows for inspection.
std::vector<TraceRow> run_trace(const std::vector<PayoffFunction>& arms, const DelayProfile& prof,
                                int k, uint64_t seed, int64_t horizon);

// Same run without materializing rows; returns the mean payoff over rounds
// [window_start, horizon].
double schedule_mean_payoff(const std::vector<PayoffFunction>& arms, const DelayProfile& prof,
                            int k, uint64_t seed, int64_t horizon, int64_t window_start = 1);

struct GreedyResult {
    double total = 0.0;
    std::vector<double> per_round;
};

// Myopic baseline: each round plays the <= k arms with the highest strictly
// positive current payoff (lower index on ties); arms worth 0 right now are
// left to recover. Deterministic.
GreedyResult greedy_baseline(const std::vector<PayoffFunction>& arms, int k, int64_t horizon);

} // namespace recharge
