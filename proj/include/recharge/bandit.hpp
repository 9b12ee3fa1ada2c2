#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recharge/delay_lp.hpp"
#include "recharge/instance.hpp"
#include "recharge/rng.hpp"
#include "recharge/scheduler.hpp"

namespace recharge {

enum class NoiseKind { none, bernoulli, uniform };

struct NoiseModel {
    NoiseKind kind = NoiseKind::bernoulli;
    double half_width = 0.1; // uniform only
};

// "bernoulli", "uniform", "uniform:W" or "none"
NoiseModel parse_noise(const std::string& text);
std::string noise_name(const NoiseModel& noise);

struct PlayRecord {
    int64_t t = 0;
    int arm = 0;
    int64_t delay = 0;
    double realized = 0.0;
};

// Pulls give a stochastic payoff on [0,1] whose mean is exactly the arm's
// payoff at the actual delay. Uniform noise shrinks its half-width to
// min(w, p, 1-p) so the support stays inside [0,1] without clipping bias.
class StochasticEnv {
  public:
    StochasticEnv(std::vector<PayoffFunction> arms, int tau_max, NoiseModel noise, uint64_t seed);
    StochasticEnv(const Instance& inst, NoiseModel noise, uint64_t seed);

    int num_arms() const { return static_cast<int>(arms_.size()); }
    int tau_max() const { return tau_max_; }
    double mean_payoff(int arm, int64_t delay) const; // evaluation only, hidden from learners
    const std::vector<PayoffFunction>& arms() const { return arms_; }

    double play(int arm, int64_t t);
    int64_t current_delay(int arm, int64_t t) const;
    void reanchor(int64_t t); // treat every arm as just played at round t
    const std::vector<PlayRecord>& history() const { return history_; }

  private:
    std::vector<PayoffFunction> arms_;
    int tau_max_ = 1;
    NoiseModel noise_;
    CounterRng rng_;
    std::vector<int64_t> last_play_;
    std::vector<PlayRecord> history_;
};

// Samples needed per (arm, delay) cell so that all n * tau_max estimates land
// within eps of their means with probability at least 1 - delta (Hoeffding +
// union bound): ceil(ln(2 tau_max n / delta) / (2 eps^2)).
int64_t required_samples(double eps, double delta, int n, int tau_max);

struct EstimateTable {
    int n = 0;
    int tau_max = 0;
    std::vector<std::vector<int64_t>> count; // [arm][tau-1]
    std::vector<std::vector<double>> sum;

    double estimate(int arm, int tau) const;
    // payoff tables over delays 1..tau_max; deliberately not validated, noisy
    // estimates need not be monotone
    std::vector<PayoffFunction> as_payoffs() const;
};

struct SampleAuditRow {
    int arm = 0;
    int tau = 0;       // targeted delay
    int64_t t = 0;     // round of the recorded sample
    int64_t delay = 0; // actual delay, must equal tau
};

// Deterministic round-robin packer: collects at least m samples of every
// (arm, delay in 1..tau_max) cell, each recorded at exactly its target delay.
// Plays at most k arms per round, prefers arms whose current delay is a
// needed target, and resets arms that have overshot every remaining target.
// Rounds used stay within 4 * n * m * tau_max^2 / k on the tested grid.
struct ExplorationLog {
    EstimateTable estimates;
    int64_t rounds_used = 0;
    std::vector<SampleAuditRow> audit;
    std::vector<double> per_round;
    double realized_total = 0.0;
};

ExplorationLog explore(StochasticEnv& env, int64_t m, int k);

struct RegretLedger {
    int64_t horizon = 0;
    int k = 1;
    double gamma_k = 0.0;
    double benchmark_total = 0.0;     // exact DP optimum, or horizon * relaxed value
    bool benchmark_is_upper_bound = false; // true when the relaxed value stood in for the DP
    double realized_total = 0.0;
    std::vector<double> per_round;
    int64_t explore_rounds = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    int64_t m = 0;

    double regret() const { return gamma_k * benchmark_total - realized_total; }
};

struct EtcResult {
    RegretLedger ledger;
    EstimateTable estimates;
    double lp_value_hat = 0.0;
    DelayProfile profile_hat;
    std::vector<TraceRow> commit_trace; // filled only when requested
};

// Explore-then-commit: sample every (arm, delay) cell m(eps, delta) times,
// then plan on the estimates and run the interleaved schedule for the rest of
// the horizon. Refuses (BudgetExceeded) if exploration alone would use up the
// horizon. The commit phase re-anchors delays at the boundary; true delays
// are at least the re-anchored ones and payoffs are monotone, so the recorded
// payoff is a lower bound on the physical one.
EtcResult etc_run(StochasticEnv& env, int k, int64_t horizon, double eps, double delta,
                  uint64_t seed, int64_t dp_budget = 10'000'000, bool record_trace = false);

struct EpsilonChoice {
    double epsilon = 0.0;
    double delta = 0.0;
};

// Horizon-tuned accuracy: eps = (n tau_max^2 ln(tau_max n T) / (k T))^(1/3)
// clipped into (0,1), delta = 1/T.
EpsilonChoice tune_epsilon(int n, int k, int tau_max, int64_t horizon);

} // namespace recharge
