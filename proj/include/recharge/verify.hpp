#pragma once

// randomized property battery behind the `verify` and `oracle` cli
// subcommands.  each check runs a number of randomized trials against one
// structural or analytic property of the toolkit and reports how many trials
// violated it.  margins are signed slacks (tolerance already folded in), so
// worst_margin < 0 pinpoints the tightest failure and worst_margin >= 0 shows
// how much headroom the property had.

#include <cstdint>
#include <string>
#include <vector>

namespace recharge {

struct CheckReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    double worst_margin = 0.0;
    std::string detail;  // first failing trial, empty when clean

    bool ok() const { return failures == 0; }
};

// lp structure: random instances are solved to a vertex and the solution must
// be sparse (nonzeros <= supported arms + 1), classifiable into regular and
// at most one irregular arm, and feasible for both constraint families.
CheckReport check_lp_vertex_structure(int trials, std::uint64_t seed);

// planning bound: horizon * lp value dominates the exact dp optimum on every
// sampled instance for horizons {5, 10, 20}.
CheckReport check_lp_upper_bounds_dp(int trials, std::uint64_t seed);

// optimality: the lp value dominates the objective at rejection-sampled
// feasible points of the same polytope.
CheckReport check_lp_beats_sampled_points(int trials, int points_per_instance,
                                          std::uint64_t seed);

// support truncation: extending the delay grid to twice each recovery time
// leaves the lp value unchanged (longer delays are dominated columns).
CheckReport check_lp_support_truncation(int trials, std::uint64_t seed);

// realized schedules: empirical play rates of an interleaved run form a
// feasible lp point, so the realized mean payoff never exceeds the lp value.
CheckReport check_schedule_frequencies(int trials, int horizon,
                                       std::uint64_t seed);

// correlation gap: gamma_k * f_plus <= f_independent <= f_plus on random
// weighted-rank inputs, both sides by exact enumeration.
CheckReport check_gap_bounds(int trials, std::uint64_t seed);

// linear lower bound: whenever the marginals sum to at most k, the concave
// closure dominates the linear functional sum_i w_i y_i.
CheckReport check_linear_lower_bound(int trials, std::uint64_t seed);

// exclusive coupling: the dependent rounding that never keeps two coupled
// elements together dominates independent rounding in expectation.
CheckReport check_exclusive_coupling(int trials, std::uint64_t seed);

// closure shape: midpoint concavity of the closure along random segments.
CheckReport check_closure_concavity(int trials, std::uint64_t seed);

// closure value: the distribution lp and the greedy fractional top-k bound
// compute the same number.
CheckReport check_closure_matches_fractional_bound(int trials,
                                                   std::uint64_t seed);

// vertex agreement: at binary marginals both extensions collapse to the plain
// weighted rank of the indicated subset.
CheckReport check_multilinear_vertex_equality(int trials, std::uint64_t seed);

// candidate marginals: over fresh schedule initializations, each retained arm
// is a candidate at a fixed round with probability 1/tau_star, jointly with
// the sampled delay at probability x, and offsets are uniform (3 sigma).
CheckReport check_candidate_marginals(int inits, std::uint64_t seed);

// spacing: after its first play, every play of an arm happens at a delay that
// is a positive multiple of its sampled period.
CheckReport check_delay_lower_bound(int trials, int horizon,
                                    std::uint64_t seed);

// dp sanity: the exact optimum is superadditive (and hence monotone) in the
// horizon.
CheckReport check_dp_superadditive(int trials, std::uint64_t seed);

// end to end: monte carlo mean of the interleaved scheduler past the burn-in
// window dominates the multilinear extension built from the delay profile
// (weights = payoff at the sampled period, marginals = lp rates), minus 3 se.
CheckReport check_schedule_meets_multilinear(int instances, int inits,
                                             std::uint64_t seed);

// full battery at default sizes, in a stable order.
std::vector<CheckReport> verify_all(std::uint64_t seed);

}  // namespace recharge
