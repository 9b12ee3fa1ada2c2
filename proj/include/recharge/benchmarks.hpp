#pragma once

#include <cstdint>
#include <vector>

#include "recharge/instance.hpp"

namespace recharge {

inline constexpr int64_t kDefaultStateRoundBudget = 10'000'000;

// True if the exact DP below fits in the budget: (product of recovery times)
// * horizon state-rounds.
bool dp_within_budget(const std::vector<PayoffFunction>& arms, int64_t horizon, int64_t budget);

// Exact optimum total payoff over horizon rounds for a planner that may play
// up to k arms per round, all delays starting at 1. States are delay vectors
// capped at each arm's recovery time, which loses nothing because payoffs
// plateau there. Exceeding the state-round budget raises BudgetExceeded with
// the required amount; the result is never approximated.
double dp_opt(const std::vector<PayoffFunction>& arms, int k, int64_t horizon,
              int64_t state_round_budget = kDefaultStateRoundBudget);

double dp_opt(const Instance& inst, int64_t horizon,
              int64_t state_round_budget = kDefaultStateRoundBudget);

} // namespace recharge
