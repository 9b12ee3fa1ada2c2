#include "recharge/benchmarks.hpp"

#include <algorithm>

#include "recharge/errors.hpp"

namespace recharge {

namespace {

// returns 0 on overflow past cap
int64_t state_count(const std::vector<PayoffFunction>& arms, int64_t cap) {
    int64_t states = 1;
    for (const auto& f : arms) {
        states *= f.recovery_time;
        if (states <= 0 || states > cap) return 0;
    }
    return states;
}

} // namespace

bool dp_within_budget(const std::vector<PayoffFunction>& arms, int64_t horizon, int64_t budget) {
    if (horizon < 1) return false;
    const int64_t states = state_count(arms, budget);
    return states > 0 && states <= budget / horizon;
}

double dp_opt(const std::vector<PayoffFunction>& arms, int k, int64_t horizon,
              int64_t state_round_budget) {
    const int n = static_cast<int>(arms.size());
    if (n < 1) throw ConfigError("dp_opt: no arms");
    if (k < 1) throw ConfigError("dp_opt: k must be >= 1");
    if (horizon < 0) throw ConfigError("dp_opt: negative horizon");
    if (n > 20) throw ConfigError("dp_opt: more than 20 arms is out of reach for the exact DP");
    if (horizon == 0) return 0.0;

    const int64_t states = state_count(arms, state_round_budget);
    if (states == 0 || states > state_round_budget / horizon) {
        int64_t raw = 1;
        bool overflow = false;
        for (const auto& f : arms) {
            if (raw > (1LL << 60) / std::max(1, f.recovery_time)) {
                overflow = true;
                break;
            }
            raw *= f.recovery_time;
        }
        std::string need = overflow ? std::string("more than 2^60")
                                    : std::to_string(raw) + " * " + std::to_string(horizon);
        throw BudgetExceeded("dp_opt: needs " + need + " state-rounds, budget is " +
                             std::to_string(state_round_budget) +
                             "; raise the budget or shrink the instance");
    }

    // mixed-radix state encoding: digit i = delay_i - 1 in [0, recovery_i)
    std::vector<int64_t> stride(static_cast<size_t>(n));
    std::vector<int> radix(static_cast<size_t>(n));
    {
        int64_t s = 1;
        for (int i = 0; i < n; ++i) {
            stride[static_cast<size_t>(i)] = s;
            radix[static_cast<size_t>(i)] = arms[static_cast<size_t>(i)].recovery_time;
            s *= radix[static_cast<size_t>(i)];
        }
    }

    // all play sets of size <= min(k, n)
    std::vector<uint32_t> masks;
    const int kk = std::min(k, n);
    for (uint32_t msk = 0; msk < (1u << n); ++msk)
        if (__builtin_popcount(msk) <= kk) masks.push_back(msk);

    const bool tabulate = states * static_cast<int64_t>(masks.size()) <= (1LL << 22);
    std::vector<double> gain;
    std::vector<int64_t> succ;
    std::vector<int> delay(static_cast<size_t>(n), 1);

    auto advance_delay = [&]() {
        for (int i = 0; i < n; ++i) {
            if (delay[static_cast<size_t>(i)] < radix[static_cast<size_t>(i)]) {
                ++delay[static_cast<size_t>(i)];
                return;
            }
            delay[static_cast<size_t>(i)] = 1;
        }
    };
    auto expand = [&](uint32_t msk, double& g, int64_t& nxt) {
        g = 0.0;
        nxt = 0;
        for (int i = 0; i < n; ++i) {
            int d;
            if (msk & (1u << i)) {
                g += arms[static_cast<size_t>(i)].values[static_cast<size_t>(delay[static_cast<size_t>(i)] - 1)];
                d = 1;
            } else {
                d = std::min(delay[static_cast<size_t>(i)] + 1, radix[static_cast<size_t>(i)]);
            }
            nxt += static_cast<int64_t>(d - 1) * stride[static_cast<size_t>(i)];
        }
    };

    if (tabulate) {
        gain.resize(static_cast<size_t>(states * static_cast<int64_t>(masks.size())));
        succ.resize(gain.size());
        std::fill(delay.begin(), delay.end(), 1);
        for (int64_t s = 0; s < states; ++s, advance_delay()) {
            for (size_t mi = 0; mi < masks.size(); ++mi) {
                const size_t idx = static_cast<size_t>(s) * masks.size() + mi;
                expand(masks[mi], gain[idx], succ[idx]);
            }
        }
    }

    std::vector<double> cur(static_cast<size_t>(states), 0.0);
    std::vector<double> nxt_val(static_cast<size_t>(states), 0.0);
    for (int64_t t = 0; t < horizon; ++t) {
        if (tabulate) {
            for (int64_t s = 0; s < states; ++s) {
                const size_t base = static_cast<size_t>(s) * masks.size();
                double best = 0.0;
                for (size_t mi = 0; mi < masks.size(); ++mi) {
                    const double v = gain[base + mi] + nxt_val[static_cast<size_t>(succ[base + mi])];
                    if (v > best) best = v;
                }
                cur[static_cast<size_t>(s)] = best;
            }
        } else {
            std::fill(delay.begin(), delay.end(), 1);
            for (int64_t s = 0; s < states; ++s, advance_delay()) {
                double best = 0.0;
                for (uint32_t msk : masks) {
                    double g;
                    int64_t nx;
                    expand(msk, g, nx);
                    const double v = g + nxt_val[static_cast<size_t>(nx)];
                    if (v > best) best = v;
                }
                cur[static_cast<size_t>(s)] = best;
            }
        }
        std::swap(cur, nxt_val);
    }
    return nxt_val[0]; // all delays equal to 1
}

double dp_opt(const Instance& inst, int64_t horizon, int64_t state_round_budget) {
    return dp_opt(inst.arms, inst.k, horizon, state_round_budget);
}

} // namespace recharge
