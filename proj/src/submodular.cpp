#include "recharge/submodular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "recharge/errors.hpp"
#include "recharge/rng.hpp"
#include "recharge/simplex.hpp"

namespace recharge {

namespace {

constexpr double kTol = 1e-9;

void check_wy(const std::vector<double>& w, int k, const std::vector<double>& y) {
    if (w.empty() || w.size() != y.size())
        throw ConfigError("weights and marginals must be non-empty and the same size");
    if (k < 1) throw ConfigError("k must be >= 1");
    for (double wi : w)
        if (!(wi >= 0.0)) throw ConfigError("weights must be nonnegative");
    for (double yi : y)
        if (!(yi >= 0.0 && yi <= 1.0)) throw ConfigError("marginals must lie in [0,1]");
}

// descending-weight order; top-k walk over a subset mask
std::vector<int> weight_order(const std::vector<double>& w) {
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return w[static_cast<size_t>(a)] != w[static_cast<size_t>(b)]
                   ? w[static_cast<size_t>(a)] > w[static_cast<size_t>(b)]
                   : a < b;
    });
    return order;
}

double rank_by_order(const std::vector<double>& w, int k, uint32_t subset,
                     const std::vector<int>& order) {
    double total = 0.0;
    int taken = 0;
    for (int i : order) {
        if (!(subset & (1u << i))) continue;
        total += w[static_cast<size_t>(i)];
        if (++taken == k) break;
    }
    return total;
}

} // namespace

double gamma_factor(int k) {
    if (k < 1) throw ConfigError("gamma_factor: k must be >= 1");
    const double kd = static_cast<double>(k);
    return 1.0 - std::exp(kd * std::log(kd) - kd - std::lgamma(kd + 1.0));
}

double weighted_rank(const std::vector<double>& w, int k, uint32_t subset) {
    if (w.empty() || w.size() > 32) throw ConfigError("weighted_rank: need 1..32 weights");
    if (k < 1) throw ConfigError("weighted_rank: k must be >= 1");
    return rank_by_order(w, k, subset, weight_order(w));
}

double multilinear_exact(const std::vector<double>& w, int k, const std::vector<double>& y) {
    check_wy(w, k, y);
    const int n = static_cast<int>(w.size());
    if (n > 20) throw ConfigError("multilinear_exact: n <= 20 required for full enumeration");
    const auto order = weight_order(w);
    double total = 0.0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        double prob = 1.0;
        for (int i = 0; i < n; ++i)
            prob *= (s & (1u << i)) ? y[static_cast<size_t>(i)] : 1.0 - y[static_cast<size_t>(i)];
        if (prob == 0.0) continue;
        total += prob * rank_by_order(w, k, s, order);
    }
    return total;
}

McEstimate multilinear_mc(const std::vector<double>& w, int k, const std::vector<double>& y,
                          int64_t samples, uint64_t seed) {
    check_wy(w, k, y);
    if (samples < 2) throw ConfigError("multilinear_mc: need at least 2 samples");
    const int n = static_cast<int>(w.size());
    if (n > 32) throw ConfigError("multilinear_mc: n <= 32 required");
    const auto order = weight_order(w);
    CounterRng rng(seed, 0);
    double sum = 0.0, sumsq = 0.0;
    for (int64_t it = 0; it < samples; ++it) {
        uint32_t s = 0;
        for (int i = 0; i < n; ++i)
            if (rng.next_unit() < y[static_cast<size_t>(i)]) s |= 1u << i;
        const double f = rank_by_order(w, k, s, order);
        sum += f;
        sumsq += f * f;
    }
    McEstimate est;
    est.samples = samples;
    est.value = sum / static_cast<double>(samples);
    const double var =
        std::max(0.0, (sumsq - sum * sum / static_cast<double>(samples)) / static_cast<double>(samples - 1));
    est.se = std::sqrt(var / static_cast<double>(samples));
    return est;
}

double concave_closure_exact(const std::vector<double>& w, int k, const std::vector<double>& y) {
    check_wy(w, k, y);
    const int n = static_cast<int>(w.size());
    if (n > 12) throw ConfigError("concave_closure_exact: n <= 12 required, the LP has 2^n columns");
    const auto order = weight_order(w);
    const uint32_t subsets = 1u << n;

    // variables: one probability per subset; marginal row per element plus a
    // normalization row
    LinearProgram lp;
    lp.num_vars = static_cast<int>(subsets);
    lp.objective.resize(subsets);
    for (uint32_t s = 0; s < subsets; ++s)
        lp.objective[s] = rank_by_order(w, k, s, order);
    lp.rows.assign(static_cast<size_t>(n) + 1, std::vector<double>(subsets, 0.0));
    lp.rels.assign(static_cast<size_t>(n) + 1, Rel::eq);
    lp.rhs.assign(static_cast<size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        for (uint32_t s = 0; s < subsets; ++s)
            if (s & (1u << i)) lp.rows[static_cast<size_t>(i)][s] = 1.0;
        lp.rhs[static_cast<size_t>(i)] = y[static_cast<size_t>(i)];
    }
    for (uint32_t s = 0; s < subsets; ++s) lp.rows[static_cast<size_t>(n)][s] = 1.0;
    lp.rhs[static_cast<size_t>(n)] = 1.0;

    SimplexResult r = simplex_solve(lp);
    if (r.status != LpStatus::optimal)
        throw SolverError("concave closure LP did not solve (independent marginals are feasible)");
    return r.objective;
}

double fractional_rank_bound(const std::vector<double>& w, int k, const std::vector<double>& y) {
    check_wy(w, k, y);
    double budget = static_cast<double>(k);
    double total = 0.0;
    for (int i : weight_order(w)) {
        if (budget <= 0.0) break;
        const double z = std::min(y[static_cast<size_t>(i)], budget);
        total += w[static_cast<size_t>(i)] * z;
        budget -= z;
    }
    return total;
}

GapCheck correlation_gap_check(const std::vector<double>& w, int k, const std::vector<double>& y) {
    GapCheck c;
    c.f_independent = multilinear_exact(w, k, y);
    c.f_closure = concave_closure_exact(w, k, y);
    c.gamma_k = gamma_factor(k);
    c.ratio = c.f_closure > kTol ? c.f_independent / c.f_closure : 1.0;
    c.holds = c.f_independent <= c.f_closure + kTol &&
              c.f_independent >= c.gamma_k * c.f_closure - kTol;
    return c;
}

CouplingCheck exclusive_coupling_check(const std::vector<double>& w, int k,
                                       const std::vector<double>& y, int a, int b) {
    check_wy(w, k, y);
    const int n = static_cast<int>(w.size());
    if (n > 20) throw ConfigError("exclusive_coupling_check: n <= 20 required");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw ConfigError("exclusive_coupling_check: need two distinct element indices");
    const double ya = y[static_cast<size_t>(a)], yb = y[static_cast<size_t>(b)];
    if (ya + yb > 1.0 + 1e-12)
        throw ConfigError("exclusive_coupling_check: y_a + y_b must be at most 1");

    const auto order = weight_order(w);
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != a && i != b) others.push_back(i);

    CouplingCheck c;
    const uint32_t lim = 1u << others.size();
    for (uint32_t t = 0; t < lim; ++t) {
        double prob = 1.0;
        uint32_t s = 0;
        for (size_t j = 0; j < others.size(); ++j) {
            const int i = others[j];
            if (t & (1u << j)) {
                prob *= y[static_cast<size_t>(i)];
                s |= 1u << i;
            } else {
                prob *= 1.0 - y[static_cast<size_t>(i)];
            }
        }
        if (prob == 0.0) continue;
        c.e_dependent += prob * ((1.0 - ya - yb) * rank_by_order(w, k, s, order) +
                                 ya * rank_by_order(w, k, s | (1u << a), order) +
                                 yb * rank_by_order(w, k, s | (1u << b), order));
    }
    c.e_independent = multilinear_exact(w, k, y);
    c.gap = c.e_dependent - c.e_independent;
    c.holds = c.gap >= -kTol;
    return c;
}

} // namespace recharge
