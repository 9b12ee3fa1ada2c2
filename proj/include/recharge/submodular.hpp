#pragma once

#include <cstdint>
#include <vector>

namespace recharge {

// Fraction of the relaxed optimum the interleaved scheduler is guaranteed to
// keep when selecting greedily among k slots: 1 - k^k / (e^k k!). Evaluated
// through log-factorials, so it is exact for all k and increases to 1.
double gamma_factor(int k);

// f(S) = largest total weight of at most k elements of S. Monotone and
// submodular; the selection step of the round scheduler maximizes exactly
// this over the candidate set.
double weighted_rank(const std::vector<double>& w, int k, uint32_t subset);

// E[f(S)] when each element joins S independently with probability y_i.
// Exact 2^n enumeration, n <= 20.
double multilinear_exact(const std::vector<double>& w, int k, const std::vector<double>& y);

struct McEstimate {
    double value = 0.0;
    double se = 0.0;
    int64_t samples = 0;
};

// Monte Carlo companion of multilinear_exact with a standard-error estimate.
McEstimate multilinear_mc(const std::vector<double>& w, int k, const std::vector<double>& y,
                          int64_t samples, uint64_t seed);

// Best achievable E[f(S)] over all (arbitrarily correlated) distributions
// with the same marginals y: an LP over all 2^n subset weights, solved with
// the same simplex as the planning LP. n <= 12.
double concave_closure_exact(const std::vector<double>& w, int k, const std::vector<double>& y);

// Independent route to the same quantity: max{ w . z : 0 <= z <= y, sum z <=
// k }, evaluated greedily by descending weight. Used to cross-check the LP.
double fractional_rank_bound(const std::vector<double>& w, int k, const std::vector<double>& y);

struct GapCheck {
    double f_independent = 0.0; // E under independent marginals
    double f_closure = 0.0;     // best correlated value
    double ratio = 1.0;
    double gamma_k = 0.0;
    bool holds = false; // gamma_k * closure - tol <= independent <= closure + tol
};

GapCheck correlation_gap_check(const std::vector<double>& w, int k, const std::vector<double>& y);

struct CouplingCheck {
    double e_dependent = 0.0;   // arms a and b mutually exclusive
    double e_independent = 0.0; // all arms independent
    double gap = 0.0;
    bool holds = false; // dependent >= independent - tol
};

// Compares independent inclusion against the coupling where elements a and b
// never co-occur (a with probability y_a, b with y_b, neither otherwise).
// Requires y_a + y_b <= 1.
CouplingCheck exclusive_coupling_check(const std::vector<double>& w, int k,
                                       const std::vector<double>& y, int a, int b);

} // namespace recharge
