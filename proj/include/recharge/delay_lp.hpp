#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recharge/instance.hpp"
#include "recharge/simplex.hpp"

namespace recharge {

inline constexpr double kNonzeroTol = 1e-9; // rates below this count as zero
inline constexpr double kRegularTol = 1e-7; // |x - 1/tau| band for exact-rate arms

struct LpVariable {
    int arm = 0;
    int tau = 0; // delay in 1..cap(arm)
};

// Relaxed planning problem over long-run play rates x[arm, tau]:
//   max   sum p_arm(tau) * x[arm, tau]
//   s.t.  sum of all rates <= k              (row 0)
//         sum tau * x[arm, .] <= 1 per arm   (rows 1..n)
//         x >= 0
// Solved at a vertex, T times the optimum upper-bounds any schedule of T
// rounds, and the vertex structure is what makes the profile extraction below
// well defined.
struct DelayLp {
    int num_arms = 0;
    int k = 0;
    std::vector<LpVariable> vars;
    LinearProgram lp;
};

// Delay variables run over 1..recovery_time per arm; the plateau makes larger
// delays redundant (verified by the truncation check in the test battery).
DelayLp build_lp(const std::vector<PayoffFunction>& arms, int k);
DelayLp build_lp(const std::vector<PayoffFunction>& arms, int k, const std::vector<int>& delay_caps);
DelayLp build_lp(const Instance& inst);

struct LpEntry {
    int arm = 0;
    int tau = 0;
    double x = 0.0;
};

struct LpSolution {
    double value = 0.0;
    std::vector<LpEntry> nonzeros;  // sorted by (arm, tau)
    std::vector<int> supported_arms;
    std::vector<int> basic_columns; // vertex certificate: final simplex basis
    std::vector<int> tight_rows;
    int iterations = 0;
};

// Solves to optimality and validates feasibility, the vertex sparsity bound
// (nonzeros <= supported arms + 1) and per-arm support sizes. Throws
// SolverError if the solver misbehaves.
LpSolution solve_extreme(const DelayLp& p);

// One arm may fall off the exact-rate pattern: it holds one or two rates
// strictly below 1/tau. tau_b is only set in the two-rate case.
struct IrregularArm {
    int arm = -1;
    int tau_a = 0;
    double x_a = 0.0;
    std::optional<int> tau_b;
    double x_b = 0.0;
};

struct DelayProfile {
    std::vector<std::pair<int, int>> regular; // (arm, tau*), ascending arm index
    std::optional<IrregularArm> irregular;
    std::vector<std::string> notes; // rates classified regular inside the tolerance band
};

// Classifies every supported arm as regular (single rate 1/tau within
// kRegularTol) or irregular. More than one irregular arm, three or more rates
// on an arm, or a rate above 1/tau is a StructureViolation naming the arms.
DelayProfile extract_profile(const LpSolution& sol);

std::string profile_to_json_text(const LpSolution& sol, const DelayProfile& prof);

} // namespace recharge
