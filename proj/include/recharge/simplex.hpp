#pragma once

#include <vector>

namespace recharge {

enum class Rel { le, ge, eq };

// max  objective . x   subject to   rows[i] . x  (rel[i])  rhs[i],  x >= 0
struct LinearProgram {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<Rel> rels;
    std::vector<double> rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct SimplexResult {
    LpStatus status = LpStatus::optimal;
    double objective = 0.0;
    std::vector<double> x;       // structural solution, size num_vars
    std::vector<int> basis;      // basic column per row; columns [0, num_vars) are structural
    std::vector<bool> row_tight; // constraint i holds with equality at the returned point
    int iterations = 0;
};

inline constexpr double kSimplexTol = 1e-9;

// Dense two-phase primal simplex. Always terminates on a basic feasible
// solution, i.e. a vertex of the feasible region, which is what the profile
// extraction downstream depends on. Dantzig pricing switches to Bland's rule
// after a degenerate streak; a hard iteration cap turns residual cycling into
// a SolverError instead of a hang.
SimplexResult simplex_solve(const LinearProgram& lp);

} // namespace recharge
