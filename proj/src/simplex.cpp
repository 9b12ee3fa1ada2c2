#include "recharge/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "recharge/errors.hpp"

namespace recharge {

namespace {

constexpr double kDropTol = 1e-12;  // clean numerical dust after pivots
constexpr double kPhase1Tol = 1e-7; // residual infeasibility treated as zero

struct Tableau {
    int m = 0;
    int cols = 0;
    std::vector<std::vector<double>> a;
    std::vector<double> b; // kept >= 0, so the basis stays primal feasible
    std::vector<int> basis;
    std::vector<double> cost; // reduced costs of the current basis
    double value = 0.0;
    int iterations = 0;

    void pivot(int p, int q) {
        auto& row = a[static_cast<size_t>(p)];
        const double inv = 1.0 / row[static_cast<size_t>(q)];
        for (auto& v : row) v *= inv;
        row[static_cast<size_t>(q)] = 1.0;
        b[static_cast<size_t>(p)] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == p) continue;
            auto& ri = a[static_cast<size_t>(i)];
            const double f = ri[static_cast<size_t>(q)];
            if (std::fabs(f) <= kDropTol) {
                ri[static_cast<size_t>(q)] = 0.0;
                continue;
            }
            for (int j = 0; j < cols; ++j) ri[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
            ri[static_cast<size_t>(q)] = 0.0;
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(p)];
            if (b[static_cast<size_t>(i)] < 0.0 && b[static_cast<size_t>(i)] > -1e-11)
                b[static_cast<size_t>(i)] = 0.0;
        }
        const double f0 = cost[static_cast<size_t>(q)];
        if (f0 != 0.0) {
            for (int j = 0; j < cols; ++j) cost[static_cast<size_t>(j)] -= f0 * row[static_cast<size_t>(j)];
            cost[static_cast<size_t>(q)] = 0.0;
            value += f0 * b[static_cast<size_t>(p)];
        }
        basis[static_cast<size_t>(p)] = q;
    }

    // Runs to optimality over the enterable columns. Returns false on an
    // unbounded ray.
    bool run(const std::vector<char>& enterable, int iter_cap) {
        int degen_streak = 0;
        bool bland = false;
        while (true) {
            if (++iterations > iter_cap) throw SolverError("simplex: cycling guard exceeded");
            int q = -1;
            if (bland) {
                for (int j = 0; j < cols; ++j)
                    if (enterable[static_cast<size_t>(j)] && cost[static_cast<size_t>(j)] > kSimplexTol) {
                        q = j;
                        break;
                    }
            } else {
                double best = kSimplexTol;
                for (int j = 0; j < cols; ++j)
                    if (enterable[static_cast<size_t>(j)] && cost[static_cast<size_t>(j)] > best) {
                        best = cost[static_cast<size_t>(j)];
                        q = j;
                    }
            }
            if (q < 0) return true;

            int p = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                const double aiq = a[static_cast<size_t>(i)][static_cast<size_t>(q)];
                if (aiq <= kSimplexTol) continue;
                const double r = b[static_cast<size_t>(i)] / aiq;
                if (r < best_ratio - kSimplexTol) {
                    best_ratio = r;
                    p = i;
                } else if (r < best_ratio + kSimplexTol && p >= 0 &&
                           basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(p)]) {
                    p = i; // smallest-index leaving variable on ties
                }
            }
            if (p < 0) return false;

            const double before = value;
            pivot(p, q);
            if (value <= before + kSimplexTol) {
                if (++degen_streak > 64) bland = true;
            } else {
                degen_streak = 0;
            }
        }
    }
};

} // namespace

SimplexResult simplex_solve(const LinearProgram& lp) {
    const int n = lp.num_vars;
    const size_t m = lp.rows.size();
    if (static_cast<int>(lp.objective.size()) != n)
        throw ConfigError("simplex: objective size does not match num_vars");
    if (lp.rels.size() != m || lp.rhs.size() != m)
        throw ConfigError("simplex: row metadata sizes disagree");
    for (const auto& r : lp.rows)
        if (static_cast<int>(r.size()) != n)
            throw ConfigError("simplex: row width does not match num_vars");

    // normalize to rhs >= 0 so slacks/artificials give an immediate basis
    std::vector<std::vector<double>> rows = lp.rows;
    std::vector<Rel> rels = lp.rels;
    std::vector<double> rhs = lp.rhs;
    for (size_t i = 0; i < m; ++i) {
        if (rhs[i] < 0.0) {
            for (auto& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            if (rels[i] == Rel::le)
                rels[i] = Rel::ge;
            else if (rels[i] == Rel::ge)
                rels[i] = Rel::le;
        }
    }

    int num_slack = 0, num_art = 0;
    for (auto rel : rels) {
        if (rel != Rel::eq) ++num_slack;
        if (rel != Rel::le) ++num_art;
    }

    Tableau t;
    t.m = static_cast<int>(m);
    t.cols = n + num_slack + num_art;
    t.a.assign(m, std::vector<double>(static_cast<size_t>(t.cols), 0.0));
    t.b = rhs;
    t.basis.assign(m, -1);

    std::vector<int> slack_col(m, -1);
    std::vector<int> art_col(m, -1);
    {
        int next = n;
        for (size_t i = 0; i < m; ++i)
            if (rels[i] != Rel::eq) slack_col[i] = next++;
        for (size_t i = 0; i < m; ++i)
            if (rels[i] != Rel::le) art_col[i] = next++;
    }

    for (size_t i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.a[i][static_cast<size_t>(j)] = rows[i][static_cast<size_t>(j)];
        if (rels[i] == Rel::le) {
            t.a[i][static_cast<size_t>(slack_col[i])] = 1.0;
            t.basis[i] = slack_col[i];
        } else if (rels[i] == Rel::ge) {
            t.a[i][static_cast<size_t>(slack_col[i])] = -1.0;
            t.a[i][static_cast<size_t>(art_col[i])] = 1.0;
            t.basis[i] = art_col[i];
        } else {
            t.a[i][static_cast<size_t>(art_col[i])] = 1.0;
            t.basis[i] = art_col[i];
        }
    }

    const int iter_cap = 50000 + 200 * (t.m + t.cols);
    std::vector<char> enterable(static_cast<size_t>(t.cols), 1);
    for (size_t i = 0; i < m; ++i)
        if (art_col[i] >= 0) enterable[static_cast<size_t>(art_col[i])] = 0;

    SimplexResult res;

    if (num_art > 0) {
        // phase 1: maximize -(sum of artificials), reduced against the start basis
        t.cost.assign(static_cast<size_t>(t.cols), 0.0);
        t.value = 0.0;
        for (size_t i = 0; i < m; ++i) {
            if (art_col[i] < 0) continue;
            for (int j = 0; j < t.cols; ++j) t.cost[static_cast<size_t>(j)] += t.a[i][static_cast<size_t>(j)];
            t.cost[static_cast<size_t>(art_col[i])] = 0.0;
            t.value -= t.b[i];
        }
        if (!t.run(enterable, iter_cap)) throw SolverError("simplex: phase 1 reported unbounded");
        if (t.value < -kPhase1Tol) {
            res.status = LpStatus::infeasible;
            res.iterations = t.iterations;
            return res;
        }
        // drive surviving artificials out of the basis (degenerate pivots)
        for (size_t i = 0; i < m; ++i) {
            if (t.basis[i] < n + num_slack) continue;
            int q = -1;
            for (int j = 0; j < n + num_slack && q < 0; ++j)
                if (std::fabs(t.a[i][static_cast<size_t>(j)]) > kPhase1Tol) q = j;
            if (q >= 0) t.pivot(static_cast<int>(i), q);
            // otherwise the row is redundant; its artificial stays basic at 0
        }
    }

    // phase 2: real objective, re-priced against the current basis
    t.cost.assign(static_cast<size_t>(t.cols), 0.0);
    for (int j = 0; j < n; ++j) t.cost[static_cast<size_t>(j)] = lp.objective[static_cast<size_t>(j)];
    t.value = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const int bj = t.basis[i];
        const double cb = (bj < n) ? lp.objective[static_cast<size_t>(bj)] : 0.0;
        if (cb == 0.0) continue;
        for (int j = 0; j < t.cols; ++j) t.cost[static_cast<size_t>(j)] -= cb * t.a[i][static_cast<size_t>(j)];
        t.value += cb * t.b[i];
    }
    if (!t.run(enterable, iter_cap)) {
        res.status = LpStatus::unbounded;
        res.iterations = t.iterations;
        return res;
    }

    res.status = LpStatus::optimal;
    res.iterations = t.iterations;
    res.x.assign(static_cast<size_t>(n), 0.0);
    for (size_t i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[static_cast<size_t>(t.basis[i])] = t.b[i];
    for (auto& v : res.x)
        if (std::fabs(v) < kDropTol) v = 0.0;

    double obj = 0.0;
    for (int j = 0; j < n; ++j) obj += lp.objective[static_cast<size_t>(j)] * res.x[static_cast<size_t>(j)];
    if (std::fabs(obj - t.value) > 1e-6 * (1.0 + std::fabs(obj)))
        throw SolverError("simplex: objective drift between tableau and solution");
    res.objective = obj;
    res.basis = t.basis;

    res.row_tight.assign(m, false);
    for (size_t i = 0; i < m; ++i) {
        if (rels[i] == Rel::eq) {
            res.row_tight[i] = true;
            continue;
        }
        const int sc = slack_col[i];
        double slack_val = 0.0;
        for (size_t r = 0; r < m; ++r)
            if (t.basis[r] == sc) slack_val = t.b[r];
        res.row_tight[i] = std::fabs(slack_val) <= kSimplexTol;
    }
    return res;
}

} // namespace recharge
