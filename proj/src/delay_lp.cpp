#include "recharge/delay_lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "recharge/errors.hpp"

namespace recharge {

DelayLp build_lp(const std::vector<PayoffFunction>& arms, int k, const std::vector<int>& delay_caps) {
    if (arms.empty()) throw ConfigError("build_lp: no arms");
    if (k < 1) throw ConfigError("build_lp: k must be >= 1");
    if (delay_caps.size() != arms.size()) throw ConfigError("build_lp: one delay cap per arm required");

    DelayLp p;
    p.num_arms = static_cast<int>(arms.size());
    p.k = k;
    for (int i = 0; i < p.num_arms; ++i) {
        if (delay_caps[static_cast<size_t>(i)] < 1)
            throw ConfigError("build_lp: delay cap of arm " + std::to_string(i) + " must be >= 1");
        for (int tau = 1; tau <= delay_caps[static_cast<size_t>(i)]; ++tau)
            p.vars.push_back({i, tau});
    }

    const int nv = static_cast<int>(p.vars.size());
    p.lp.num_vars = nv;
    p.lp.objective.resize(static_cast<size_t>(nv));
    for (int j = 0; j < nv; ++j)
        p.lp.objective[static_cast<size_t>(j)] =
            evaluate(arms[static_cast<size_t>(p.vars[static_cast<size_t>(j)].arm)], p.vars[static_cast<size_t>(j)].tau);

    p.lp.rows.assign(static_cast<size_t>(1 + p.num_arms), std::vector<double>(static_cast<size_t>(nv), 0.0));
    p.lp.rels.assign(static_cast<size_t>(1 + p.num_arms), Rel::le);
    p.lp.rhs.assign(static_cast<size_t>(1 + p.num_arms), 1.0);
    p.lp.rhs[0] = static_cast<double>(k);
    for (int j = 0; j < nv; ++j) {
        const auto& v = p.vars[static_cast<size_t>(j)];
        p.lp.rows[0][static_cast<size_t>(j)] = 1.0;
        p.lp.rows[static_cast<size_t>(1 + v.arm)][static_cast<size_t>(j)] = static_cast<double>(v.tau);
    }
    return p;
}

DelayLp build_lp(const std::vector<PayoffFunction>& arms, int k) {
    std::vector<int> caps(arms.size());
    for (size_t i = 0; i < arms.size(); ++i) caps[i] = arms[i].recovery_time;
    return build_lp(arms, k, caps);
}

DelayLp build_lp(const Instance& inst) { return build_lp(inst.arms, inst.k); }

LpSolution solve_extreme(const DelayLp& p) {
    SimplexResult r = simplex_solve(p.lp);
    // x = 0 is feasible and the budget row bounds the objective, so anything
    // other than optimal means the solver itself went wrong
    if (r.status != LpStatus::optimal) throw SolverError("delay LP did not solve to optimality");

    LpSolution sol;
    sol.value = r.objective;
    sol.iterations = r.iterations;
    sol.basic_columns = r.basis;
    for (size_t i = 0; i < r.row_tight.size(); ++i)
        if (r.row_tight[i]) sol.tight_rows.push_back(static_cast<int>(i));

    std::set<int> supported;
    for (size_t j = 0; j < r.x.size(); ++j) {
        const double x = r.x[j];
        if (x <= kNonzeroTol) continue;
        const auto& v = p.vars[j];
        sol.nonzeros.push_back({v.arm, v.tau, x});
        supported.insert(v.arm);
    }
    std::sort(sol.nonzeros.begin(), sol.nonzeros.end(), [](const LpEntry& a, const LpEntry& b) {
        return a.arm != b.arm ? a.arm < b.arm : a.tau < b.tau;
    });
    sol.supported_arms.assign(supported.begin(), supported.end());

    // post checks: feasibility within tolerance and the vertex sparsity bound
    double total = 0.0;
    std::vector<double> arm_budget(static_cast<size_t>(p.num_arms), 0.0);
    for (size_t j = 0; j < r.x.size(); ++j) {
        if (r.x[j] < -kNonzeroTol) throw SolverError("delay LP returned a negative rate");
        total += r.x[j];
        arm_budget[static_cast<size_t>(p.vars[j].arm)] += p.vars[j].tau * r.x[j];
    }
    if (total > p.k + 1e-7) throw SolverError("delay LP solution violates the total rate budget");
    for (int i = 0; i < p.num_arms; ++i)
        if (arm_budget[static_cast<size_t>(i)] > 1.0 + 1e-7)
            throw SolverError("delay LP solution violates the delay budget of arm " + std::to_string(i));
    if (sol.nonzeros.size() > sol.supported_arms.size() + 1)
        throw SolverError("delay LP solution is not vertex-sparse");
    return sol;
}

DelayProfile extract_profile(const LpSolution& sol) {
    DelayProfile prof;
    std::vector<std::vector<LpEntry>> by_arm;
    for (const auto& e : sol.nonzeros) {
        if (by_arm.empty() || by_arm.back().front().arm != e.arm) by_arm.emplace_back();
        by_arm.back().push_back(e);
    }

    std::vector<int> irregular_arms;
    for (const auto& grp : by_arm) {
        const int arm = grp.front().arm;
        if (grp.size() == 1) {
            const auto& e = grp.front();
            const double exact = 1.0 / e.tau;
            if (std::fabs(e.x - exact) <= kRegularTol) {
                if (std::fabs(e.x - exact) > kNonzeroTol) {
                    char note[128];
                    std::snprintf(note, sizeof note,
                                  "arm %d: rate %.12g within classification band of 1/%d", arm, e.x,
                                  e.tau);
                    prof.notes.emplace_back(note);
                }
                prof.regular.emplace_back(arm, e.tau);
            } else if (e.x < exact) {
                irregular_arms.push_back(arm);
                if (irregular_arms.size() == 1)
                    prof.irregular = IrregularArm{arm, e.tau, e.x, std::nullopt, 0.0};
            } else {
                throw StructureViolation("arm " + std::to_string(arm) + ": rate " +
                                         std::to_string(e.x) + " at delay " + std::to_string(e.tau) +
                                         " exceeds 1/tau");
            }
        } else if (grp.size() == 2) {
            const auto& ea = grp[0];
            const auto& eb = grp[1];
            for (const auto& e : grp)
                if (e.x > 1.0 / e.tau + kRegularTol)
                    throw StructureViolation("arm " + std::to_string(arm) + ": rate " +
                                             std::to_string(e.x) + " at delay " +
                                             std::to_string(e.tau) + " exceeds 1/tau");
            if (ea.tau * ea.x + eb.tau * eb.x > 1.0 + kRegularTol)
                throw StructureViolation("arm " + std::to_string(arm) +
                                         ": two rates exceed the delay budget");
            irregular_arms.push_back(arm);
            if (irregular_arms.size() == 1)
                prof.irregular = IrregularArm{arm, ea.tau, ea.x, eb.tau, eb.x};
        } else {
            throw StructureViolation("arm " + std::to_string(arm) + ": " +
                                     std::to_string(grp.size()) +
                                     " nonzero rates, at most two are possible at a vertex");
        }
    }

    if (irregular_arms.size() > 1) {
        std::string msg = "multiple irregular arms:";
        for (int a : irregular_arms) msg += " " + std::to_string(a);
        throw StructureViolation(msg);
    }
    return prof;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string profile_to_json_text(const LpSolution& sol, const DelayProfile& prof) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"value\": " << fmt17(sol.value) << ",\n";
    out << "  \"nonzeros\": [";
    for (size_t i = 0; i < sol.nonzeros.size(); ++i) {
        const auto& e = sol.nonzeros[i];
        out << (i ? ", " : "") << "{\"arm\": " << e.arm << ", \"tau\": " << e.tau
            << ", \"x\": " << fmt17(e.x) << "}";
    }
    out << "],\n";
    out << "  \"regular\": [";
    for (size_t i = 0; i < prof.regular.size(); ++i)
        out << (i ? ", " : "") << "{\"arm\": " << prof.regular[i].first
            << ", \"tau\": " << prof.regular[i].second << "}";
    out << "],\n";
    out << "  \"irregular\": ";
    if (prof.irregular) {
        const auto& ir = *prof.irregular;
        out << "{\"arm\": " << ir.arm << ", \"tau_a\": " << ir.tau_a
            << ", \"x_a\": " << fmt17(ir.x_a);
        if (ir.tau_b) out << ", \"tau_b\": " << *ir.tau_b << ", \"x_b\": " << fmt17(ir.x_b);
        out << "}";
    } else {
        out << "null";
    }
    out << ",\n";
    out << "  \"basic_columns\": [";
    for (size_t i = 0; i < sol.basic_columns.size(); ++i)
        out << (i ? ", " : "") << sol.basic_columns[i];
    out << "],\n";
    out << "  \"tight_rows\": [";
    for (size_t i = 0; i < sol.tight_rows.size(); ++i) out << (i ? ", " : "") << sol.tight_rows[i];
    out << "]\n";
    out << "}\n";
    return out.str();
}

} // namespace recharge
