#include "recharge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "recharge/benchmarks.hpp"
#include "recharge/delay_lp.hpp"
#include "recharge/instance.hpp"
#include "recharge/rng.hpp"
#include "recharge/scheduler.hpp"
#include "recharge/submodular.hpp"

namespace recharge {

namespace {

constexpr double kTol = 1e-9;

// per-trial margin accumulator: the trial fails if any sub-check dips below
// zero; the first offending label is kept for the report.
struct TrialCheck {
    double margin = std::numeric_limits<double>::infinity();
    std::string first_bad;

    void add(double m, const std::string& what) {
        if (m < margin) margin = m;
        if (m < 0.0 && first_bad.empty()) first_bad = what;
    }
};

void fold(CheckReport& rep, const TrialCheck& tc, int trial) {
    ++rep.trials;
    if (tc.margin < rep.worst_margin) rep.worst_margin = tc.margin;
    if (!tc.first_bad.empty()) {
        ++rep.failures;
        if (rep.detail.empty()) {
            char buf[192];
            std::snprintf(buf, sizeof(buf), "trial %d: %s", trial,
                          tc.first_bad.c_str());
            rep.detail = buf;
        }
    }
}

CheckReport make_report(const std::string& name) {
    CheckReport rep;
    rep.name = name;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    return rep;
}

void finish(CheckReport& rep) {
    if (!std::isfinite(rep.worst_margin)) rep.worst_margin = 0.0;
}

Instance sample_instance(CounterRng& rng, int n_max, int tau_cap, int k_cap) {
    const int n = 2 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n_max - 1)));
    const int tau_max = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(tau_cap)));
    const int k_hi = std::min(k_cap, n - 1);
    const int k = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(k_hi)));
    const auto kind = static_cast<InstanceKind>(rng.next_below(3));
    return generate(kind, n, k, tau_max, rng.next_u64());
}

std::vector<double> sample_unit_vector(CounterRng& rng, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (double& x : v) x = rng.next_unit();
    return v;
}

// first lp column index of each arm (columns are arm-major, delay ascending).
std::vector<int> arm_column_starts(const DelayLp& dlp) {
    std::vector<int> start(static_cast<size_t>(dlp.num_arms) + 1, 0);
    for (size_t j = 0; j < dlp.vars.size(); ++j) {
        start[static_cast<size_t>(dlp.vars[j].arm) + 1] = static_cast<int>(j) + 1;
    }
    for (size_t i = 1; i < start.size(); ++i) start[i] = std::max(start[i], start[i - 1]);
    return start;
}

}  // namespace

CheckReport check_lp_vertex_structure(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("lp_vertex_structure");
    CounterRng rng(seed, 101);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 8, 6, 3);
            const LpSolution sol = solve_extreme(build_lp(inst));
            tc.add(static_cast<double>(sol.supported_arms.size()) + 1.0 -
                       static_cast<double>(sol.nonzeros.size()),
                   "more nonzeros than supported arms + 1");

            double total = 0.0;
            std::vector<double> load(static_cast<size_t>(inst.n), 0.0);
            for (const LpEntry& e : sol.nonzeros) {
                tc.add(e.x, "negative rate");
                total += e.x;
                load[static_cast<size_t>(e.arm)] += e.tau * e.x;
            }
            tc.add(inst.k + 1e-7 - total, "budget row violated");
            for (double l : load) tc.add(1.0 + 1e-7 - l, "per-arm row violated");

            const DelayProfile prof = extract_profile(sol);
            size_t covered = prof.regular.size() + (prof.irregular ? 1u : 0u);
            tc.add(covered == sol.supported_arms.size() ? 0.0 : -1.0,
                   "profile does not cover the support");
            for (const auto& [arm, tau] : prof.regular) {
                double x = 0.0;
                for (const LpEntry& e : sol.nonzeros) {
                    if (e.arm == arm && e.tau == tau) x = e.x;
                }
                tc.add(kRegularTol - std::fabs(x - 1.0 / tau),
                       "regular arm off the exact rate");
            }
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_lp_upper_bounds_dp(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("lp_upper_bounds_dp");
    CounterRng rng(seed, 102);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 4, 4, 2);
            const LpSolution sol = solve_extreme(build_lp(inst));
            for (int64_t horizon : {5, 10, 20}) {
                const double opt = dp_opt(inst, horizon, kDefaultStateRoundBudget);
                tc.add(static_cast<double>(horizon) * sol.value - opt + kTol,
                       "lp value fails to dominate the dp optimum");
            }
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_lp_beats_sampled_points(int trials, int points_per_instance,
                                          std::uint64_t seed) {
    CheckReport rep = make_report("lp_beats_sampled_points");
    CounterRng rng(seed, 103);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 6, 5, 3);
            const DelayLp dlp = build_lp(inst);
            const LpSolution sol = solve_extreme(dlp);
            const std::vector<int> start = arm_column_starts(dlp);
            for (int p = 0; p < points_per_instance; ++p) {
                std::vector<double> x(dlp.vars.size(), 0.0);
                for (int i = 0; i < inst.n; ++i) {
                    const int cols = start[static_cast<size_t>(i) + 1] - start[static_cast<size_t>(i)];
                    const int picks = 1 + static_cast<int>(rng.next_below(2));
                    for (int c = 0; c < picks; ++c) {
                        const int j = start[static_cast<size_t>(i)] +
                                      static_cast<int>(rng.next_below(static_cast<uint64_t>(cols)));
                        // each term adds at most 1/picks to the arm's load
                        x[static_cast<size_t>(j)] +=
                            rng.next_unit() / (dlp.vars[static_cast<size_t>(j)].tau * picks);
                    }
                }
                double total = std::accumulate(x.begin(), x.end(), 0.0);
                if (total > inst.k) {
                    const double scale = inst.k / total;
                    for (double& v : x) v *= scale;
                }
                double value = 0.0;
                for (size_t j = 0; j < x.size(); ++j) value += dlp.lp.objective[j] * x[j];
                tc.add(sol.value - value + kTol, "feasible point beats the lp value");
            }
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_lp_support_truncation(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("lp_support_truncation");
    CounterRng rng(seed, 104);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 6, 5, 3);
            const double v1 = solve_extreme(build_lp(inst)).value;
            std::vector<int> caps(static_cast<size_t>(inst.n));
            for (int i = 0; i < inst.n; ++i) {
                caps[static_cast<size_t>(i)] = 2 * inst.arms[static_cast<size_t>(i)].recovery_time;
            }
            const double v2 = solve_extreme(build_lp(inst.arms, inst.k, caps)).value;
            tc.add(kTol - std::fabs(v1 - v2), "extended delay grid moved the lp value");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_schedule_frequencies(int trials, int horizon, std::uint64_t seed) {
    CheckReport rep = make_report("schedule_frequencies_feasible");
    CounterRng rng(seed, 105);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 5, 4, 2);
            const LpSolution sol = solve_extreme(build_lp(inst));
            const DelayProfile prof = extract_profile(sol);
            const auto trace = run_trace(inst.arms, prof, inst.k, rng.next_u64(), horizon);

            // sums of play delays telescope to at most the horizon, so the
            // empirical play rates form a feasible lp point and the realized
            // mean cannot exceed the lp value.
            std::vector<double> delay_sum(static_cast<size_t>(inst.n), 0.0);
            double plays = 0.0;
            double payoff = 0.0;
            for (const TraceRow& row : trace) {
                payoff += row.payoff;
                tc.add(static_cast<double>(inst.k) - static_cast<double>(row.played.size()),
                       "more than k plays in a round");
                for (size_t j = 0; j < row.played.size(); ++j) {
                    delay_sum[static_cast<size_t>(row.played[j])] +=
                        static_cast<double>(row.delays[j]);
                    plays += 1.0;
                }
            }
            const double T = static_cast<double>(horizon);
            for (double s : delay_sum) tc.add(1.0 - s / T + 1e-12, "arm load above one");
            tc.add(inst.k - plays / T + 1e-12, "budget load above k");
            tc.add(sol.value - payoff / T + kTol, "realized mean beats the lp value");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_gap_bounds(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("correlation_gap_bounds");
    CounterRng rng(seed, 106);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const int n = 2 + static_cast<int>(rng.next_below(7));
            const int k = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            const std::vector<double> w = sample_unit_vector(rng, n);
            const std::vector<double> y = sample_unit_vector(rng, n);
            const GapCheck g = correlation_gap_check(w, k, y);
            tc.add(g.f_closure - g.f_independent + kTol, "independent exceeds closure");
            tc.add(g.f_independent - g.gamma_k * g.f_closure + kTol,
                   "independent below gamma_k times closure");
            tc.add(g.holds ? 0.0 : -1.0, "gap check flag disagrees");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_linear_lower_bound(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("closure_linear_lower_bound");
    CounterRng rng(seed, 107);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const int n = 2 + static_cast<int>(rng.next_below(7));
            const int k = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            const std::vector<double> w = sample_unit_vector(rng, n);
            std::vector<double> y = sample_unit_vector(rng, n);
            const double target = k * rng.next_unit();
            const double sum = std::accumulate(y.begin(), y.end(), 0.0);
            if (sum > target) {
                for (double& v : y) v *= target / sum;
            }
            double linear = 0.0;
            for (int i = 0; i < n; ++i) linear += w[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
            const double closure = concave_closure_exact(w, k, y);
            tc.add(closure - linear + kTol, "closure below the linear functional");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_exclusive_coupling(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("exclusive_coupling_dominates");
    CounterRng rng(seed, 108);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const int n = 2 + static_cast<int>(rng.next_below(7));
            const int k = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            const std::vector<double> w = sample_unit_vector(rng, n);
            std::vector<double> y = sample_unit_vector(rng, n);
            const int a = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            int b = static_cast<int>(rng.next_below(static_cast<uint64_t>(n - 1)));
            if (b >= a) ++b;
            if (y[static_cast<size_t>(a)] + y[static_cast<size_t>(b)] > 1.0) {
                const double s = rng.next_unit() /
                                 (y[static_cast<size_t>(a)] + y[static_cast<size_t>(b)]);
                y[static_cast<size_t>(a)] *= s;
                y[static_cast<size_t>(b)] *= s;
            }
            const CouplingCheck c = exclusive_coupling_check(w, k, y, a, b);
            tc.add(c.gap + kTol, "dependent rounding below independent");
            tc.add(c.holds ? 0.0 : -1.0, "coupling flag disagrees");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_closure_concavity(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("closure_midpoint_concavity");
    CounterRng rng(seed, 109);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const int n = 2 + static_cast<int>(rng.next_below(5));
            const int k = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            const std::vector<double> w = sample_unit_vector(rng, n);
            const std::vector<double> y1 = sample_unit_vector(rng, n);
            const std::vector<double> y2 = sample_unit_vector(rng, n);
            std::vector<double> mid(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                mid[static_cast<size_t>(i)] =
                    0.5 * (y1[static_cast<size_t>(i)] + y2[static_cast<size_t>(i)]);
            }
            const double fm = concave_closure_exact(w, k, mid);
            const double f1 = concave_closure_exact(w, k, y1);
            const double f2 = concave_closure_exact(w, k, y2);
            tc.add(fm - 0.5 * (f1 + f2) + kTol, "midpoint below the chord");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_closure_matches_fractional_bound(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("closure_matches_fractional_bound");
    CounterRng rng(seed, 110);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const int n = 2 + static_cast<int>(rng.next_below(7));
            const int k = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            const std::vector<double> w = sample_unit_vector(rng, n);
            const std::vector<double> y = sample_unit_vector(rng, n);
            const double lp = concave_closure_exact(w, k, y);
            const double greedy = fractional_rank_bound(w, k, y);
            tc.add(1e-7 - std::fabs(lp - greedy), "closure lp and greedy bound disagree");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_multilinear_vertex_equality(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("multilinear_vertex_equality");
    CounterRng rng(seed, 111);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const int n = 2 + static_cast<int>(rng.next_below(7));
            const int k = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
            const std::vector<double> w = sample_unit_vector(rng, n);
            const auto subset = static_cast<uint32_t>(rng.next_below(1ull << n));
            std::vector<double> y(static_cast<size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) {
                if (subset & (1u << i)) y[static_cast<size_t>(i)] = 1.0;
            }
            const double rank = weighted_rank(w, k, subset);
            tc.add(kTol - std::fabs(multilinear_exact(w, k, y) - rank),
                   "multilinear off the rank at a vertex");
            tc.add(1e-7 - std::fabs(concave_closure_exact(w, k, y) - rank),
                   "closure off the rank at a vertex");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_candidate_marginals(int inits, std::uint64_t seed) {
    CheckReport rep = make_report("candidate_marginals");
    // fixed profile: two exact-rate arms, one arm split across two periods
    // with total kept probability 0.7.
    DelayProfile prof;
    prof.regular = {{0, 3}, {1, 2}};
    IrregularArm ir;
    ir.arm = 2;
    ir.tau_a = 2;
    ir.x_a = 0.2;
    ir.tau_b = 3;
    ir.x_b = 0.1;
    prof.irregular = ir;
    const int64_t t = 7;

    int64_t c0 = 0, c1 = 0, c2 = 0;      // candidacy counts at round t
    int64_t joint_a = 0, joint_b = 0;    // arm 2 candidacy split by period
    std::vector<int64_t> off0(3, 0);     // arm 0 offset histogram
    CounterRng rng(seed, 112);
    const uint64_t base = rng.next_u64();
    for (int j = 0; j < inits; ++j) {
        const SchedulerState st = init_schedule(prof, 3, 1, base + static_cast<uint64_t>(j));
        for (const ScheduledArm& sa : st.arms) {
            if (sa.arm == 0) ++off0[static_cast<size_t>(sa.offset)];
        }
        for (int arm : candidates(st, t)) {
            if (arm == 0) ++c0;
            if (arm == 1) ++c1;
            if (arm == 2) {
                ++c2;
                for (const ScheduledArm& sa : st.arms) {
                    if (sa.arm == 2) (sa.tau_star == 2 ? joint_a : joint_b)++;
                }
            }
        }
    }

    TrialCheck tc;
    int bad_bands = 0;
    const double N = static_cast<double>(inits);
    auto band = [&](int64_t count, double p, const std::string& what) {
        const double sigma = std::sqrt(p * (1.0 - p) / N);
        const double margin = 3.0 * sigma - std::fabs(static_cast<double>(count) / N - p);
        if (margin < 0.0) ++bad_bands;
        tc.add(margin, what);
    };
    band(c0, 1.0 / 3.0, "regular arm candidacy off 1/tau");
    band(c1, 1.0 / 2.0, "regular arm candidacy off 1/tau");
    band(c2, ir.x_a + ir.x_b, "split arm candidacy off the rate sum");
    band(joint_a, ir.x_a, "joint candidacy off x_a");
    band(joint_b, ir.x_b, "joint candidacy off x_b");
    for (int64_t c : off0) band(c, 1.0 / 3.0, "offset histogram not uniform");
    fold(rep, tc, 0);
    finish(rep);
    // trials counts initializations; failures counts violated 3-sigma bands
    rep.trials = inits;
    rep.failures = bad_bands;
    return rep;
}

CheckReport check_delay_lower_bound(int trials, int horizon, std::uint64_t seed) {
    CheckReport rep = make_report("play_delays_respect_period");
    CounterRng rng(seed, 113);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 5, 4, 2);
            const LpSolution sol = solve_extreme(build_lp(inst));
            const DelayProfile prof = extract_profile(sol);
            SchedulerState st = init_schedule(prof, inst.n, inst.k, rng.next_u64());
            std::vector<int> period(static_cast<size_t>(inst.n), 0);
            for (const ScheduledArm& sa : st.arms) period[static_cast<size_t>(sa.arm)] = sa.tau_star;
            std::vector<bool> seen(static_cast<size_t>(inst.n), false);
            tc.add(0.0, "");
            for (int64_t round = 1; round <= horizon; ++round) {
                const RoundOutcome out = play_round(st, round, [&](int arm, int64_t d) {
                    return evaluate(inst.arms[static_cast<size_t>(arm)], d);
                });
                for (size_t j = 0; j < out.played.size(); ++j) {
                    const int arm = out.played[j];
                    const int64_t d = out.delays[j];
                    if (seen[static_cast<size_t>(arm)]) {
                        const int tau = period[static_cast<size_t>(arm)];
                        tc.add(static_cast<double>(d - tau), "repeat play under the period");
                        tc.add(d % tau == 0 ? 0.0 : -1.0, "repeat delay not a multiple of the period");
                    }
                    seen[static_cast<size_t>(arm)] = true;
                }
            }
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_dp_superadditive(int trials, std::uint64_t seed) {
    CheckReport rep = make_report("dp_superadditive");
    CounterRng rng(seed, 114);
    for (int t = 0; t < trials; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 4, 3, 2);
            const int64_t t1 = 1 + static_cast<int64_t>(rng.next_below(5));
            const int64_t t2 = 1 + static_cast<int64_t>(rng.next_below(5));
            const double o1 = dp_opt(inst, t1, kDefaultStateRoundBudget);
            const double o2 = dp_opt(inst, t2, kDefaultStateRoundBudget);
            const double o12 = dp_opt(inst, t1 + t2, kDefaultStateRoundBudget);
            tc.add(o12 - o1 - o2 + kTol, "optimum subadditive across a split");
            tc.add(o12 - o1 + kTol, "optimum decreased with more rounds");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

CheckReport check_schedule_meets_multilinear(int instances, int inits, std::uint64_t seed) {
    CheckReport rep = make_report("schedule_meets_multilinear");
    CounterRng rng(seed, 115);
    for (int t = 0; t < instances; ++t) {
        TrialCheck tc;
        try {
            const Instance inst = sample_instance(rng, 5, 4, 2);
            const LpSolution sol = solve_extreme(build_lp(inst));
            const DelayProfile prof = extract_profile(sol);

            // ground set with one element per profile rate: weight = payoff
            // at that period, marginal = the lp rate (1/tau for exact arms).
            std::vector<double> w, y;
            for (const auto& [arm, tau] : prof.regular) {
                w.push_back(evaluate(inst.arms[static_cast<size_t>(arm)], tau));
                y.push_back(1.0 / tau);
            }
            if (prof.irregular) {
                const IrregularArm& ir = *prof.irregular;
                w.push_back(evaluate(inst.arms[static_cast<size_t>(ir.arm)], ir.tau_a));
                y.push_back(ir.x_a);
                if (ir.tau_b) {
                    w.push_back(evaluate(inst.arms[static_cast<size_t>(ir.arm)], *ir.tau_b));
                    y.push_back(ir.x_b);
                }
            }
            if (w.empty()) {
                tc.add(0.0, "");
                fold(rep, tc, t);
                continue;
            }
            const double target = multilinear_exact(w, inst.k, y);

            const int64_t horizon = 60ll * inst.tau_max;
            double sum = 0.0, sumsq = 0.0;
            for (int j = 0; j < inits; ++j) {
                const double mean = schedule_mean_payoff(inst.arms, prof, inst.k,
                                                         rng.next_u64(), horizon,
                                                         inst.tau_max + 1);
                sum += mean;
                sumsq += mean * mean;
            }
            const double m = sum / inits;
            const double var = std::max(0.0, sumsq / inits - m * m);
            const double se = std::sqrt(var / inits);
            tc.add(m - target + 3.0 * se + 1e-7, "scheduler mean below the multilinear bound");
        } catch (const std::exception& e) {
            tc.add(-1.0, e.what());
        }
        fold(rep, tc, t);
    }
    finish(rep);
    return rep;
}

std::vector<CheckReport> verify_all(std::uint64_t seed) {
    std::vector<CheckReport> out;
    out.push_back(check_lp_vertex_structure(200, seed));
    out.push_back(check_lp_upper_bounds_dp(60, seed));
    out.push_back(check_lp_beats_sampled_points(40, 25, seed));
    out.push_back(check_lp_support_truncation(60, seed));
    out.push_back(check_schedule_frequencies(25, 600, seed));
    out.push_back(check_gap_bounds(300, seed));
    out.push_back(check_linear_lower_bound(300, seed));
    out.push_back(check_exclusive_coupling(200, seed));
    out.push_back(check_closure_concavity(60, seed));
    out.push_back(check_closure_matches_fractional_bound(200, seed));
    out.push_back(check_multilinear_vertex_equality(200, seed));
    out.push_back(check_candidate_marginals(20000, seed));
    out.push_back(check_delay_lower_bound(25, 400, seed));
    out.push_back(check_dp_superadditive(30, seed));
    out.push_back(check_schedule_meets_multilinear(6, 300, seed));
    return out;
}

}  // namespace recharge
