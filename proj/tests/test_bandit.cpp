#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "recharge/bandit.hpp"
#include "recharge/delay_lp.hpp"
#include "recharge/errors.hpp"
#include "recharge/instance.hpp"
#include "recharge/scheduler.hpp"

using namespace recharge;

namespace {

PayoffFunction constant(double p, int recovery = 1) {
    PayoffFunction f;
    f.recovery_time = recovery;
    f.values.assign(static_cast<size_t>(recovery), p);
    return f;
}

const NoiseModel kNoNoise{NoiseKind::none, 0.0};

}  // namespace

TEST_CASE("noise specifications parse and reject out-of-range widths") {
    CHECK(parse_noise("bernoulli").kind == NoiseKind::bernoulli);
    CHECK(parse_noise("none").kind == NoiseKind::none);
    const NoiseModel u = parse_noise("uniform");
    CHECK(u.kind == NoiseKind::uniform);
    CHECK(u.half_width == doctest::Approx(0.1));
    CHECK(parse_noise("uniform:0.3").half_width == doctest::Approx(0.3));
    CHECK_THROWS_AS(parse_noise("uniform:0.7"), ConfigError);
    CHECK_THROWS_AS(parse_noise("gaussian"), ConfigError);
    CHECK(noise_name(parse_noise("uniform:0.25")) == "uniform:0.25");
}

TEST_CASE("the environment tracks delays and rejects stale clocks") {
    StochasticEnv env({constant(0.5, 2), constant(0.25)}, 2, kNoNoise, 1);
    CHECK(env.current_delay(0, 3) == 3);
    env.play(0, 3);
    CHECK(env.current_delay(0, 5) == 2);
    env.play(0, 5);
    REQUIRE(env.history().size() == 2);
    CHECK(env.history()[0].delay == 3);
    CHECK(env.history()[1].delay == 2);
    CHECK_THROWS_AS(env.play(0, 5), ConfigError);

    env.reanchor(10);
    CHECK(env.current_delay(0, 12) == 2);
    CHECK(env.current_delay(1, 12) == 2);
}

TEST_CASE("noiseless payoffs equal the mean table") {
    StochasticEnv env({expand({0.75, 2}), constant(0.5)}, 2, kNoNoise, 3);
    CHECK(env.play(0, 1) == 0.0);   // delay 1 is below the step
    CHECK(env.play(0, 3) == 0.75);  // recovered
    CHECK(env.play(1, 1) == 0.5);
}

TEST_CASE("bernoulli draws are binary with the right frequency") {
    StochasticEnv env({constant(0.3), constant(0.5)}, 1,
                      {NoiseKind::bernoulli, 0.0}, 7);
    const int pulls = 20000;
    double sum = 0.0;
    for (int t = 1; t <= pulls; ++t) {
        const double v = env.play(0, t);
        CHECK((v == 0.0 || v == 1.0));
        sum += v;
    }
    const double sigma = std::sqrt(0.3 * 0.7 / pulls);
    CHECK(std::fabs(sum / pulls - 0.3) <= 3.0 * sigma);
}

TEST_CASE("uniform noise keeps its mean and shrinks at the boundary") {
    // requested width 0.2 exceeds the headroom below 0: effective width 0.05
    StochasticEnv env({constant(0.05), constant(0.5)}, 1, {NoiseKind::uniform, 0.2}, 9);
    const int pulls = 20000;
    double sum = 0.0;
    for (int t = 1; t <= pulls; ++t) {
        const double v = env.play(0, t);
        CHECK(v >= 0.0);
        CHECK(v <= 0.1 + 1e-12);
        sum += v;
    }
    const double se = (0.05 / std::sqrt(3.0)) / std::sqrt(static_cast<double>(pulls));
    CHECK(std::fabs(sum / pulls - 0.05) <= 4.0 * se);
}

TEST_CASE("sample-count formula matches the worked example and is monotone") {
    CHECK(required_samples(0.1, 0.01, 2, 4) == 369);
    CHECK(required_samples(0.2, 0.01, 2, 4) <= 369);
    CHECK(required_samples(0.1, 0.01, 4, 4) > 369);   // more arms, more samples
    CHECK(required_samples(0.1, 0.001, 2, 4) > 369);  // tighter confidence too
    CHECK_THROWS_AS(required_samples(0.0, 0.01, 2, 4), ConfigError);
    CHECK_THROWS_AS(required_samples(0.1, 1.0, 2, 4), ConfigError);
}

TEST_CASE("a single always-ready arm explores in exactly m rounds") {
    StochasticEnv env({constant(0.5)}, 1, kNoNoise, 5);
    const ExplorationLog log = explore(env, 10, 1);
    CHECK(log.rounds_used == 10);
    CHECK(log.estimates.estimate(0, 1) == doctest::Approx(0.5));
}

TEST_CASE("exploration fills every cell at its exact target delay") {
    const Instance inst = generate(InstanceKind::random_monotone, 2, 1, 2, 21);
    StochasticEnv env(inst, kNoNoise, 21);
    const int64_t m = 2;
    const ExplorationLog log = explore(env, m, inst.k);
    // documented packing bound: 4 * n * m * tau_max^2 / k rounds
    CHECK(log.rounds_used <= 4 * 2 * m * 2 * 2);

    int64_t counted[2][2] = {{0, 0}, {0, 0}};
    for (const SampleAuditRow& row : log.audit) {
        CHECK(row.delay == row.tau);  // every sample sits at its target delay
        ++counted[row.arm][row.tau - 1];
    }
    for (int i = 0; i < 2; ++i) {
        for (int tau = 1; tau <= 2; ++tau) {
            CHECK(counted[i][tau - 1] >= m);
        }
    }
    // the audit agrees with the environment's own history
    for (const SampleAuditRow& row : log.audit) {
        const bool found = std::any_of(
            env.history().begin(), env.history().end(), [&](const PlayRecord& r) {
                return r.arm == row.arm && r.t == row.t && r.delay == row.delay;
            });
        CHECK(found);
    }
}

TEST_CASE("estimates concentrate at the advertised confidence") {
    const double eps = 0.25, delta = 0.2;
    const Instance inst = generate(InstanceKind::random_monotone, 2, 1, 2, 42);
    const int64_t m = required_samples(eps, delta, inst.n, inst.tau_max);
    const int reps = 200;
    int covered = 0;
    for (int r = 0; r < reps; ++r) {
        StochasticEnv env(inst, {NoiseKind::bernoulli, 0.0}, 1000u + static_cast<uint64_t>(r));
        const ExplorationLog log = explore(env, m, inst.k);
        double worst = 0.0;
        for (int i = 0; i < inst.n; ++i) {
            for (int tau = 1; tau <= inst.tau_max; ++tau) {
                const double err = std::fabs(log.estimates.estimate(i, tau) -
                                             env.mean_payoff(i, tau));
                worst = std::max(worst, err);
            }
        }
        if (worst <= eps) ++covered;
    }
    const double sigma = std::sqrt((1.0 - delta) * delta / reps);
    CHECK(static_cast<double>(covered) / reps >= 1.0 - delta - 3.0 * sigma);
}

TEST_CASE("estimate tables convert to payoff tables without a monotonicity gate") {
    EstimateTable tab;
    tab.n = 1;
    tab.tau_max = 2;
    tab.count = {{3, 3}};
    tab.sum = {{1.8, 0.9}};  // estimated means 0.6 then 0.3: not monotone
    const std::vector<PayoffFunction> arms = tab.as_payoffs();
    REQUIRE(arms.size() == 1);
    CHECK(arms[0].recovery_time == 2);
    CHECK(arms[0].values[0] == doctest::Approx(0.6));
    CHECK(arms[0].values[1] == doctest::Approx(0.3));
}

TEST_CASE("learning refuses horizons the exploration would exhaust") {
    const Instance inst = generate(InstanceKind::random_monotone, 2, 1, 2, 3);
    StochasticEnv env(inst, kNoNoise, 3);
    try {
        etc_run(env, inst.k, 50, 0.1, 0.1, 3);
        FAIL("expected a budget refusal");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("exploration") != std::string::npos);
    }
}

TEST_CASE("the ledger conserves payoff and accounts every round") {
    const Instance inst = generate(InstanceKind::random_monotone, 3, 1, 2, 8);
    StochasticEnv env(inst, {NoiseKind::bernoulli, 0.0}, 8);
    const EtcResult res = etc_run(env, inst.k, 3000, 0.2, 0.05, 8);
    const RegretLedger& led = res.ledger;
    REQUIRE(led.per_round.size() == 3000);
    CHECK(led.explore_rounds > 0);
    CHECK(led.explore_rounds < 3000);
    double acc = 0.0;
    for (double v : led.per_round) acc += v;
    CHECK(acc == led.realized_total);  // exact, same summation order
    CHECK(led.regret() == doctest::Approx(led.gamma_k * led.benchmark_total -
                                          led.realized_total));
    CHECK(led.m == required_samples(0.2, 0.05, inst.n, inst.tau_max));
    CHECK_FALSE(led.benchmark_is_upper_bound);  // this instance is dp-sized
}

TEST_CASE("oversized instances fall back to the pessimistic benchmark") {
    // 8^9 delay states overflow the configured state budget, so the ledger
    // must score against horizon * relaxed value and say so
    std::vector<PayoffFunction> arms;
    for (int i = 0; i < 9; ++i) arms.push_back(constant(0.5, 8));
    Instance inst;
    inst.n = 9;
    inst.k = 2;
    inst.tau_max = 8;
    inst.arms = arms;
    StochasticEnv env(inst, kNoNoise, 4);
    const EtcResult res = etc_run(env, inst.k, 5000, 0.9, 0.3, 4);
    CHECK(res.ledger.benchmark_is_upper_bound);
    CHECK(res.ledger.benchmark_total > 0.0);
}

TEST_CASE("with zero noise the commit phase replays the planner bit for bit") {
    SUBCASE("recovery times at the global bound give identical grids") {
        // dyadic payoffs make the empirical means reproduce the table exactly
        std::vector<PayoffFunction> arms;
        arms.push_back({2, {0.25, 0.75}});
        arms.push_back({2, {0.5, 0.5}});
        arms.push_back({2, {0.0, 1.0}});
        Instance inst;
        inst.n = 3;
        inst.k = 1;
        inst.tau_max = 2;
        inst.arms = arms;

        StochasticEnv env(inst, kNoNoise, 11);
        const EtcResult res = etc_run(env, inst.k, 2000, 0.3, 0.2, 11, 10'000'000, true);
        const DelayProfile true_prof = extract_profile(solve_extreme(build_lp(inst)));
        const auto planned = run_trace(inst.arms, true_prof, inst.k, 11,
                                       static_cast<int64_t>(res.commit_trace.size()));
        REQUIRE(res.commit_trace.size() == planned.size());
        for (size_t i = 0; i < planned.size(); ++i) {
            CHECK(res.commit_trace[i].payoff == planned[i].payoff);
            CHECK(res.commit_trace[i].played == planned[i].played);
            CHECK(res.commit_trace[i].delays == planned[i].delays);
        }
    }
    SUBCASE("shorter recovery times still replay on the estimated profile") {
        std::vector<PayoffFunction> arms;
        arms.push_back({1, {0.5}});
        arms.push_back({3, {0.0, 0.25, 0.75}});
        Instance inst;
        inst.n = 2;
        inst.k = 1;
        inst.tau_max = 3;
        inst.arms = arms;

        StochasticEnv env(inst, kNoNoise, 19);
        const EtcResult res = etc_run(env, inst.k, 2000, 0.3, 0.2, 19, 10'000'000, true);
        const auto planned = run_trace(inst.arms, res.profile_hat, inst.k, 19,
                                       static_cast<int64_t>(res.commit_trace.size()));
        REQUIRE(res.commit_trace.size() == planned.size());
        for (size_t i = 0; i < planned.size(); ++i) {
            CHECK(res.commit_trace[i].payoff == planned[i].payoff);
            CHECK(res.commit_trace[i].played == planned[i].played);
        }
    }
}

TEST_CASE("the horizon-tuned accuracy matches the worked example") {
    const EpsilonChoice c = tune_epsilon(2, 1, 2, 10000);
    CHECK(c.epsilon == doctest::Approx(0.20386).epsilon(1e-3));
    CHECK(c.delta == doctest::Approx(1e-4).epsilon(1e-12));

    SUBCASE("more rounds push the accuracy toward zero") {
        CHECK(tune_epsilon(2, 1, 2, 100000000).epsilon < c.epsilon);
    }
    SUBCASE("tiny horizons clip below one") {
        CHECK(tune_epsilon(20, 1, 10, 2).epsilon < 1.0);
    }
    SUBCASE("quadrupling the horizon roughly quarters epsilon cubed") {
        const double e1 = tune_epsilon(2, 1, 2, 10000).epsilon;
        const double e4 = tune_epsilon(2, 1, 2, 40000).epsilon;
        const double shrink = (e4 * e4 * e4) / (e1 * e1 * e1);
        CHECK(shrink < 0.30);  // 1/4 up to the log factor
        CHECK(shrink > 0.20);
    }
}
