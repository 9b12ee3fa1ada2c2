#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "recharge/benchmarks.hpp"
#include "recharge/delay_lp.hpp"
#include "recharge/errors.hpp"
#include "recharge/instance.hpp"
#include "recharge/submodular.hpp"
#include "recharge/verify.hpp"

using namespace recharge;

namespace {

PayoffFunction constant(double p, int recovery = 1) {
    PayoffFunction f;
    f.recovery_time = recovery;
    f.values.assign(static_cast<size_t>(recovery), p);
    return f;
}

}  // namespace

TEST_CASE("exact planning on hand-checkable instances") {
    SUBCASE("a constant arm is played every round") {
        CHECK(dp_opt({constant(0.5), constant(0.0)}, 1, 5, kDefaultStateRoundBudget) ==
              doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("alternating step and constant arms") {
        // play the 0.6 arm on odd rounds and the recovered step arm on even
        // ones: 3 * (1.0 + 0.6) = 4.8 over six rounds
        CHECK(dp_opt({expand({1.0, 2}), constant(0.6)}, 1, 6, kDefaultStateRoundBudget) ==
              doctest::Approx(4.8).epsilon(1e-12));
    }
}

TEST_CASE("planning respects the state-round budget and refuses loudly") {
    std::vector<PayoffFunction> arms;
    for (int i = 0; i < 10; ++i) arms.push_back(constant(0.5, 10));
    try {
        dp_opt(arms, 2, 100, kDefaultStateRoundBudget);
        FAIL("expected a budget refusal");
    } catch (const BudgetExceeded& e) {
        const std::string msg = e.what();
        CHECK(msg.find("budget") != std::string::npos);
    }
}

TEST_CASE("the relaxation upper-bounds the exact optimum") {
    const CheckReport rep = check_lp_upper_bounds_dp(40, 4);
    CHECK(rep.failures == 0);
    CHECK(rep.worst_margin >= 0.0);
}

TEST_CASE("the exact optimum grows superadditively with the horizon") {
    const CheckReport rep = check_dp_superadditive(25, 5);
    CHECK(rep.failures == 0);
}

TEST_CASE("weighted rank takes the k heaviest members") {
    CHECK(weighted_rank({0.3, 0.7}, 1, 0b11u) == doctest::Approx(0.7));
    CHECK(weighted_rank({0.3, 0.7}, 1, 0u) == 0.0);
    CHECK(weighted_rank({0.5, 0.4, 0.3}, 2, 0b111u) == doctest::Approx(0.9));
    CHECK(weighted_rank({0.5, 0.4, 0.3}, 5, 0b111u) == doctest::Approx(1.2));
    CHECK(weighted_rank({0.5, 0.4, 0.3}, 2, 0b100u) == doctest::Approx(0.3));
}

TEST_CASE("the independent extension averages the rank over product draws") {
    CHECK(multilinear_exact({1.0, 1.0}, 1, {0.5, 0.5}) == doctest::Approx(0.75).epsilon(1e-12));
    SUBCASE("all-ones marginals collapse to the full-set rank") {
        CHECK(multilinear_exact({0.2, 0.9, 0.4}, 2, {1.0, 1.0, 1.0}) ==
              doctest::Approx(1.3).epsilon(1e-12));
    }
    SUBCASE("all-zero marginals yield zero") {
        CHECK(multilinear_exact({0.2, 0.9}, 1, {0.0, 0.0}) == 0.0);
    }
    SUBCASE("the enumeration guard refuses oversized ground sets") {
        std::vector<double> w(21, 0.5), y(21, 0.5);
        CHECK_THROWS_AS(multilinear_exact(w, 2, y), ConfigError);
    }
}

TEST_CASE("the sampled extension agrees with the exact one") {
    const std::vector<double> w = {0.9, 0.3, 0.6, 0.2};
    const std::vector<double> y = {0.4, 0.8, 0.1, 0.7};
    const double exact = multilinear_exact(w, 2, y);
    const McEstimate mc = multilinear_mc(w, 2, y, 200000, 44);
    CHECK(mc.se > 0.0);
    CHECK(std::fabs(mc.value - exact) <= 4.0 * mc.se);
}

TEST_CASE("the best correlated distribution splits mass across singletons") {
    CHECK(concave_closure_exact({1.0, 1.0}, 1, {0.5, 0.5}) ==
          doctest::Approx(1.0).epsilon(1e-9));
    SUBCASE("the subset-count guard refuses oversized ground sets") {
        std::vector<double> w(13, 0.5), y(13, 0.5);
        CHECK_THROWS_AS(concave_closure_exact(w, 1, y), ConfigError);
    }
}

TEST_CASE("the closure lp agrees with the greedy fractional bound") {
    const CheckReport rep = check_closure_matches_fractional_bound(120, 6);
    CHECK(rep.failures == 0);
}

TEST_CASE("the closure is midpoint concave") {
    const CheckReport rep = check_closure_concavity(40, 7);
    CHECK(rep.failures == 0);
}

TEST_CASE("both extensions collapse to the rank at binary marginals") {
    const CheckReport rep = check_multilinear_vertex_equality(120, 8);
    CHECK(rep.failures == 0);
}

TEST_CASE("the correlation gap holds on the worked example") {
    const GapCheck g = correlation_gap_check({1.0, 1.0}, 1, {0.5, 0.5});
    CHECK(g.f_independent == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(g.f_closure == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.ratio == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(g.gamma_k == doctest::Approx(1.0 - 1.0 / std::exp(1.0)).epsilon(1e-12));
    CHECK(g.ratio >= g.gamma_k);
    CHECK(g.holds);
}

TEST_CASE("a one-hot marginal has no gap at all") {
    const GapCheck g = correlation_gap_check({0.4, 0.9, 0.2}, 2, {0.0, 1.0, 0.0});
    CHECK(g.f_independent == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(g.f_closure == doctest::Approx(0.9).epsilon(1e-9));
    CHECK(g.ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.holds);
}

TEST_CASE("the correlation gap holds across a randomized sweep") {
    const CheckReport rep = check_gap_bounds(250, 9);
    CHECK(rep.failures == 0);
    CHECK(rep.trials == 250);
}

TEST_CASE("the closure dominates the linear functional under a small l1 norm") {
    const CheckReport rep = check_linear_lower_bound(250, 10);
    CHECK(rep.failures == 0);
}

TEST_CASE("exclusive coupling beats independence on the worked example") {
    const CouplingCheck c = exclusive_coupling_check({1.0, 1.0}, 1, {0.5, 0.5}, 0, 1);
    CHECK(c.e_dependent == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.e_independent == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(c.gap == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(c.holds);
}

TEST_CASE("the coupling degenerates when one marginal is zero") {
    const CouplingCheck c = exclusive_coupling_check({0.8, 0.5, 0.3}, 2, {0.6, 0.0, 0.4}, 1, 2);
    CHECK(c.e_dependent == doctest::Approx(c.e_independent).epsilon(1e-12));
}

TEST_CASE("coupled marginals must not exceed a unit total") {
    CHECK_THROWS_AS(exclusive_coupling_check({1.0, 1.0}, 1, {0.7, 0.7}, 0, 1), ConfigError);
}

TEST_CASE("exclusive coupling dominates across a randomized sweep") {
    const CheckReport rep = check_exclusive_coupling(200, 12);
    CHECK(rep.failures == 0);
}

TEST_CASE("the scheduler clears the multilinear floor end to end") {
    const CheckReport rep = check_schedule_meets_multilinear(5, 250, 13);
    CHECK(rep.failures == 0);
}
