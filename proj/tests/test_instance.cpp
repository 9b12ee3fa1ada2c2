#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "recharge/errors.hpp"
#include "recharge/instance.hpp"

using namespace recharge;

namespace {

std::string temp_file(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("evaluate looks up the table and plateaus past the recovery time") {
    const PayoffFunction step = expand({1.0, 2});
    CHECK(evaluate(step, 1) == 0.0);
    CHECK(evaluate(step, 2) == 1.0);
    CHECK(evaluate(step, 7) == 1.0);

    PayoffFunction f;
    f.recovery_time = 3;
    f.values = {0.2, 0.5, 0.5};
    CHECK(evaluate(f, 2) == 0.5);
    CHECK(evaluate(f, 1) == 0.2);
    CHECK(evaluate(f, 100) == 0.5);
}

TEST_CASE("evaluate rejects delay zero, delays start at one") {
    const PayoffFunction f = expand({0.5, 1});
    CHECK_THROWS_AS(evaluate(f, 0), ConfigError);
    CHECK_THROWS_AS(evaluate(f, -3), ConfigError);
}

TEST_CASE("step expansion puts the jump at the threshold") {
    const PayoffFunction f = expand({0.9, 4});
    REQUIRE(f.recovery_time == 4);
    REQUIRE(f.values.size() == 4);
    CHECK(f.values[0] == 0.0);
    CHECK(f.values[2] == 0.0);
    CHECK(f.values[3] == 0.9);
}

TEST_CASE("generate is deterministic in the seed") {
    const Instance a = generate(InstanceKind::heaviside, 2, 1, 2, 7);
    const Instance b = generate(InstanceKind::heaviside, 2, 1, 2, 7);
    REQUIRE(a.n == b.n);
    for (int i = 0; i < a.n; ++i) {
        CHECK(a.arms[i].recovery_time == b.arms[i].recovery_time);
        CHECK(a.arms[i].values == b.arms[i].values);
    }
    const Instance c = generate(InstanceKind::heaviside, 2, 1, 2, 8);
    const bool same = a.arms[0].values == c.arms[0].values &&
                      a.arms[0].recovery_time == c.arms[0].recovery_time &&
                      a.arms[1].values == c.arms[1].values;
    CHECK_FALSE(same);
}

TEST_CASE("adding arms never changes the draws of earlier arms") {
    const Instance small = generate(InstanceKind::random_monotone, 3, 1, 5, 42);
    const Instance big = generate(InstanceKind::random_monotone, 6, 1, 5, 42);
    for (int i = 0; i < 3; ++i) {
        CHECK(small.arms[i].recovery_time == big.arms[i].recovery_time);
        CHECK(small.arms[i].values == big.arms[i].values);
    }
}

TEST_CASE("random-monotone tables are sorted non-decreasing") {
    const Instance inst = generate(InstanceKind::random_monotone, 5, 2, 4, 1);
    for (const PayoffFunction& f : inst.arms) {
        for (size_t j = 1; j < f.values.size(); ++j) {
            CHECK(f.values[j - 1] <= f.values[j]);
        }
    }
}

TEST_CASE("concave tables have non-increasing increments") {
    const Instance inst = generate(InstanceKind::concave, 3, 1, 8, 3);
    for (const PayoffFunction& f : inst.arms) {
        double prev_inc = 2.0;  // anything above the max possible first step
        for (size_t j = 0; j < f.values.size(); ++j) {
            const double inc = f.values[j] - (j ? f.values[j - 1] : 0.0);
            CHECK(inc <= prev_inc + 1e-12);
            CHECK(inc >= -1e-12);
            prev_inc = inc;
        }
    }
}

TEST_CASE("generate rejects budgets that are not below the arm count") {
    CHECK_THROWS_AS(generate(InstanceKind::heaviside, 2, 2, 3, 1), ConfigError);
    CHECK_THROWS_AS(generate(InstanceKind::heaviside, 3, 0, 3, 1), ConfigError);
    CHECK_THROWS_AS(generate(InstanceKind::heaviside, 1, 1, 3, 1), ConfigError);
}

TEST_CASE("validate rejects broken instances with a named arm and delay") {
    Instance inst;
    inst.n = 2;
    inst.k = 1;
    inst.tau_max = 2;
    inst.arms = {expand({0.5, 2}), expand({0.5, 2})};
    CHECK_NOTHROW(validate(inst));

    SUBCASE("budget equal to the arm count") {
        inst.k = 2;
        CHECK_THROWS_AS(validate(inst), ParseError);
    }
    SUBCASE("non-monotone table names the offending delay") {
        inst.arms[1].values = {0.5, 0.4};
        try {
            validate(inst);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("arm 1") != std::string::npos);
            CHECK(msg.find("delay 2") != std::string::npos);
        }
    }
    SUBCASE("value outside the unit interval") {
        inst.arms[0].values = {0.5, 1.5};
        CHECK_THROWS_AS(validate(inst), ParseError);
    }
    SUBCASE("recovery time above the global bound") {
        inst.arms[0].recovery_time = 3;
        inst.arms[0].values = {0.1, 0.2, 0.3};
        CHECK_THROWS_AS(validate(inst), ParseError);
    }
    SUBCASE("table length must match the recovery time") {
        inst.arms[0].values = {0.5};
        CHECK_THROWS_AS(validate(inst), ParseError);
    }
}

TEST_CASE("save and load round-trip bit-exactly") {
    const Instance inst = generate(InstanceKind::random_monotone, 4, 2, 5, 99);
    const std::string path = temp_file("recharge_roundtrip.json");
    save_instance(inst, path);
    const Instance back = load_instance(path);
    REQUIRE(back.n == inst.n);
    CHECK(back.k == inst.k);
    CHECK(back.tau_max == inst.tau_max);
    for (int i = 0; i < inst.n; ++i) {
        CHECK(back.arms[i].recovery_time == inst.arms[i].recovery_time);
        CHECK(back.arms[i].values == inst.arms[i].values);  // exact doubles
    }
    std::remove(path.c_str());
}

TEST_CASE("json text round-trip preserves every payoff bit") {
    const Instance inst = generate(InstanceKind::concave, 3, 1, 7, 5);
    const Instance back = instance_from_json_text(to_json_text(inst));
    for (int i = 0; i < inst.n; ++i) {
        CHECK(back.arms[i].values == inst.arms[i].values);
    }
}

TEST_CASE("loading malformed files raises structured parse errors") {
    SUBCASE("not json at all") {
        CHECK_THROWS_AS(instance_from_json_text("not json {", "inline"), ParseError);
    }
    SUBCASE("monotonicity violation is reported with arm and delay") {
        const char* text = R"({"n":2,"k":1,"tau_max":2,
            "arms":[{"recovery_time":2,"values":[0.5,0.4]},
                    {"recovery_time":1,"values":[0.3]}]})";
        try {
            instance_from_json_text(text, "inline");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("arm 0") != std::string::npos);
            CHECK(msg.find("delay 2") != std::string::npos);
        }
    }
    SUBCASE("budget k = n is rejected") {
        const char* text = R"({"n":2,"k":2,"tau_max":1,
            "arms":[{"recovery_time":1,"values":[0.5]},
                    {"recovery_time":1,"values":[0.3]}]})";
        CHECK_THROWS_AS(instance_from_json_text(text, "inline"), ParseError);
    }
    SUBCASE("missing file names the path") {
        try {
            load_instance("/definitely/not/here.json");
            FAIL("expected a config error");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("not/here.json") != std::string::npos);
        }
    }
}

TEST_CASE("kind names parse both ways") {
    CHECK(parse_kind("heaviside") == InstanceKind::heaviside);
    CHECK(parse_kind("concave") == InstanceKind::concave);
    CHECK(parse_kind("random-monotone") == InstanceKind::random_monotone);
    CHECK(kind_name(InstanceKind::random_monotone) == "random-monotone");
    CHECK_THROWS_AS(parse_kind("sinusoid"), ConfigError);
}
