#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recharge/errors.hpp"

namespace recharge {

// Mean payoff of one arm as a function of the delay since its previous play.
// values[d-1] is the mean at delay d for d = 1..recovery_time; beyond the
// recovery time the payoff stays at the plateau values.back(). The table must
// be non-decreasing with entries in [0, 1].
struct PayoffFunction {
    int recovery_time = 1;
    std::vector<double> values;
};

// Payoff at a given delay. Delay 0 does not exist (an arm cannot be played
// twice in one round); asking for it is a contract violation.
double evaluate(const PayoffFunction& f, int64_t delay);

// Step payoff: 0 below delay d, then p. Expands to a table with recovery d.
struct HeavisideSpec {
    double p = 1.0;
    int d = 1;
};

PayoffFunction expand(const HeavisideSpec& spec);

struct Instance {
    int n = 0;       // number of arms
    int k = 0;       // plays allowed per round, 1 <= k < n
    int tau_max = 0; // universal upper bound on every recovery time
    std::vector<PayoffFunction> arms;
};

// Throws ParseError naming the offending arm/delay if any invariant fails.
void validate(const Instance& inst);

enum class InstanceKind { heaviside, concave, random_monotone };

InstanceKind parse_kind(const std::string& name);
std::string kind_name(InstanceKind kind);

// Deterministic generator; each arm draws from its own RNG stream, so the
// same seed yields the same instance on every platform.
Instance generate(InstanceKind kind, int n, int k, int tau_max, uint64_t seed);

// JSON round trip. Doubles are written with 17 significant digits so that
// load(save(x)) reproduces every payoff bit-exactly.
std::string to_json_text(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);
Instance instance_from_json_text(const std::string& text, const std::string& origin = "<string>");

} // namespace recharge
