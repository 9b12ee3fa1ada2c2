#include "recharge/instance.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "recharge/rng.hpp"

namespace recharge {

double evaluate(const PayoffFunction& f, int64_t delay) {
    if (delay < 1)
        throw ConfigError("payoff queried at delay " + std::to_string(delay) +
                          "; delays start at 1");
    const int64_t idx = std::min<int64_t>(delay, f.recovery_time) - 1;
    return f.values[static_cast<size_t>(idx)];
}

PayoffFunction expand(const HeavisideSpec& spec) {
    if (spec.d < 1) throw ConfigError("heaviside threshold must be >= 1");
    if (spec.p < 0.0 || spec.p > 1.0) throw ConfigError("heaviside level must be in [0,1]");
    PayoffFunction f;
    f.recovery_time = spec.d;
    f.values.assign(static_cast<size_t>(spec.d), 0.0);
    f.values.back() = spec.p;
    return f;
}

namespace {

void validate_arm(const PayoffFunction& f, int arm, int tau_max) {
    if (f.recovery_time < 1)
        throw ParseError("arm " + std::to_string(arm) + ": recovery_time " +
                         std::to_string(f.recovery_time) + " must be >= 1");
    if (f.recovery_time > tau_max)
        throw ParseError("arm " + std::to_string(arm) + ": recovery_time " +
                         std::to_string(f.recovery_time) + " exceeds tau_max " +
                         std::to_string(tau_max));
    if (static_cast<int>(f.values.size()) != f.recovery_time)
        throw ParseError("arm " + std::to_string(arm) + ": expected " +
                         std::to_string(f.recovery_time) + " payoff values, got " +
                         std::to_string(f.values.size()));
    for (int d = 1; d <= f.recovery_time; ++d) {
        const double v = f.values[static_cast<size_t>(d - 1)];
        if (!(v >= 0.0 && v <= 1.0))
            throw ParseError("arm " + std::to_string(arm) + ", delay " + std::to_string(d) +
                             ": payoff " + std::to_string(v) + " outside [0,1]");
        if (d > 1 && v < f.values[static_cast<size_t>(d - 2)])
            throw ParseError("arm " + std::to_string(arm) + ", delay " + std::to_string(d) +
                             ": payoff decreases (" + std::to_string(v) + " < " +
                             std::to_string(f.values[static_cast<size_t>(d - 2)]) + ")");
    }
}

} // namespace

void validate(const Instance& inst) {
    if (inst.n < 2) throw ParseError("instance needs at least 2 arms");
    if (inst.k < 1 || inst.k >= inst.n)
        throw ParseError("k = " + std::to_string(inst.k) + " must satisfy 1 <= k < n = " +
                         std::to_string(inst.n));
    if (static_cast<int>(inst.arms.size()) != inst.n)
        throw ParseError("instance declares n = " + std::to_string(inst.n) + " but carries " +
                         std::to_string(inst.arms.size()) + " arms");
    if (inst.tau_max < 1) throw ParseError("tau_max must be >= 1");
    for (int i = 0; i < inst.n; ++i) validate_arm(inst.arms[static_cast<size_t>(i)], i, inst.tau_max);
}

InstanceKind parse_kind(const std::string& name) {
    if (name == "heaviside") return InstanceKind::heaviside;
    if (name == "concave") return InstanceKind::concave;
    if (name == "random-monotone") return InstanceKind::random_monotone;
    throw ConfigError("unknown instance kind '" + name +
                      "' (expected heaviside, concave or random-monotone)");
}

std::string kind_name(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::heaviside: return "heaviside";
        case InstanceKind::concave: return "concave";
        case InstanceKind::random_monotone: return "random-monotone";
    }
    return "?";
}

Instance generate(InstanceKind kind, int n, int k, int tau_max, uint64_t seed) {
    if (n < 2) throw ConfigError("generate: need n >= 2 arms");
    if (k < 1 || k >= n) throw ConfigError("generate: need 1 <= k < n");
    if (tau_max < 1) throw ConfigError("generate: need tau_max >= 1");

    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.tau_max = tau_max;
    inst.arms.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        CounterRng rng(seed, static_cast<uint64_t>(i));
        const int d = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(tau_max)));
        PayoffFunction f;
        f.recovery_time = d;
        switch (kind) {
            case InstanceKind::heaviside: {
                f.values.assign(static_cast<size_t>(d), 0.0);
                f.values.back() = rng.next_unit();
                break;
            }
            case InstanceKind::concave: {
                // non-increasing increments give a concave, non-decreasing table
                const double cap = rng.next_unit();
                std::vector<double> inc(static_cast<size_t>(d));
                for (auto& g : inc) g = rng.next_unit();
                std::sort(inc.begin(), inc.end(), std::greater<double>());
                double total = 0.0;
                for (double g : inc) total += g;
                if (total <= 0.0) total = 1.0;
                double run = 0.0;
                f.values.resize(static_cast<size_t>(d));
                for (int j = 0; j < d; ++j) {
                    run += inc[static_cast<size_t>(j)];
                    f.values[static_cast<size_t>(j)] = cap * run / total;
                }
                f.values.back() = cap; // exact plateau, no rounding residue
                break;
            }
            case InstanceKind::random_monotone: {
                f.values.resize(static_cast<size_t>(d));
                for (auto& v : f.values) v = rng.next_unit();
                std::sort(f.values.begin(), f.values.end());
                break;
            }
        }
        inst.arms.push_back(std::move(f));
    }
    validate(inst);
    return inst;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string to_json_text(const Instance& inst) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"n\": " << inst.n << ",\n";
    out << "  \"k\": " << inst.k << ",\n";
    out << "  \"tau_max\": " << inst.tau_max << ",\n";
    out << "  \"arms\": [\n";
    for (size_t i = 0; i < inst.arms.size(); ++i) {
        const auto& f = inst.arms[i];
        out << "    {\"recovery_time\": " << f.recovery_time << ", \"values\": [";
        for (size_t j = 0; j < f.values.size(); ++j) {
            if (j) out << ", ";
            out << fmt17(f.values[j]);
        }
        out << "]}" << (i + 1 < inst.arms.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

void save_instance(const Instance& inst, const std::string& path) {
    validate(inst);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << to_json_text(inst);
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

Instance instance_from_json_text(const std::string& text, const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(origin + ": not valid JSON: " + e.what());
    }
    auto need = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field))
            throw ParseError(origin + ": missing field '" + std::string(field) + "'");
        return j.at(field);
    };
    Instance inst;
    try {
        inst.n = need("n").get<int>();
        inst.k = need("k").get<int>();
        inst.tau_max = need("tau_max").get<int>();
        const auto& arms = need("arms");
        if (!arms.is_array()) throw ParseError(origin + ": 'arms' must be an array");
        int idx = 0;
        for (const auto& a : arms) {
            PayoffFunction f;
            if (!a.contains("recovery_time"))
                throw ParseError(origin + ": arm " + std::to_string(idx) +
                                 ": missing 'recovery_time'");
            if (!a.contains("values"))
                throw ParseError(origin + ": arm " + std::to_string(idx) + ": missing 'values'");
            f.recovery_time = a.at("recovery_time").get<int>();
            f.values = a.at("values").get<std::vector<double>>();
            inst.arms.push_back(std::move(f));
            ++idx;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(origin + ": malformed field: " + e.what());
    }
    try {
        validate(inst);
    } catch (const ParseError& e) {
        throw ParseError(origin + ": " + e.what());
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open instance file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return instance_from_json_text(buf.str(), path);
}

} // namespace recharge
