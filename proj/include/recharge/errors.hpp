#pragma once

#include <stdexcept>
#include <string>

namespace recharge {

// Bad parameters, bad CLI flags, malformed inputs. CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed instance or solution files. Messages name the offending arm/delay.
struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};

// Work refused because it would exceed a configured budget. The message carries
// the required and allowed amounts so callers can adjust.
struct BudgetExceeded : ConfigError {
    using ConfigError::ConfigError;
};

// LP solver failure: cycling guard tripped or internal inconsistency detected.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An LP solution that does not have the sparse per-arm structure the planner
// relies on (at most one fractional-rate arm, all others at rate 1/tau).
struct StructureViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace recharge
