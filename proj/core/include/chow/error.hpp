#pragma once

#include <stdexcept>
#include <string>

namespace chow {

// Invalid input or an unsatisfiable request (bad parse, degree out of range,
// unknown catalog id, ...).  Maps to CLI exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// The two independent decision routes disagreed, or an internal consistency
// check failed.  Never caught inside the engine.  Maps to CLI exit code 3.
struct EngineInconsistency : std::logic_error {
    explicit EngineInconsistency(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace chow
