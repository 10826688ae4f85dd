#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hp {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A deletion/completion step whose arm or boundary condition fails.
struct InvalidStep : std::runtime_error {
    explicit InvalidStep(const std::string& what, int64_t step_index = -1)
        : std::runtime_error(what), step_index(step_index) {}
    int64_t step_index;  // 1-based position in a path, -1 for single ops
};

struct PatternViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIntegralResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WitnessInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReplayFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MidNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MidNotUnique : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, uint64_t states_expanded)
        : std::runtime_error(what), states_expanded(states_expanded) {}
    uint64_t states_expanded;
};

}  // namespace hp
