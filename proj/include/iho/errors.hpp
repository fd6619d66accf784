#pragma once

#include <stdexcept>
#include <string>

namespace iho {

// Series/iteration did not reach the stopping rule within the term budget.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma function evaluated at a non-positive integer.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct GridMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InterpolationError : std::domain_error {
    using std::domain_error::domain_error;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace iho
