#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semigor {

// Every failure mode gets its own kind so callers (and the CLI exit-code
// mapping) can tell bad input apart from an exhausted resource bound.
enum class ErrorKind {
    Overflow,
    ZeroVector,
    DimensionMismatch,
    EmptyGenerators,
    EmptyInput,
    NonPositiveDegree,
    GroupNotFull,
    GcdNotOne,
    DegreeCapExceeded,
    RadicalCapExceeded,
    WindowUnstable,
    StabilizationFailed,
    UnsupportedDimension,
    UnsupportedRing,
    NotSemiStandard,
    RetryExhausted,
    ParseError,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

// True for bounds a user can raise with a flag (CLI exit code 3); false for
// genuine input errors (exit code 2).
bool is_resource_error(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Error(ErrorKind kind, std::string message, std::vector<std::int64_t> witness)
        : std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const { return kind_; }

    // Populated by NotSemiStandard (the irreducible element) and similar
    // diagnoses where a concrete lattice vector explains the failure.
    const std::optional<std::vector<std::int64_t>>& witness() const { return witness_; }

  private:
    ErrorKind kind_;
    std::optional<std::vector<std::int64_t>> witness_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, std::string(error_kind_name(kind)) + ": " + message);
}

}  // namespace semigor
