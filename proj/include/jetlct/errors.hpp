#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jetlct {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text; `position` is a 0-based offset into the source string.
struct ParseError : Error {
    std::size_t position;

    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// A documented precondition was violated (wrong ambient, point off the
/// hypersurface, non-homogeneous input to a homogeneous-only operation, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A Gröbner computation ran out of its step or wall-clock budget.
/// Carries the partial progress; no basis is produced.
struct BudgetExceeded : Error {
    std::uint64_t steps_done = 0;
    std::size_t basis_size = 0;
    std::size_t pairs_remaining = 0;

    BudgetExceeded(std::uint64_t steps, std::size_t basis, std::size_t pairs)
        : Error("budget exceeded after " + std::to_string(steps) +
                " reduction steps (basis " + std::to_string(basis) + ", " +
                std::to_string(pairs) + " pairs left)"),
          steps_done(steps),
          basis_size(basis),
          pairs_remaining(pairs) {}
};

/// A hard size cap was exceeded (ambient variable cap, point-counting cap).
struct CapExceeded : Error {
    using Error::Error;
};

}  // namespace jetlct
