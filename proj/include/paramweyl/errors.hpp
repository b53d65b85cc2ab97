#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paramweyl {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched (n, p) contexts, zero inputs where nonzero is required, bad flags.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Syntax errors carry a 0-based character offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A checked precondition or verification failed; `witness` is a printable
// element or point demonstrating the failure.
class VerifyError : public Error {
public:
    VerifyError(const std::string& msg, std::string witness = "")
        : Error(witness.empty() ? msg : msg + "; witness: " + witness),
          witness_(std::move(witness)) {}
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

// A command was invoked with missing, unknown, or contradictory selections.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Configured search or matrix cap exceeded.
class LimitExceeded : public Error {
public:
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

// An internal invariant failed. Seeing this is a bug.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

} // namespace paramweyl
