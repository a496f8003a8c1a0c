#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace boolfca {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; `line` is 1-based, 0 when not attributable.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A precondition of an operation does not hold for the given arguments.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An enumeration hit its work limit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

enum class OnExceed { fail, truncate };

/// Work limits for exhaustive enumerations.
struct EnumerationBudget {
    std::size_t max_k = 8;
    std::uint64_t max_nodes = 10'000'000;
    OnExceed on_exceed = OnExceed::fail;
};

/// Maximum object/attribute count accepted by operations that scan powersets.
inline constexpr std::size_t kMaxExhaustiveSize = 24;

/// Counts search nodes against a budget. Throws on overflow unless the budget
/// asks for truncation, in which case `exhausted()` turns true and the caller
/// stops early.
class NodeCounter {
public:
    NodeCounter(const EnumerationBudget& budget, const char* what) : budget_(budget), what_(what) {}

    /// Returns false once the budget is used up (truncate mode only).
    bool tick()
    {
        if (++nodes_ <= budget_.max_nodes) return true;
        if (budget_.on_exceed == OnExceed::fail)
            throw BudgetExceeded(std::string(what_) + ": node budget of " + std::to_string(budget_.max_nodes) +
                                 " exceeded");
        exhausted_ = true;
        return false;
    }
    [[nodiscard]] bool exhausted() const { return exhausted_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    const EnumerationBudget& budget_;
    const char* what_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace boolfca
