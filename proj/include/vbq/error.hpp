#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vbq {

// Malformed input: bad table shape, out-of-range entry, non-permutation,
// invalid group table, unparsable text.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Constructor parameters that violate a documented precondition.
class ParameterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public StructureError {
public:
    using StructureError::StructureError;
};

// A search or enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("work bound " + std::to_string(required) +
                             " exceeds budget " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace vbq
