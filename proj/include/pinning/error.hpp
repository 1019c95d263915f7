#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pinning {

// Invalid arguments or malformed input data.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an exhaustive search would exceed its enumeration budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : Error("enumeration budget exceeded: C(N,l) = " + std::to_string(required) +
                " > budget " + std::to_string(budget)),
          required_(required), budget_(budget) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// The pinning criterion c * lambda1 > alpha does not hold, so a result that
// depends on it is undefined.
class CriterionNotMet : public Error {
public:
    using Error::Error;
};

}  // namespace pinning
