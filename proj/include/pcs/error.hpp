#ifndef PCS_ERROR_HPP
#define PCS_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcs {

/// Input violates a documented precondition (bad scheme, bad parameters, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The Fisher information is not numerically positive definite.
class SingularInformation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every candidate of a GA generation failed to evaluate.
class OptimizationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive search refused because |CS(n, m)| exceeds the budget.
class InstanceTooLarge : public std::runtime_error {
public:
    InstanceTooLarge(std::uint64_t count, std::uint64_t budget)
        : std::runtime_error("instance too large for exhaustive search: |CS(n, m)| = " +
                             std::to_string(count) + " exceeds budget " + std::to_string(budget)),
          count_(count), budget_(budget) {}

    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t count_;
    std::uint64_t budget_;
};

/// Malformed scheme notation or configuration text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pcs

#endif  // PCS_ERROR_HPP
