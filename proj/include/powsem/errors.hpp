#ifndef POWSEM_ERRORS_HPP
#define POWSEM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace powsem {

// Thrown when a requested semigroup has an infinite complement (gcd of the
// generators is not 1).
struct InfiniteComplementError : std::domain_error {
    explicit InfiniteComplementError(std::uint64_t gcd_value)
        : std::domain_error("generators have gcd " + std::to_string(gcd_value) +
                            " != 1; the complement would be infinite"),
          gcd(gcd_value) {}
    std::uint64_t gcd;
};

// Additive closure failure, with the violating pair as witness.
struct ClosureError : std::domain_error {
    ClosureError(std::uint64_t x_, std::uint64_t y_)
        : std::domain_error("not additively closed: " + std::to_string(x_) + " + " +
                            std::to_string(y_) + " = " + std::to_string(x_ + y_) +
                            " is excluded"),
          x(x_), y(y_), sum(x_ + y_) {}
    std::uint64_t x, y, sum;
};

// A configured cap (carrier size, search nodes, survivor count) was exceeded.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A candidate map fails translation equivariance, so no quotient map exists.
struct IllDefinedQuotientError : std::domain_error {
    IllDefinedQuotientError(std::uint64_t shift_, std::string witness_)
        : std::domain_error("quotient map ill-defined: equivariance fails at shift " +
                            std::to_string(shift_) + " on " + witness_),
          shift(shift_), witness(std::move(witness_)) {}
    std::uint64_t shift;
    std::string witness;
};

} // namespace powsem

#endif
