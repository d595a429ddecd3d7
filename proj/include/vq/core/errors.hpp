#pragma once

#include <stdexcept>
#include <string>

namespace vq {

// Caller passed arguments outside the documented grammar (bad flag values,
// composite where a prime is required, mismatched rings, ...).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically undefined input, e.g. the valuation of zero.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A postcondition that the mathematics guarantees did not hold. Never caught
// internally; it means a bug or a false identity.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace vq
