#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsc {

/// Malformed or out-of-contract input (bad facet lists, unknown vertices, ...).
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A construction would exceed a configured size cap.  Carries the estimate
/// that tripped the cap so callers can report how far over budget they were.
class cap_exceeded_error : public std::runtime_error {
public:
    cap_exceeded_error(const std::string& what, std::size_t estimate, std::size_t cap)
        : std::runtime_error(what + " (estimated " + std::to_string(estimate) +
                             ", cap " + std::to_string(cap) + ")"),
          estimate(estimate), cap(cap) {}
    std::size_t estimate;
    std::size_t cap;
};

/// A recursive search ran out of its call budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative numeric method failed to converge.
class numeric_failure_error : public std::runtime_error {
public:
    explicit numeric_failure_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed; indicates a bug, not a user error.
class internal_inconsistency_error : public std::logic_error {
public:
    explicit internal_inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace dsc
