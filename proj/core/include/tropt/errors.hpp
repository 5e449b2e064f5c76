#pragma once

#include <stdexcept>
#include <string>

namespace tropt {

/// Value outside the semifield carrier, inverse of zero, mixed tags, and similar misuse.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-conforming matrix/vector shapes.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem instance excluded by the solvability hypothesis (mu = zero).
struct IllPosedError : std::runtime_error {
    explicit IllPosedError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; indicates a bug, not an input condition.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Brute-force verifier would exceed its enumeration budget.
struct CostGuardError : std::runtime_error {
    explicit CostGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed JSON document (schema, tag or carrier violations).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tropt
