#pragma once

#include <stdexcept>
#include <string>

namespace symplobs {

// Malformed or mismatched input (dimension mismatch, bad coefficients, unknown names).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// The requested characteristic class is not determined for this algebroid kind.
class UnsupportedKind : public std::logic_error {
public:
    explicit UnsupportedKind(const std::string& what) : std::logic_error(what) {}
};

} // namespace symplobs
