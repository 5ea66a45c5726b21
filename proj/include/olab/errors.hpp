#pragma once

#include <stdexcept>
#include <string>

namespace olab {

/// Malformed user input (group strings, ring element text, form files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// The group is well formed but outside what the engines handle.
class UnsupportedGroup : public std::runtime_error {
public:
    explicit UnsupportedGroup(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violated by a caller (mismatched groups, bad degree, ...).
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal identity failed to hold (d∘d != 0, witness does not verify, ...).
/// Always signals a bug, never a property of the input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

inline void check_consistency(bool ok, const std::string& what)
{
    if (!ok)
        throw ConsistencyError(what);
}

} // namespace olab
