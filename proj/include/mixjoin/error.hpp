#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixjoin {

/// Malformed user input: bad expression, bad JSON, out-of-range index.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression syntax error carrying the byte offset where parsing stopped.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Arguments that are well-formed but outside an operation's domain
/// (zero polynomial where a support is needed, singular block, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A library invariant did not hold; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace mixjoin
