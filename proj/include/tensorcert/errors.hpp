#pragma once

#include <stdexcept>
#include <string>

namespace tensorcert {

/// A caller violated a documented precondition (shape mismatch, out-of-range
/// parameter, malformed factor family, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that could not be read as a rational, a factor list or an instance.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tensorcert
