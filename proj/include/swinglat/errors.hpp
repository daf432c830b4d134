#pragma once

#include <stdexcept>
#include <string>

namespace swinglat {

/// Caller passed an id, edge, cell or parameter that the operation cannot accept.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal structural assertion failed. Indicates a corrupt or
/// non-semimodular diagram, never a user mistake.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Random generation ran out of retries.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace swinglat
