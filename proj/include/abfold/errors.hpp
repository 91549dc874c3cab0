#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abfold {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is 1-based and counts bytes of the
/// original text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Sequence shorter than three monomers (no angle to optimize).
class InstanceTooSmall : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Numeric argument outside the domain of an operation (non-finite angle,
/// non-unit direction, index out of range).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace abfold
