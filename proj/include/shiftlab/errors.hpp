#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in ambient rings with different variable counts.
class AmbientMismatchError : public Error {
public:
    using Error::Error;
};

/// The operation is mathematically undefined for the given input
/// (typically the zero or the unit ideal).
class UndefinedInputError : public Error {
public:
    using Error::Error;
};

/// An argument is outside the operation's domain (not a generator,
/// index out of range, malformed bound vector, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Exponent arithmetic left the machine-width range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A configurable resource cap was exceeded (lattice size, search nodes,
/// component count, exact-arithmetic word size).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied certificate violates its stated contract,
/// e.g. a generator order that is not admissible.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Text input does not match the ideal/graph grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position(position) {}

    std::size_t position;
};

} // namespace shiftlab
