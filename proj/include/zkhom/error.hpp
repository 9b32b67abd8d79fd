#pragma once

#include <stdexcept>
#include <string>

namespace zkhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient fields or group orders.
class DomainMismatchError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// A generator contained an empty vertex set.
class InvalidSimplexError : public Error {
public:
    using Error::Error;
};

class UnknownSimplexError : public Error {
public:
    using Error::Error;
};

/// Requested a boundary or chain dimension outside the complex.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Vertex permutation is not a bijection, not simplicial, or has the wrong order.
class InvalidActionError : public Error {
public:
    using Error::Error;
};

/// An operation that needs a regular action was handed a non-regular one.
class RegularityRequiredError : public Error {
public:
    using Error::Error;
};

/// Exponent is not coprime to the group order.
class InvalidGeneratorError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A structural invariant (coset property, complex-of-groups axiom, ...) failed.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace zkhom
