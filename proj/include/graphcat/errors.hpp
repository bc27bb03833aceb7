#ifndef GRAPHCAT_ERRORS_HPP
#define GRAPHCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphcat {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded (power sets, products, search spaces).
class CapError : public Error {
public:
    using Error::Error;
};

/// An element was used outside the domain it belongs to.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Structure kind, morphism kind, or shape does not match the operation.
class KindError : public Error {
public:
    using Error::Error;
};

/// The operation has no action of the requested sort (object-only maps).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A constructor invariant was violated.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace graphcat

#endif
