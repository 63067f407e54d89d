#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgs {

/// Base class for every error raised by the engine.
class QuiverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vertex id or label that does not exist in the target quiver.
class UnknownVertexError : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// Mutation requested at a frozen vertex.
class MutationAtFrozenError : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// Color query on a frozen vertex.
class FrozenQueryError : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// Framing or coframing applied to a quiver that already has frozen vertices.
class AlreadyIcedError : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// Parameter outside the documented range of a constructor or search bound.
class BadParameterError : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// Malformed or invalid input document (JSON quiver or sequence text).
class DocumentError : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// An arrow multiplicity left the representable range during mutation.
/// Multiplicities can grow doubly exponentially on wild quivers, so the
/// engine refuses to continue rather than wrap around silently.
class MultiplicityOverflowError : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// A sequence step whose target vertex is not green (raised only when the
/// caller asked for green-only application).
class NotGreenAtError : public QuiverError {
public:
    NotGreenAtError(std::size_t step, const std::string& what)
        : QuiverError(what), step(step) {}
    std::size_t step;
};

/// A sequence step whose label does not resolve to a mutable vertex.
class UnknownLabelError : public QuiverError {
public:
    UnknownLabelError(std::size_t step, const std::string& what)
        : QuiverError(what), step(step) {}
    std::size_t step;
};

} // namespace mgs
