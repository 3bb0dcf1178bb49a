#pragma once

#include <stdexcept>
#include <string>

namespace wmix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Party count, local dimension or vector length does not fit the requested shape.
class ShapeError : public Error {
public:
	using Error::Error;
};

/// Input that cannot define a state (zero vector, empty ensemble).
class DegenerateInputError : public Error {
public:
	using Error::Error;
};

/// Weights or amplitudes that miss unit norm by more than the renormalization threshold.
class NormalizationError : public Error {
public:
	using Error::Error;
};

/// Matrix that is not Hermitian / PSD where a state is required.
class InvalidStateError : public Error {
public:
	using Error::Error;
};

/// Party index out of range, duplicate or empty selections.
class IndexError : public Error {
public:
	using Error::Error;
};

/// Request exceeds a configured size budget (dense dimension, cut enumeration).
class CapacityError : public Error {
public:
	using Error::Error;
};

/// A caller-side precondition that is not a malformed input (e.g. diagnosing a non-equality report).
class PreconditionError : public Error {
public:
	using Error::Error;
};

/// An internal consistency check failed. Raised loudly; never expected on valid input.
class ContractViolation : public Error {
public:
	using Error::Error;
};

} // namespace wmix
