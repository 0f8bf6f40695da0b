#pragma once

#include <stdexcept>
#include <string>

namespace isoforge {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A structured record is missing a required field or has the wrong shape.
class MalformedInput : public Error {
public:
    using Error::Error;
};

// Odd number of unescaped '$' delimiters in a text.
class UnbalancedDelimiters : public Error {
public:
    using Error::Error;
};

// Question+solution contain no math expression at all.
class NoExpression : public Error {
public:
    using Error::Error;
};

// Slot assignment length does not match the template's sub-slot count.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

// A value cannot be rendered in a sub-slot's source form (wrong scale,
// non-integral value in an integer slot, sign that would corrupt the
// surrounding expression, ...).
class UnrenderableValue : public Error {
public:
    using Error::Error;
};

// Value vectors cannot be aligned position-by-position.
class PositionMismatch : public Error {
public:
    using Error::Error;
};

// A candidate problem cannot be aligned to the source template at all.
class TemplateMismatch : public Error {
public:
    using Error::Error;
};

// Expression evaluation faults (division by zero, unbound variable, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public EvalError {
public:
    using EvalError::EvalError;
};

class NonIntegralMod : public EvalError {
public:
    using EvalError::EvalError;
};

class UnboundVariable : public EvalError {
public:
    using EvalError::EvalError;
};

// A verifier-spec binding cannot be resolved.
class UnboundName : public Error {
public:
    using Error::Error;
};

// Dataset or document does not match its schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Strategy input missing (e.g. BIT without a template).
class MissingInput : public Error {
public:
    using Error::Error;
};

// No usable payload in a provider response.
class UnparseableResponse : public Error {
public:
    using Error::Error;
};

// Transport-level or provider-side failure.
class ProviderError : public Error {
public:
    using Error::Error;
};

// CBIT could not obtain a valid blueprint within the retry limit.
class RetryExhausted : public Error {
public:
    using Error::Error;
};

// Metric preconditions (empty input, mixed K, zero successes).
class MetricError : public Error {
public:
    using Error::Error;
};

}  // namespace isoforge
