#pragma once

#include <stdexcept>
#include <string>

namespace lmc {

/// Base of every error raised by the engine. Each subclass names one
/// failure category; the message carries the specifics.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error { using Error::Error; };
class IncompatibleRing : public Error { using Error::Error; };
class NonInvertible : public Error { using Error::Error; };
class InvalidModulus : public Error { using Error::Error; };
class StructuralError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class SpecError : public Error { using Error::Error; };
class InvalidK : public Error { using Error::Error; };
class HypothesisViolation : public Error { using Error::Error; };

} // namespace lmc
