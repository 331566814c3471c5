#pragma once

#include <stdexcept>
#include <string>

namespace descent {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Polynomial division by the zero polynomial.
class DivisionByZeroPoly : public Error {
public:
    using Error::Error;
};

/// gcd(0, 0) requested.
class BothZeroPoly : public Error {
public:
    using Error::Error;
};

/// Curve polynomial degree outside [3, 6].
class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

/// Curve polynomial is not squarefree (vanishing discriminant).
class NotSquarefree : public Error {
public:
    using Error::Error;
};

/// Reduction requested at p = 2 or a prime of bad reduction.
class BadReductionPrime : public Error {
public:
    using Error::Error;
};

/// Reduction of a rational object whose denominator is divisible by p.
class BadReductionDenominator : public Error {
public:
    using Error::Error;
};

/// Divisor arithmetic requested on a model it does not support.
class EvenModelUnsupported : public Error {
public:
    using Error::Error;
};

/// Mumford pair violating u monic, deg v < deg u or u | v^2 - f.
class InvalidMumford : public Error {
public:
    using Error::Error;
};

/// Coordinates that do not satisfy the curve equation.
class PointNotOnCurve : public Error {
public:
    using Error::Error;
};

/// p-adic class splitting passed its depth cap with classes undecided.
/// Signals an implementation bug, not a property of the input.
class DepthExceeded : public Error {
public:
    using Error::Error;
};

/// Group enumeration asked for a prime above the supported bound.
class EnumerationBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Morphism data fails the defining identity or has a malformed shape.
class InvalidMorphism : public Error {
public:
    using Error::Error;
};

/// Morphism shape outside (x, y) -> (r(x), s(x) y).
class UnsupportedMorphismShape : public Error {
public:
    using Error::Error;
};

/// A point where a morphism denominator vanishes has no assigned image.
class UnassignedExceptionalPoint : public Error {
public:
    using Error::Error;
};

/// Pullback of a Mordell-Weil set requires the full finite group, but a
/// generator of infinite order is present.
class RequiresFiniteMW : public Error {
public:
    using Error::Error;
};

/// Subgroup presentation fails verification (wrong torsion order, identity
/// listed as a generator, or a declared free generator of visible finite
/// order).
class InvalidSubgroup : public Error {
public:
    using Error::Error;
};

/// Sieve coset space larger than the configured budget.
class CosetBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Closure of the image subgroup larger than the configured budget.
class ImageBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Permutation-group closure larger than the configured budget.
class ClosureBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A sieve prime is 2 or a prime of bad reduction for curve or target.
class BadPrimeInS : public Error {
public:
    using Error::Error;
};

/// Local conditions mention a prime outside the sieve prime set.
class ConditionOutsideS : public Error {
public:
    using Error::Error;
};

/// Local conditions name points that are not on the reduced curve.
class InvalidLocalCondition : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input or a value violating the documented schema.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Census log line that cannot be parsed (other than a torn final line).
class LogCorruption : public Error {
public:
    using Error::Error;
};

/// Attaching a certificate to a record whose classification contradicts it.
class ClassificationConflict : public Error {
public:
    using Error::Error;
};

/// Attaching a certificate for a curve absent from the log.
class RecordNotFound : public Error {
public:
    using Error::Error;
};

/// Certificate whose curve differs from the record it is attached to.
class CurveMismatch : public Error {
public:
    using Error::Error;
};

} // namespace descent
