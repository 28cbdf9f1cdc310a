#pragma once

#include <stdexcept>
#include <string>

namespace mubar {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (braid words, free-group words, link files).
/// The message carries the offending token or JSON path.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A structural invariant of a diagram or link representation is violated:
/// bad arc multiplicity, orientation inconsistency, stored crossing sign
/// contradicting the declared component orientations, non-pure braid where
/// purity is required, and so on.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An exhaustive scan would exceed the configured budget of coefficient
/// extractions.  Never downgraded to a truncated result.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, unsigned long long attempted, unsigned long long budget)
        : Error(what), attempted(attempted), budget(budget) {}
    unsigned long long attempted;
    unsigned long long budget;
};

/// A size or capacity limit was hit: truncation degree not representable,
/// or an exact longitude word outgrowing the configured cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

} // namespace mubar
