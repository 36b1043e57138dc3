#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cateig {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
public:
    RingMismatch() : Error("operands live in different rings") {}
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class NotAField : public Error {
public:
    NotAField() : Error("operation requires a field (Q or F_p)") {}
};

class NotIntegerRing : public Error {
public:
    NotIntegerRing() : Error("operation requires the integers") {}
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class ConventionMismatch : public Error {
public:
    ConventionMismatch() : Error("complexes use different degree conventions") {}
};

/// A submodule of a free Z-module is not a direct summand. `factors` holds the
/// invariant factors > 1 of the inclusion; `degree` is set when the failure is
/// tied to a term of a complex.
class NotSaturated : public Error {
public:
    NotSaturated(std::vector<mpz_class> factors, std::optional<int> degree = std::nullopt);
    const std::vector<mpz_class>& factors() const { return factors_; }
    std::optional<int> degree() const { return degree_; }

private:
    std::vector<mpz_class> factors_;
    std::optional<int> degree_;
};

class TorsionHomology : public Error {
public:
    TorsionHomology(int degree, std::vector<mpz_class> factors);
    int degree() const { return degree_; }
    const std::vector<mpz_class>& factors() const { return factors_; }

private:
    int degree_;
    std::vector<mpz_class> factors_;
};

/// The hypotheses needed to build a null-homotopy of a cone do not hold.
class HypothesisFailure : public Error {
public:
    HypothesisFailure(int degree, const std::string& reason);
    int degree() const { return degree_; }

private:
    int degree_;
};

class NotScalarSource : public Error {
public:
    explicit NotScalarSource(int degree);
};

class LayoutMismatch : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class BadIndex : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace cateig
