#pragma once

#include "cateig/ring.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cateig {

/// Exact element of Q, F_p or Z.
///
/// The value is held as a GMP rational in canonical form: for Z the
/// denominator is 1, for F_p the numerator is the residue in [0, p).
class Scalar {
public:
    Scalar() : ring_(Ring::integers()) {}
    Scalar(Ring ring, long value);
    Scalar(Ring ring, const mpz_class& value);
    /// Throws NotInvertible if `value` is not in `ring` (a proper fraction in Z).
    Scalar(Ring ring, const mpq_class& value);

    static Scalar zero(Ring ring) { return Scalar(ring, 0L); }
    static Scalar one(Ring ring) { return Scalar(ring, 1L); }

    /// Parses the text rendering: "p/q" or "p" for Q, decimal for Z and F_p.
    static Scalar parse(Ring ring, std::string_view text);

    const Ring& ring() const { return ring_; }
    const mpq_class& value() const { return value_; }
    /// Numerator; for Z and F_p this is the element itself.
    const mpz_class& integer() const { return value_.get_num(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_unit() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    /// Field division; over Z only exact division by a unit.
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

    std::string to_string() const;

private:
    void reduce();
    void check_ring(const Scalar& other) const;

    Ring ring_;
    mpq_class value_;
};

}  // namespace cateig
