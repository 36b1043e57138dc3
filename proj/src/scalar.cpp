#include "cateig/scalar.hpp"

#include "cateig/errors.hpp"

#include <cctype>

namespace cateig {

Scalar::Scalar(Ring ring, long value) : ring_(ring), value_(value) { reduce(); }

Scalar::Scalar(Ring ring, const mpz_class& value) : ring_(ring), value_(value) { reduce(); }

Scalar::Scalar(Ring ring, const mpq_class& value) : ring_(ring), value_(value) {
    value_.canonicalize();
    if (ring_.kind() == RingKind::Integers && value_.get_den() != 1) {
        throw NotInvertible("value " + value_.get_str() + " is not an integer");
    }
    if (ring_.kind() == RingKind::PrimeField && value_.get_den() != 1) {
        // a/b in F_p means a * b^{-1}
        mpz_class p(static_cast<unsigned long>(ring_.characteristic()));
        mpz_class den = value_.get_den();
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
            throw NotInvertible("denominator " + den.get_str() + " vanishes in " + ring_.name());
        }
        value_ = mpq_class(mpz_class(value_.get_num() * inv));
    }
    reduce();
}

void Scalar::reduce() {
    if (ring_.kind() == RingKind::PrimeField) {
        mpz_class p(static_cast<unsigned long>(ring_.characteristic()));
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
        value_ = mpq_class(r);
    }
}

void Scalar::check_ring(const Scalar& other) const {
    if (!(ring_ == other.ring_)) throw RingMismatch();
}

Scalar Scalar::parse(Ring ring, std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    auto to_mpz = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return mpz_class(t, 10);
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("malformed scalar \"" + s + "\"");
        return Scalar(ring, to_mpz(s));
    }
    if (ring.kind() != RingKind::Rationals) {
        throw ParseError("fraction \"" + s + "\" is not an element of " + ring.name());
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed scalar \"" + s + "\"");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError("zero denominator in \"" + s + "\"");
    return Scalar(ring, mpq_class(to_mpz(num), d));
}

bool Scalar::is_unit() const {
    if (ring_.is_field()) return !is_zero();
    return value_ == 1 || value_ == -1;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw NotInvertible("zero has no inverse");
    Scalar out = *this;
    switch (ring_.kind()) {
        case RingKind::Rationals:
            out.value_ = 1 / value_;
            break;
        case RingKind::Integers:
            if (!is_unit()) throw NotInvertible(value_.get_str() + " is not a unit in Z");
            break;
        case RingKind::PrimeField: {
            mpz_class p(static_cast<unsigned long>(ring_.characteristic()));
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
            out.value_ = mpq_class(inv);
            break;
        }
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_ring(rhs);
    value_ += rhs.value_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_ring(rhs);
    value_ -= rhs.value_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_ring(rhs);
    value_ *= rhs.value_;
    reduce();
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.value_ = -value_;
    out.reduce();
    return out;
}

std::string Scalar::to_string() const { return value_.get_str(); }

}  // namespace cateig
