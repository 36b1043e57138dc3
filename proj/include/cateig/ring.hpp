#pragma once

#include <cstdint>
#include <string>

namespace cateig {

enum class RingKind { Rationals, PrimeField, Integers };

/// Coefficient ring: Q, F_p or Z. The prime is checked on construction.
class Ring {
public:
    static Ring rationals() { return Ring(RingKind::Rationals, 0); }
    static Ring integers() { return Ring(RingKind::Integers, 0); }
    static Ring prime_field(std::uint64_t p);

    RingKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }
    bool is_field() const { return kind_ != RingKind::Integers; }

    /// "Q", "Z" or "F<p>".
    std::string name() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Ring(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    RingKind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace cateig
