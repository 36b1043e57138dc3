#include "cateig/ring.hpp"

#include "cateig/errors.hpp"

namespace cateig {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw Error("F_p requires a prime, got " + std::to_string(p));
    return Ring(RingKind::PrimeField, p);
}

std::string Ring::name() const {
    switch (kind_) {
        case RingKind::Rationals: return "Q";
        case RingKind::Integers: return "Z";
        case RingKind::PrimeField: return "F" + std::to_string(p_);
    }
    return "?";
}

NotSaturated::NotSaturated(std::vector<mpz_class> factors, std::optional<int> degree)
    : Error([&] {
          std::string msg = "submodule is not saturated (invariant factors";
          for (const auto& f : factors) msg += " " + f.get_str();
          msg += ")";
          if (degree) msg += " at degree " + std::to_string(*degree);
          return msg;
      }()),
      factors_(std::move(factors)),
      degree_(degree) {}

TorsionHomology::TorsionHomology(int degree, std::vector<mpz_class> factors)
    : Error([&] {
          std::string msg = "homology has torsion at degree " + std::to_string(degree) + " (factors";
          for (const auto& f : factors) msg += " " + f.get_str();
          return msg + ")";
      }()),
      degree_(degree),
      factors_(std::move(factors)) {}

HypothesisFailure::HypothesisFailure(int degree, const std::string& reason)
    : Error("hypothesis fails at degree " + std::to_string(degree) + ": " + reason), degree_(degree) {}

NotScalarSource::NotScalarSource(int degree)
    : Error("source of the eigenmap has a nonzero differential at degree " + std::to_string(degree)) {}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                 : what),
      line_(line),
      column_(column) {}

}  // namespace cateig
