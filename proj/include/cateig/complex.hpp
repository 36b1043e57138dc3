#pragma once

#include "cateig/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace cateig {

/// Degree convention as seen by the user. Internally every complex is a
/// cochain complex (d_n : X_n -> X_{n+1}); chain-convention data is stored
/// with negated degrees, so chain degree k is internal degree -k.
enum class Convention { Cochain, Chain };

inline int internal_degree(Convention c, int user_degree) { return c == Convention::Chain ? -user_degree : user_degree; }
inline int user_degree(Convention c, int internal) { return c == Convention::Chain ? -internal : internal; }

/// Bounded complex of finitely generated free modules.
///
/// Ranks and differentials are keyed by internal (cochain) degree. Degrees
/// without an entry have rank 0; a missing differential is the zero map.
class ChainComplex {
public:
    ChainComplex() : ring_(Ring::integers()) {}
    /// Throws ShapeMismatch if a differential does not fit the adjacent ranks.
    ChainComplex(Ring ring, Convention convention, std::map<int, std::size_t> ranks,
                 std::map<int, Matrix> diffs = {});

    const Ring& ring() const { return ring_; }
    Convention convention() const { return convention_; }

    std::size_t rank(int n) const;
    /// d_n : X_n -> X_{n+1}, a rank(n+1) x rank(n) matrix.
    Matrix diff(int n) const;

    /// Smallest / largest degree with nonzero rank; lo() > hi() for the zero complex.
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool is_zero() const { return lo_ > hi_; }
    std::size_t total_rank() const;

    const std::map<int, std::size_t>& ranks() const { return ranks_; }
    /// Stored (nonzero-shaped) differentials.
    const std::map<int, Matrix>& diffs() const { return diffs_; }

    /// Same data, relabelled for output in the other convention.
    ChainComplex with_convention(Convention c) const;

    friend bool operator==(const ChainComplex&, const ChainComplex&);

private:
    Ring ring_;
    Convention convention_;
    std::map<int, std::size_t> ranks_;
    std::map<int, Matrix> diffs_;
    int lo_ = 0, hi_ = -1;
};

/// Degree-homogeneous family f_n : source_n -> target_{n + shift}.
class GradedMap {
public:
    GradedMap() = default;
    /// Throws ShapeMismatch / RingMismatch on inconsistent blocks.
    GradedMap(ChainComplex source, ChainComplex target, int shift, std::map<int, Matrix> blocks);

    static GradedMap zero(const ChainComplex& source, const ChainComplex& target, int shift = 0);
    static GradedMap identity(const ChainComplex& x);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    int shift() const { return shift_; }
    /// Block at source degree n; zero of the right shape when absent.
    Matrix block(int n) const;
    const std::map<int, Matrix>& blocks() const { return blocks_; }

private:
    ChainComplex source_;
    ChainComplex target_;
    int shift_ = 0;
    std::map<int, Matrix> blocks_;
};

struct ValidationReport {
    bool ok = true;
    int degree = 0;          ///< internal degree of the first violation
    std::size_t row = 0;     ///< offending entry of the composite
    std::size_t col = 0;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Checks d_{n+1} * d_n = 0 everywhere; reports the first nonzero entry.
ValidationReport validate_complex(const ChainComplex& x);

/// Checks d^target_n * f_n = f_{n+1} * d^source_n for a shift-0 map.
ValidationReport validate_chain_map(const GradedMap& f);

/// X[k]_n = X_{n+k}; differentials are carried over unchanged (no sign).
ChainComplex shift(const ChainComplex& x, int k);

/// Degreewise direct sum with block-diagonal differentials.
ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y);

/// Complex with the given ranks (internal degrees) and all differentials zero.
ChainComplex scalar_object(Ring ring, Convention convention, const std::map<int, std::size_t>& ranks);

/// True iff every differential is zero.
bool is_scalar(const ChainComplex& x);

}  // namespace cateig
