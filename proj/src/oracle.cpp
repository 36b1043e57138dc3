#include "cateig/oracle.hpp"

#include "cateig/errors.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace cateig {

namespace {

constexpr std::size_t kMaxBruteDim = 12;

/// Columns of an F_2 matrix as bitmasks over the rows.
std::vector<std::uint32_t> column_masks(const Matrix& m) {
    std::vector<std::uint32_t> out(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) out[j] |= 1u << i;
    return out;
}

std::uint32_t apply(const std::vector<std::uint32_t>& cols, std::uint32_t v) {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (v >> j & 1u) out ^= cols[j];
    return out;
}

std::size_t log2_exact(std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); }

}  // namespace

OracleReport brute_homology_f2(const ChainComplex& x) {
    if (x.ring() != Ring::prime_field(2)) throw RingMismatch();
    if (x.total_rank() > kMaxBruteDim) {
        throw TooLarge("total rank " + std::to_string(x.total_rank()) + " exceeds " + std::to_string(kMaxBruteDim));
    }
    OracleReport rep;
    rep.method = OracleMethod::Enumeration;
    for (auto& [n, r] : x.ranks()) {
        const auto out_cols = column_masks(x.diff(n));
        const auto in_cols = column_masks(x.diff(n - 1));
        std::size_t cycles = 0;
        for (std::uint32_t v = 0; v < (1u << r); ++v)
            if (apply(out_cols, v) == 0) ++cycles;
        std::set<std::uint32_t> boundaries;
        for (std::uint32_t u = 0; u < (1u << x.rank(n - 1)); ++u) boundaries.insert(apply(in_cols, u));
        rep.ranks[n] = log2_exact(cycles) - log2_exact(boundaries.size());
    }
    return rep;
}

namespace {

/// Row-reduces [A | b] in place; returns a solution or nullopt.
std::optional<std::vector<Scalar>> gauss_solve(std::vector<std::vector<Scalar>> rows, std::size_t unknowns, Ring ring) {
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Scalar inv = rows[r][c].inverse();
        for (auto& e : rows[r]) e *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Scalar factor = rows[i][c];
            for (std::size_t k = c; k <= unknowns; ++k) {
                Scalar t = factor;
                t *= rows[r][k];
                rows[i][k] -= t;
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (!rows[i][unknowns].is_zero()) return std::nullopt;
    std::vector<Scalar> sol(unknowns, Scalar(ring, 0));
    for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = rows[i][unknowns];
    return sol;
}

}  // namespace

OracleReport homotopy_system_solvable(const ChainComplex& x, const GradedMap& f, const GradedMap& g) {
    const Ring ring = x.ring();
    if (!ring.is_field()) throw NotAField();
    if (f.shift() != 0 || g.shift() != 0) throw ShapeMismatch("homotopy system needs degree-0 maps");

    OracleReport rep;
    rep.method = OracleMethod::LinearSystem;
    if (x.is_zero()) {
        rep.solvable = true;
        rep.solution = Homotopy(x, {});
        return rep;
    }

    // Unknown Psi^n (rank(n-1) x rank(n)) for n in [lo, hi]; entry (i, j) at offset[n] + i * rank(n) + j.
    std::map<int, std::size_t> offset;
    std::size_t unknowns = 0;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        offset[n] = unknowns;
        unknowns += x.rank(n - 1) * x.rank(n);
    }
    auto var = [&](int n, std::size_t i, std::size_t j) { return offset.at(n) + i * x.rank(n) + j; };

    std::vector<std::vector<Scalar>> rows;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        const std::size_t r = x.rank(n);
        const Matrix lhs = f.block(n) - g.block(n);
        const Matrix d_in = x.diff(n - 1);   // X_{n-1} -> X_n
        const Matrix d_out = x.diff(n);      // X_n -> X_{n+1}
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                std::vector<Scalar> row(unknowns + 1, Scalar(ring, 0));
                // (d_{n-1} Psi^n)(i, j) = sum_k d_in(i, k) Psi^n(k, j)
                if (offset.count(n))
                    for (std::size_t k = 0; k < x.rank(n - 1); ++k) row[var(n, k, j)] += d_in(i, k);
                // (Psi^{n+1} d_n)(i, j) = sum_k Psi^{n+1}(i, k) d_out(k, j)
                if (offset.count(n + 1))
                    for (std::size_t k = 0; k < x.rank(n + 1); ++k) row[var(n + 1, i, k)] += d_out(k, j);
                row[unknowns] = lhs(i, j);
                rows.push_back(std::move(row));
            }
        }
    }

    auto sol = gauss_solve(std::move(rows), unknowns, ring);
    if (!sol) return rep;
    std::map<int, Matrix> blocks;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        Matrix b(ring, x.rank(n - 1), x.rank(n));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = (*sol)[var(n, i, j)];
        if (!b.empty()) blocks[n] = std::move(b);
    }
    rep.solvable = true;
    rep.solution = Homotopy(x, std::move(blocks));
    return rep;
}

OracleReport null_homotopy_solvable(const ChainComplex& x) {
    return homotopy_system_solvable(x, GradedMap::zero(x, x), GradedMap::identity(x));
}

}  // namespace cateig
