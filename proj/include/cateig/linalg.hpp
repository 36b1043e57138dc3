#pragma once

#include "cateig/matrix.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace cateig {

struct RrefResult {
    Matrix reduced;                    ///< R, in reduced row-echelon form
    Matrix transform;                  ///< T, invertible with T * A = R
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row of R
};

/// Gauss-Jordan elimination over a field. Throws NotAField for Z input.
RrefResult rref(const Matrix& a);

/// U * A * V = S with U, V unimodular and S = diag(d_1, ..., d_k, 0, ...),
/// d_1 | d_2 | ... , all d_i >= 0.
struct SnfResult {
    Matrix U;
    Matrix S;
    Matrix V;
    /// Diagonal of S, min(rows, cols) entries: nonzero factors first, then zeros.
    std::vector<mpz_class> invariant_factors;
};

/// Smith normal form over Z. Pivots on the nonzero entry of smallest absolute
/// value (first in row-major order on ties). Throws NotIntegerRing otherwise.
SnfResult smith_normal_form(const Matrix& a);

/// A free submodule of R^ambient_dim given by the columns of `vectors`.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    Matrix vectors;

    std::size_t size() const { return vectors.cols(); }
    bool empty() const { return vectors.cols() == 0; }
};

SubspaceBasis empty_basis(Ring ring, std::size_t ambient_dim);
SubspaceBasis standard_basis(Ring ring, std::size_t ambient_dim);

/// Rank over the fraction field (Q for Z input).
std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0}. Over Z the columns generate the kernel lattice.
/// The basis is canonical: reduced echelon form (fields) or Hermite normal
/// form (Z) of the basis vectors taken as rows.
SubspaceBasis kernel_basis(const Matrix& a);

/// Basis of the column space. Uses the pivot columns of A when they generate
/// the image (always over a field); otherwise over Z the Hermite basis.
SubspaceBasis image_basis(const Matrix& a);

/// Some X with A X = B, or nullopt. Over Z the solution must be integral.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Direct complement of `sub` in R^ambient_dim.
///
/// Standard basis vectors at the positions not hit by the bottom-up column
/// echelon form of `sub`. Over Z, falls back to the Smith transform when those
/// vectors do not complete `sub` to a unimodular basis. Throws NotSaturated
/// when the quotient has torsion.
SubspaceBasis complement_basis(const SubspaceBasis& sub, std::size_t ambient_dim);

/// Invariant factors > 1 of the inclusion of `sub`; empty iff sub is a direct
/// summand (always empty over a field for independent columns).
std::vector<mpz_class> saturation_defect(const Matrix& sub);

/// Row Hermite normal form over Z, zero rows dropped.
Matrix hermite_rows(const Matrix& a);

/// Canonical basis of the span of the columns (RREF / Hermite of the transpose).
Matrix canonical_column_basis(const Matrix& a);

Scalar determinant(const Matrix& a);

/// Two-sided inverse; throws NotInvertible (e.g. non-unimodular over Z).
Matrix inverse(const Matrix& a);

/// True iff every column of `sub` lies in the span (lattice over Z) of `span`.
bool contained_in(const Matrix& sub, const Matrix& span);

}  // namespace cateig
