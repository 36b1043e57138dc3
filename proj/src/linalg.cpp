#include "cateig/linalg.hpp"

#include "cateig/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace cateig {

namespace {

/// Integer grid used by the Z algorithms.
struct IntGrid {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntGrid(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    explicit IntGrid(const Matrix& m) : IntGrid(m.rows(), m.cols()) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) at(i, j) = m(i, j).integer();
    }
    static IntGrid identity(std::size_t n) {
        IntGrid g(n, n);
        for (std::size_t i = 0; i < n; ++i) g.at(i, i) = 1;
        return g;
    }

    mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, j), at(i, k));
    }
    // row_i += q * row_k
    void add_row(std::size_t i, std::size_t k, const mpz_class& q) {
        for (std::size_t j = 0; j < cols; ++j)
            if (at(k, j) != 0) at(i, j) += q * at(k, j);
    }
    // col_j += q * col_k
    void add_col(std::size_t j, std::size_t k, const mpz_class& q) {
        for (std::size_t i = 0; i < rows; ++i)
            if (at(i, k) != 0) at(i, j) += q * at(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) at(i, j) = -at(i, j);
    }

    Matrix to_matrix() const {
        Matrix m(Ring::integers(), rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(Ring::integers(), at(i, j));
        return m;
    }
};

mpz_class tdiv(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void require_integers(const Matrix& a) {
    if (a.ring().kind() != RingKind::Integers) throw NotIntegerRing();
}

Matrix over_fraction_field(const Matrix& a) {
    return a.ring().is_field() ? a : a.change_ring(Ring::rationals());
}

Matrix back_to_integers(const Matrix& q) {
    Matrix out(Ring::integers(), q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) out(i, j) = Scalar(Ring::integers(), q(i, j).value());
    return out;
}

}  // namespace

SubspaceBasis empty_basis(Ring ring, std::size_t ambient_dim) {
    return SubspaceBasis{ambient_dim, Matrix(ring, ambient_dim, 0)};
}

SubspaceBasis standard_basis(Ring ring, std::size_t ambient_dim) {
    return SubspaceBasis{ambient_dim, Matrix::identity(ring, ambient_dim)};
}

RrefResult rref(const Matrix& a) {
    if (!a.ring().is_field()) throw NotAField();
    const Ring ring = a.ring();
    Matrix r = a;
    Matrix t = Matrix::identity(ring, a.rows());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && r(p, col).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
            for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(p, j), t(row, j));
        }
        const Scalar inv = r(row, col).inverse();
        for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) *= inv;
        for (std::size_t j = 0; j < t.cols(); ++j) t(row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col).is_zero()) continue;
            const Scalar f = r(i, col);
            for (std::size_t j = 0; j < r.cols(); ++j)
                if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
            for (std::size_t j = 0; j < t.cols(); ++j)
                if (!t(row, j).is_zero()) t(i, j) -= f * t(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(t), std::move(pivots)};
}

SnfResult smith_normal_form(const Matrix& input) {
    require_integers(input);
    const std::size_t m = input.rows(), n = input.cols();
    IntGrid a(input);
    IntGrid u = IntGrid::identity(m);
    IntGrid v = IntGrid::identity(n);
    const std::size_t diag = std::min(m, n);

    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // Smallest nonzero |a_ij| in the trailing block, row-major ties.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a.at(i, j) == 0) continue;
                    if (pi == m || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) break;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            const mpz_class piv = a.at(t, t);
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q = -tdiv(a.at(i, t), piv);
                a.add_row(i, t, q);
                u.add_row(i, t, q);
                if (a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q = -tdiv(a.at(t, j), piv);
                a.add_col(j, t, q);
                v.add_col(j, t, q);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a.at(i, j) != 0 && !mpz_divisible_p(a.at(i, j).get_mpz_t(), piv.get_mpz_t())) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult out;
    out.U = u.to_matrix();
    out.S = a.to_matrix();
    out.V = v.to_matrix();
    for (std::size_t t = 0; t < diag; ++t) out.invariant_factors.push_back(a.at(t, t));
    return out;
}

std::size_t rank(const Matrix& a) {
    if (a.empty()) return 0;
    return rref(over_fraction_field(a)).pivots.size();
}

Matrix hermite_rows(const Matrix& input) {
    require_integers(input);
    IntGrid a(input);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        for (;;) {
            std::size_t best = a.rows;
            for (std::size_t i = r; i < a.rows; ++i) {
                if (a.at(i, c) == 0) continue;
                if (best == a.rows || abs(a.at(i, c)) < abs(a.at(best, c))) best = i;
            }
            if (best == a.rows) break;
            a.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.rows; ++i) {
                if (a.at(i, c) == 0) continue;
                a.add_row(i, r, -tdiv(a.at(i, c), a.at(r, c)));
                if (a.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            if (a.at(i, c) == 0) continue;
            a.add_row(i, r, -fdiv(a.at(i, c), a.at(r, c)));
        }
        ++r;
    }
    return a.to_matrix().block(0, 0, r, a.cols);
}

Matrix canonical_column_basis(const Matrix& a) {
    if (a.cols() == 0) return a;
    if (a.ring().is_field()) {
        auto rr = rref(a.transpose());
        return rr.reduced.block(0, 0, rr.pivots.size(), a.rows()).transpose();
    }
    return hermite_rows(a.transpose()).transpose();
}

SubspaceBasis kernel_basis(const Matrix& a) {
    const Ring ring = a.ring();
    const std::size_t n = a.cols();
    if (ring.is_field()) {
        auto rr = rref(a);
        std::vector<bool> is_pivot(n, false);
        for (auto p : rr.pivots) is_pivot[p] = true;
        std::vector<Matrix> cols;
        for (std::size_t f = 0; f < n; ++f) {
            if (is_pivot[f]) continue;
            Matrix v(ring, n, 1);
            v(f, 0) = Scalar::one(ring);
            for (std::size_t i = 0; i < rr.pivots.size(); ++i) v(rr.pivots[i], 0) = -rr.reduced(i, f);
            cols.push_back(std::move(v));
        }
        return {n, canonical_column_basis(Matrix::from_columns(ring, n, cols))};
    }
    auto snf = smith_normal_form(a);
    std::size_t r = 0;
    while (r < snf.invariant_factors.size() && snf.invariant_factors[r] != 0) ++r;
    Matrix k = snf.V.block(0, r, n, n - r);
    return {n, canonical_column_basis(k)};
}

SubspaceBasis image_basis(const Matrix& a) {
    const Ring ring = a.ring();
    if (a.empty()) return empty_basis(ring, a.rows());
    auto rr = rref(over_fraction_field(a));
    Matrix pivot_cols = a.columns(rr.pivots);
    if (ring.is_field() || solve(pivot_cols, a)) return {a.rows(), pivot_cols};
    return {a.rows(), hermite_rows(a.transpose()).transpose()};
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve: right-hand side has wrong height");
    if (!(a.ring() == b.ring())) throw RingMismatch();
    const Ring ring = a.ring();
    const std::size_t n = a.cols(), k = b.cols();
    if (ring.is_field()) {
        auto rr = rref(hstack(a, b));
        Matrix x(ring, n, k);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            if (rr.pivots[i] >= n) return std::nullopt;
            for (std::size_t j = 0; j < k; ++j) x(rr.pivots[i], j) = rr.reduced(i, n + j);
        }
        return x;
    }
    auto snf = smith_normal_form(a);
    Matrix c = snf.U * b;
    Matrix y(ring, n, k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const mpz_class d = i < snf.invariant_factors.size() ? snf.invariant_factors[i] : mpz_class(0);
        for (std::size_t j = 0; j < k; ++j) {
            const mpz_class& cij = c(i, j).integer();
            if (d == 0) {
                if (cij != 0) return std::nullopt;
                continue;
            }
            if (!mpz_divisible_p(cij.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            y(i, j) = Scalar(ring, mpz_class(cij / d));
        }
    }
    return snf.V * y;
}

std::vector<mpz_class> saturation_defect(const Matrix& sub) {
    if (sub.ring().is_field() || sub.cols() == 0) return {};
    auto snf = smith_normal_form(sub);
    std::vector<mpz_class> bad;
    for (const auto& f : snf.invariant_factors)
        if (f > 1) bad.push_back(f);
    return bad;
}

SubspaceBasis complement_basis(const SubspaceBasis& sub, std::size_t ambient_dim) {
    const Ring ring = sub.vectors.ring();
    if (sub.vectors.rows() != ambient_dim) throw ShapeMismatch("complement: ambient dimension mismatch");
    const std::size_t k = sub.size();
    if (k == 0) return standard_basis(ring, ambient_dim);

    // Bottom-up echelon: eliminate on the transposed vectors with the
    // coordinates reversed, so each pivot is the lowest available row.
    Matrix rev(ring, k, ambient_dim);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < ambient_dim; ++r) rev(c, ambient_dim - 1 - r) = sub.vectors(r, c);
    auto rr = rref(over_fraction_field(rev));
    if (rr.pivots.size() != k) throw Error("complement: basis vectors are linearly dependent");
    std::set<std::size_t> hit;
    for (auto p : rr.pivots) hit.insert(ambient_dim - 1 - p);
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        if (hit.count(i)) continue;
        Matrix e(ring, ambient_dim, 1);
        e(i, 0) = Scalar::one(ring);
        cols.push_back(std::move(e));
    }
    Matrix candidate = Matrix::from_columns(ring, ambient_dim, cols);
    if (ring.is_field()) return {ambient_dim, candidate};

    auto snf = smith_normal_form(sub.vectors);
    std::vector<mpz_class> bad;
    for (const auto& f : snf.invariant_factors)
        if (f != 1) bad.push_back(f);
    if (!bad.empty()) throw NotSaturated(bad);
    auto det = determinant(hstack(sub.vectors, candidate));
    if (det.is_unit()) return {ambient_dim, candidate};
    Matrix uinv = inverse(snf.U);
    return {ambient_dim, uinv.block(0, k, ambient_dim, ambient_dim - k)};
}

Scalar determinant(const Matrix& input) {
    if (input.rows() != input.cols()) throw ShapeMismatch("determinant of a non-square matrix");
    const Ring ring = input.ring();
    Matrix a = over_fraction_field(input);
    const Ring fr = a.ring();
    Scalar det = Scalar::one(fr);
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Scalar::zero(ring);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        const Scalar inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return ring.is_field() ? det : Scalar(ring, det.value());
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw NotInvertible("non-square matrix has no two-sided inverse");
    if (a.ring().is_field()) {
        auto rr = rref(a);
        if (rr.pivots.size() != a.rows()) throw NotInvertible("singular matrix");
        return rr.transform;
    }
    if (!determinant(a).is_unit()) throw NotInvertible("integer matrix is not unimodular");
    Matrix q = over_fraction_field(a);
    return back_to_integers(rref(q).transform);
}

bool contained_in(const Matrix& sub, const Matrix& span) {
    if (sub.cols() == 0) return true;
    return solve(span, sub).has_value();
}

}  // namespace cateig
