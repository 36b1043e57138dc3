#include "cateig/complex.hpp"

#include "cateig/errors.hpp"

#include <algorithm>

namespace cateig {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

ChainComplex::ChainComplex(Ring ring, Convention convention, std::map<int, std::size_t> ranks,
                           std::map<int, Matrix> diffs)
    : ring_(ring), convention_(convention) {
    for (auto& [n, r] : ranks) {
        if (r == 0) continue;
        ranks_[n] = r;
        lo_ = ranks_.size() == 1 ? n : std::min(lo_, n);
        hi_ = ranks_.size() == 1 ? n : std::max(hi_, n);
    }
    for (auto& [n, d] : diffs) {
        if (!(d.ring() == ring_)) throw RingMismatch();
        if (d.rows() != rank(n + 1) || d.cols() != rank(n)) {
            throw ShapeMismatch("differential at degree " + std::to_string(user_degree(convention, n)) + " is " +
                                shape(d) + ", expected " + std::to_string(rank(n + 1)) + "x" +
                                std::to_string(rank(n)));
        }
        if (!d.empty()) diffs_[n] = std::move(d);
    }
}

std::size_t ChainComplex::rank(int n) const {
    auto it = ranks_.find(n);
    return it == ranks_.end() ? 0 : it->second;
}

Matrix ChainComplex::diff(int n) const {
    auto it = diffs_.find(n);
    if (it != diffs_.end()) return it->second;
    return Matrix(ring_, rank(n + 1), rank(n));
}

std::size_t ChainComplex::total_rank() const {
    std::size_t t = 0;
    for (auto& [n, r] : ranks_) t += r;
    return t;
}

ChainComplex ChainComplex::with_convention(Convention c) const {
    ChainComplex out = *this;
    out.convention_ = c;
    return out;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (!(a.ring_ == b.ring_) || a.convention_ != b.convention_ || a.ranks_ != b.ranks_) return false;
    for (int n = a.lo_; n <= a.hi_; ++n)
        if (!(a.diff(n) == b.diff(n))) return false;
    return true;
}

GradedMap::GradedMap(ChainComplex source, ChainComplex target, int shift, std::map<int, Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift) {
    if (!(source_.ring() == target_.ring())) throw RingMismatch();
    for (auto& [n, b] : blocks) {
        if (!(b.ring() == source_.ring())) throw RingMismatch();
        if (b.rows() != target_.rank(n + shift_) || b.cols() != source_.rank(n)) {
            throw ShapeMismatch("map block at degree " + std::to_string(user_degree(source_.convention(), n)) +
                                " is " + shape(b) + ", expected " + std::to_string(target_.rank(n + shift_)) + "x" +
                                std::to_string(source_.rank(n)));
        }
        if (!b.empty()) blocks_[n] = std::move(b);
    }
}

GradedMap GradedMap::zero(const ChainComplex& source, const ChainComplex& target, int shift) {
    return GradedMap(source, target, shift, {});
}

GradedMap GradedMap::identity(const ChainComplex& x) {
    std::map<int, Matrix> blocks;
    for (auto& [n, r] : x.ranks()) blocks[n] = Matrix::identity(x.ring(), r);
    return GradedMap(x, x, 0, std::move(blocks));
}

Matrix GradedMap::block(int n) const {
    auto it = blocks_.find(n);
    if (it != blocks_.end()) return it->second;
    return Matrix(source_.ring(), target_.rank(n + shift_), source_.rank(n));
}

namespace {

ValidationReport first_nonzero(const Matrix& m, int degree, const std::string& what) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) {
                ValidationReport rep;
                rep.ok = false;
                rep.degree = degree;
                rep.row = r;
                rep.col = c;
                rep.message = what + ": entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is " +
                              m(r, c).to_string();
                return rep;
            }
    return {};
}

}  // namespace

ValidationReport validate_complex(const ChainComplex& x) {
    if (x.is_zero()) return {};
    for (int n = x.lo() - 1; n <= x.hi(); ++n) {
        Matrix dd = x.diff(n + 1) * x.diff(n);
        auto rep = first_nonzero(dd, n, "d o d is nonzero starting at degree " +
                                            std::to_string(user_degree(x.convention(), n)));
        if (!rep) return rep;
    }
    return {};
}

ValidationReport validate_chain_map(const GradedMap& f) {
    if (f.shift() != 0) {
        ValidationReport rep;
        rep.ok = false;
        rep.message = "chain map must have degree shift 0";
        return rep;
    }
    const auto& s = f.source();
    const auto& t = f.target();
    int lo = std::min(s.lo(), t.lo()) - 1;
    int hi = std::max(s.hi(), t.hi());
    for (int n = lo; n <= hi; ++n) {
        Matrix lhs = t.diff(n) * f.block(n);
        Matrix rhs = f.block(n + 1) * s.diff(n);
        auto rep = first_nonzero(lhs - rhs, n, "chain map square fails at degree " +
                                                   std::to_string(user_degree(s.convention(), n)));
        if (!rep) return rep;
    }
    return {};
}

ChainComplex shift(const ChainComplex& x, int k) {
    std::map<int, std::size_t> ranks;
    for (auto& [n, r] : x.ranks()) ranks[n - k] = r;
    std::map<int, Matrix> diffs;
    for (auto& [n, d] : x.diffs()) diffs[n - k] = d;
    return ChainComplex(x.ring(), x.convention(), std::move(ranks), std::move(diffs));
}

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y) {
    if (!(x.ring() == y.ring())) throw RingMismatch();
    if (x.convention() != y.convention()) throw ConventionMismatch();
    std::map<int, std::size_t> ranks = x.ranks();
    for (auto& [n, r] : y.ranks()) ranks[n] += r;
    std::map<int, Matrix> diffs;
    int lo = std::min(x.lo(), y.lo()) - 1, hi = std::max(x.hi(), y.hi());
    for (int n = lo; n <= hi; ++n) {
        Matrix d = block_diag(x.diff(n), y.diff(n));
        if (!d.empty()) diffs[n] = std::move(d);
    }
    return ChainComplex(x.ring(), x.convention(), std::move(ranks), std::move(diffs));
}

ChainComplex scalar_object(Ring ring, Convention convention, const std::map<int, std::size_t>& ranks) {
    return ChainComplex(ring, convention, ranks, {});
}

bool is_scalar(const ChainComplex& x) {
    for (auto& [n, d] : x.diffs())
        if (!d.is_zero()) return false;
    return true;
}

}  // namespace cateig
