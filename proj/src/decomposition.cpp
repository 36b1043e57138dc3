#include "cateig/decomposition.hpp"

#include "cateig/errors.hpp"

#include <algorithm>

namespace cateig {

namespace {

SubspaceBasis image_of_prev(const ChainComplex& f, int n) {
    const Matrix d = f.diff(n - 1);
    if (d.cols() == 0) return empty_basis(f.ring(), f.rank(n));
    return image_basis(d);
}

/// True iff the columns of `m` have zero Im-block in adapted coordinates.
bool inside_g(const Matrix& change_of_basis, std::size_t rank_g, const Matrix& m) {
    Matrix coords = change_of_basis * m;
    return coords.block(rank_g, 0, coords.rows() - rank_g, coords.cols()).is_zero();
}

DegreeDecomposition decompose_degree(const ChainComplex& f, int n, const SubspaceBasis& im_prev,
                                     const SubspaceBasis& im_next, const Matrix* alpha_block) {
    const std::size_t dim = f.rank(n);
    const int shown = user_degree(f.convention(), n);

    DegreeDecomposition dd;
    dd.degree = n;
    dd.im_prev = im_prev;
    if (auto bad = saturation_defect(im_prev.vectors); !bad.empty()) throw NotSaturated(bad, shown);

    dd.g = complement_basis(im_prev, dim);
    dd.basis = hstack(dd.g.vectors, im_prev.vectors);
    dd.change_of_basis = inverse(dd.basis);

    if (alpha_block && alpha_block->cols() > 0 && !inside_g(dd.change_of_basis, dd.g.size(), *alpha_block)) {
        SubspaceBasis pref = image_basis(*alpha_block);
        Matrix both = hstack(pref.vectors, im_prev.vectors);
        if (rank(both) != pref.size() + im_prev.size()) {
            throw HypothesisFailure(shown, "image of alpha meets the image of the previous differential");
        }
        if (auto bad = saturation_defect(both); !bad.empty()) throw NotSaturated(bad, shown);
        SubspaceBasis rest = complement_basis({dim, both}, dim);
        dd.g = {dim, hstack(pref.vectors, rest.vectors)};
        dd.basis = hstack(dd.g.vectors, im_prev.vectors);
        dd.change_of_basis = inverse(dd.basis);
    }

    Matrix dg = f.diff(n) * dd.g.vectors;
    auto delta = solve(im_next.vectors, dg);
    if (!delta) throw Error("internal: d_n(G_n) is not spanned by the image basis");
    dd.delta = *delta;
    dd.ker_delta = kernel_basis(dd.delta);
    dd.k = complement_basis(dd.ker_delta, dd.g.size());
    return dd;
}

}  // namespace

DegreeDecomposition Decomposition::at(int n) const {
    auto it = degrees.find(n);
    if (it != degrees.end()) return it->second;
    DegreeDecomposition dd;
    dd.degree = n;
    dd.im_prev = empty_basis(ring, 0);
    dd.g = empty_basis(ring, 0);
    dd.delta = Matrix(ring, 0, 0);
    dd.ker_delta = empty_basis(ring, 0);
    dd.k = empty_basis(ring, 0);
    dd.basis = Matrix(ring, 0, 0);
    dd.change_of_basis = Matrix(ring, 0, 0);
    return dd;
}

Decomposition decompose(const ChainComplex& f, const GradedMap* alpha) {
    int lo = f.lo(), hi = f.hi();
    if (alpha && !alpha->source().is_zero()) {
        lo = std::min(lo, alpha->source().lo());
        hi = std::max(hi, alpha->source().hi());
    }
    return decompose(f, lo, hi, alpha);
}

Decomposition decompose(const ChainComplex& f, int lo, int hi, const GradedMap* alpha) {
    if (alpha && !(alpha->target() == f)) throw Error("decompose: alpha does not map into this complex");
    Decomposition out;
    out.ring = f.ring();
    if (lo > hi) return out;
    std::map<int, SubspaceBasis> im;
    for (int n = lo; n <= hi + 1; ++n) im.emplace(n, image_of_prev(f, n));
    for (int n = lo; n <= hi; ++n) {
        Matrix block;
        if (alpha) block = alpha->block(n);
        out.degrees.emplace(n, decompose_degree(f, n, im.at(n), im.at(n + 1), alpha ? &block : nullptr));
    }
    return out;
}

std::size_t HomologyResult::betti(int n) const {
    auto it = degrees.find(n);
    return it == degrees.end() ? 0 : it->second.betti;
}

bool HomologyResult::is_zero() const {
    for (auto& [n, h] : degrees)
        if (h.betti != 0 || !h.torsion.empty()) return false;
    return true;
}

bool HomologyResult::has_torsion() const {
    for (auto& [n, h] : degrees)
        if (!h.torsion.empty()) return true;
    return false;
}

std::map<int, std::size_t> HomologyResult::betti_numbers() const {
    std::map<int, std::size_t> out;
    for (auto& [n, h] : degrees) out[n] = h.betti;
    return out;
}

namespace {

/// Free-part representatives when Im d_{n-1} is not a direct summand.
SubspaceBasis free_part_representatives(const ChainComplex& f, int n) {
    SubspaceBasis cycles = kernel_basis(f.diff(n));
    Matrix prev = f.diff(n - 1);
    auto coords = solve(cycles.vectors, prev);
    if (!coords) throw Error("internal: boundaries are not cycles");
    auto snf = smith_normal_form(*coords);
    std::size_t r = 0;
    while (r < snf.invariant_factors.size() && snf.invariant_factors[r] != 0) ++r;
    Matrix basis_change = inverse(snf.U);
    const std::size_t k = cycles.size();
    return {f.rank(n), cycles.vectors * basis_change.block(0, r, k, k - r)};
}

}  // namespace

HomologyResult homology(const ChainComplex& f) {
    HomologyResult out;
    out.ring = f.ring();
    out.convention = f.convention();
    if (f.is_zero()) return out;
    std::map<int, SubspaceBasis> im;
    for (int n = f.lo(); n <= f.hi() + 1; ++n) im.emplace(n, image_of_prev(f, n));
    for (int n = f.lo(); n <= f.hi(); ++n) {
        DegreeHomology h;
        const std::size_t rk_next = rank(f.diff(n));
        const std::size_t rk_prev = im.at(n).size();
        h.betti = f.rank(n) - rk_next - rk_prev;
        if (!f.ring().is_field()) {
            const Matrix prev = f.diff(n - 1);
            if (!prev.empty()) {
                for (const auto& fac : smith_normal_form(prev).invariant_factors)
                    if (fac > 1) h.torsion.push_back(fac);
            }
        }
        if (h.torsion.empty()) {
            auto dd = decompose_degree(f, n, im.at(n), im.at(n + 1), nullptr);
            h.representatives = {f.rank(n), dd.representatives()};
        } else {
            h.representatives = free_part_representatives(f, n);
        }
        out.degrees.emplace(n, std::move(h));
    }
    return out;
}

CanonicalAlpha canonical_alpha(const ChainComplex& f) {
    HomologyResult h = homology(f);
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> blocks;
    const DegreeHomology* worst = nullptr;
    int worst_degree = 0;
    for (auto& [n, dh] : h.degrees) {
        const int shown = user_degree(f.convention(), n);
        if (!dh.torsion.empty() && (!worst || shown < worst_degree)) {
            worst = &dh;
            worst_degree = shown;
        }
    }
    if (worst) throw TorsionHomology(worst_degree, worst->torsion);
    for (auto& [n, dh] : h.degrees) {
        ranks[n] = dh.betti;
        blocks[n] = dh.representatives.vectors;
    }
    ChainComplex lambda = scalar_object(f.ring(), f.convention(), ranks);
    GradedMap alpha(lambda, f, 0, std::move(blocks));
    return {std::move(lambda), std::move(alpha)};
}

}  // namespace cateig
