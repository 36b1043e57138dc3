#include "cateig/cone.hpp"

#include "cateig/errors.hpp"

#include <algorithm>

namespace cateig {

namespace {

std::pair<int, int> cone_window(const ChainComplex& lambda, const ChainComplex& f) {
    int lo = f.lo(), hi = f.hi();
    if (!lambda.is_zero()) {
        if (f.is_zero()) {
            lo = lambda.lo() - 1;
            hi = lambda.hi() - 1;
        } else {
            lo = std::min(lo, lambda.lo() - 1);
            hi = std::max(hi, lambda.hi() - 1);
        }
    }
    return {lo, hi};
}

void require_scalar_chain_map(const GradedMap& alpha) {
    for (auto& [n, d] : alpha.source().diffs())
        if (!d.is_zero()) throw NotScalarSource(user_degree(alpha.source().convention(), n));
    if (auto rep = validate_chain_map(alpha); !rep) throw ValidationError("alpha is not a chain map: " + rep.message);
}

}  // namespace

BlockLayout ConeComplex::layout_at(int n) const {
    auto it = layout.find(n);
    return it == layout.end() ? BlockLayout{} : it->second;
}

Matrix ConeComplex::basis_at(int n) const {
    auto it = basis.find(n);
    return it == basis.end() ? Matrix(underlying.ring(), 0, 0) : it->second;
}

ChainComplex standard_cone(const GradedMap& alpha) {
    const ChainComplex& lambda = alpha.source();
    const ChainComplex& f = alpha.target();
    const Ring ring = f.ring();
    auto [lo, hi] = cone_window(lambda, f);
    std::map<int, std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) ranks[n] = lambda.rank(n + 1) + f.rank(n);
    std::map<int, Matrix> diffs;
    for (int n = lo - 1; n <= hi; ++n) {
        Matrix d(ring, lambda.rank(n + 2) + f.rank(n + 1), lambda.rank(n + 1) + f.rank(n));
        d.set_block(lambda.rank(n + 2), 0, alpha.block(n + 1));
        d.set_block(lambda.rank(n + 2), lambda.rank(n + 1), f.diff(n));
        diffs[n] = std::move(d);
    }
    return ChainComplex(ring, f.convention(), std::move(ranks), std::move(diffs));
}

ConeComplex mapping_cone(const GradedMap& alpha) {
    require_scalar_chain_map(alpha);
    return mapping_cone(alpha, decompose(alpha.target(), &alpha));
}

ConeComplex mapping_cone(const GradedMap& alpha, const Decomposition& dec) {
    require_scalar_chain_map(alpha);
    const ChainComplex& lambda = alpha.source();
    const ChainComplex& f = alpha.target();
    const Ring ring = f.ring();
    auto [lo, hi] = cone_window(lambda, f);

    ConeComplex cone;
    std::map<int, std::size_t> ranks;
    for (int n = lo - 1; n <= hi + 1; ++n) {
        const auto dd = dec.at(n);
        if (dd.rank_g() + dd.rank_im() != f.rank(n)) {
            throw LayoutMismatch("decomposition does not cover F at degree " +
                                 std::to_string(user_degree(f.convention(), n)));
        }
        BlockLayout l{lambda.rank(n + 1), dd.rank_g(), dd.rank_im()};
        if (n >= lo && n <= hi) {
            cone.layout[n] = l;
            ranks[n] = l.total();
            Matrix q = Matrix::identity(ring, l.lambda);
            cone.basis[n] = block_diag(q, dd.basis);
        }
    }

    std::map<int, Matrix> diffs;
    for (int n = lo - 1; n <= hi; ++n) {
        const BlockLayout src = cone.layout_at(n), dst = cone.layout_at(n + 1);
        Matrix d(ring, dst.total(), src.total());
        const auto next = dec.at(n + 1);
        const Matrix a = alpha.block(n + 1);
        if (a.rows() > 0 && a.cols() > 0) {
            Matrix coords = next.change_of_basis * a;
            if (!coords.block(next.rank_g(), 0, next.rank_im(), a.cols()).is_zero()) {
                throw HypothesisFailure(user_degree(f.convention(), n + 1), "image of alpha is not inside G");
            }
            d.set_block(dst.g_offset(), 0, coords.block(0, 0, next.rank_g(), a.cols()));
        }
        const auto here = dec.at(n);
        if (here.delta.rows() > 0 && here.delta.cols() > 0) d.set_block(dst.im_offset(), src.g_offset(), here.delta);
        if (!d.empty()) diffs[n] = std::move(d);
    }
    cone.underlying = ChainComplex(ring, f.convention(), std::move(ranks), std::move(diffs));
    return cone;
}

Homotopy::Homotopy(ChainComplex source, ChainComplex target, std::map<int, Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.ring() == target_.ring())) throw RingMismatch();
    for (auto& [n, b] : blocks) {
        if (!(b.ring() == source_.ring())) throw RingMismatch();
        if (b.rows() != target_.rank(n - 1) || b.cols() != source_.rank(n)) {
            throw ShapeMismatch("homotopy block at degree " + std::to_string(user_degree(source_.convention(), n)) +
                                " is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", expected " +
                                std::to_string(target_.rank(n - 1)) + "x" + std::to_string(source_.rank(n)));
        }
        if (!b.empty()) blocks_[n] = std::move(b);
    }
}

Matrix Homotopy::block(int n) const {
    auto it = blocks_.find(n);
    if (it != blocks_.end()) return it->second;
    return Matrix(source_.ring(), target_.rank(n - 1), source_.rank(n));
}

Homotopy construct_null_homotopy(const ConeComplex& cone, const Decomposition& dec) {
    const ChainComplex& z = cone.underlying;
    const Ring ring = z.ring();
    std::map<int, Matrix> blocks;
    if (z.is_zero()) return Homotopy(z, {});
    for (int n = z.lo(); n <= z.hi(); ++n) {
        const BlockLayout here = cone.layout_at(n), below = cone.layout_at(n - 1);
        const int shown = user_degree(z.convention(), n);
        const auto dn = dec.at(n), dprev = dec.at(n - 1);
        if (dn.rank_g() != here.g || dn.rank_im() != here.im || dprev.rank_g() != below.g) {
            throw LayoutMismatch("decomposition and cone layout disagree at degree " + std::to_string(shown));
        }
        Matrix phi(ring, below.total(), here.total());

        // phi1 : G_n -> lambda_n, -alpha_n^{-1} on ker delta_n and 0 on K_n.
        const std::size_t lam = below.lambda;  // rank of lambda_n
        const std::size_t kdim = dn.ker_delta.size();
        if (lam != kdim) {
            throw HypothesisFailure(shown, "rank of lambda (" + std::to_string(lam) + ") differs from rank of ker delta (" +
                                               std::to_string(kdim) + ")");
        }
        if (lam > 0) {
            Matrix alpha_g = z.diff(n - 1).block(here.g_offset(), 0, here.g, lam);
            auto in_kernel = solve(dn.ker_delta.vectors, alpha_g);
            if (!in_kernel) throw HypothesisFailure(shown, "image of alpha is not inside ker delta");
            Matrix a_inv;
            try {
                a_inv = inverse(*in_kernel);
            } catch (const NotInvertible&) {
                throw HypothesisFailure(shown, "alpha is not an isomorphism onto ker delta");
            }
            Matrix split = inverse(hstack(dn.k.vectors, dn.ker_delta.vectors));
            Matrix ker_coords = split.block(dn.k.size(), 0, kdim, here.g);
            phi.set_block(0, here.g_offset(), -(a_inv * ker_coords));
        }

        // phi2 : Im d_{n-1} -> G_{n-1}, -(delta_{n-1}|K_{n-1})^{-1}.
        if (here.im > 0) {
            Matrix on_k = dprev.delta * dprev.k.vectors;
            Matrix inv;
            try {
                inv = inverse(on_k);
            } catch (const NotInvertible&) {
                throw HypothesisFailure(shown, "delta restricted to K is not invertible");
            }
            phi.set_block(below.g_offset(), here.im_offset(), -(dprev.k.vectors * inv));
        }
        if (!phi.empty()) blocks[n] = std::move(phi);
    }
    return Homotopy(z, std::move(blocks));
}

HomotopyReport verify_homotopy(const GradedMap& f, const GradedMap& g, const Homotopy& psi) {
    HomotopyReport rep;
    const ChainComplex& x = psi.source();
    const ChainComplex& y = psi.target();
    if (f.shift() != 0 || g.shift() != 0) {
        rep.ok = false;
        rep.message = "f and g must be chain maps of degree 0";
        return rep;
    }
    if (!(f.source() == x) || !(g.source() == x) || !(f.target() == y) || !(g.target() == y)) {
        rep.ok = false;
        rep.message = "f, g and the homotopy do not share source and target";
        return rep;
    }
    if (x.is_zero() && y.is_zero()) return rep;
    int lo = x.is_zero() ? y.lo() : (y.is_zero() ? x.lo() : std::min(x.lo(), y.lo()));
    int hi = x.is_zero() ? y.hi() : (y.is_zero() ? x.hi() : std::max(x.hi(), y.hi()));
    for (int i = lo; i <= hi; ++i) {
        Matrix expected = f.block(i) - g.block(i);
        Matrix actual = y.diff(i - 1) * psi.block(i) + psi.block(i + 1) * x.diff(i);
        for (std::size_t r = 0; r < expected.rows(); ++r)
            for (std::size_t c = 0; c < expected.cols(); ++c) {
                if (expected(r, c) == actual(r, c)) continue;
                rep.ok = false;
                rep.degree = i;
                rep.row = r;
                rep.col = c;
                rep.expected = expected(r, c);
                rep.actual = actual(r, c);
                rep.message = "homotopy identity fails at degree " + std::to_string(user_degree(x.convention(), i)) +
                              ", entry (" + std::to_string(r) + ", " + std::to_string(c) + "): expected " +
                              expected(r, c).to_string() + ", got " + actual(r, c).to_string();
                return rep;
            }
    }
    return rep;
}

HomotopyReport verify_homotopy(const ChainComplex& x, const GradedMap& f, const GradedMap& g, const Homotopy& psi) {
    if (!(psi.source() == x) || !(psi.target() == x)) {
        HomotopyReport rep;
        rep.ok = false;
        rep.message = "homotopy is not defined on the given complex";
        return rep;
    }
    return verify_homotopy(f, g, psi);
}

HomotopyReport verify_null_homotopy(const ChainComplex& x, const Homotopy& psi) {
    return verify_homotopy(x, GradedMap::zero(x, x), GradedMap::identity(x), psi);
}

ContractibilityResult is_contractible(const ChainComplex& x) {
    ContractibilityResult out;
    out.homology = homology(x);
    if (!out.homology.is_zero()) return out;
    out.contractible = true;
    ChainComplex nothing = scalar_object(x.ring(), x.convention(), {});
    GradedMap zero = GradedMap::zero(nothing, x);
    Decomposition dec = decompose(x);
    ConeComplex cone = mapping_cone(zero, dec);
    Homotopy layout = construct_null_homotopy(cone, dec);
    out.witness = from_layout_coordinates(cone, layout, x);
    return out;
}

Homotopy to_layout_coordinates(const ConeComplex& cone, const Homotopy& standard) {
    std::map<int, Matrix> blocks;
    const ChainComplex& z = cone.underlying;
    if (z.is_zero()) return Homotopy(z, {});
    for (int n = z.lo(); n <= z.hi(); ++n) {
        Matrix b = inverse(cone.basis_at(n - 1)) * standard.block(n) * cone.basis_at(n);
        if (!b.empty()) blocks[n] = std::move(b);
    }
    return Homotopy(z, std::move(blocks));
}

Homotopy from_layout_coordinates(const ConeComplex& cone, const Homotopy& layout, const ChainComplex& standard) {
    std::map<int, Matrix> blocks;
    const ChainComplex& z = cone.underlying;
    if (z.is_zero()) return Homotopy(standard, {});
    for (int n = z.lo(); n <= z.hi(); ++n) {
        Matrix b = cone.basis_at(n - 1) * layout.block(n) * inverse(cone.basis_at(n));
        if (!b.empty()) blocks[n] = std::move(b);
    }
    return Homotopy(standard, std::move(blocks));
}

}  // namespace cateig
