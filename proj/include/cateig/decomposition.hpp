#pragma once

#include "cateig/complex.hpp"
#include "cateig/linalg.hpp"

#include <map>
#include <vector>

namespace cateig {

/// Splitting of one term F_n = G_n (+) Im d_{n-1}, G_n = K_n (+) ker delta_n,
/// where delta_n is d_n restricted to G_n.
struct DegreeDecomposition {
    int degree = 0;
    SubspaceBasis im_prev;    ///< Im d_{n-1}, coordinates of F_n
    SubspaceBasis g;          ///< G_n, coordinates of F_n
    Matrix delta;             ///< delta_n : G_n -> Im d_n, in the g / next im_prev bases
    SubspaceBasis ker_delta;  ///< ker delta_n, coordinates of G_n
    SubspaceBasis k;          ///< K_n, coordinates of G_n
    Matrix basis;             ///< [g | im_prev]: adapted coordinates -> standard
    Matrix change_of_basis;   ///< inverse of `basis`: standard -> [G | Im] coordinates

    std::size_t rank_g() const { return g.size(); }
    std::size_t rank_im() const { return im_prev.size(); }
    /// Columns of ker delta_n expressed in F_n.
    Matrix representatives() const { return g.vectors * ker_delta.vectors; }
};

struct Decomposition {
    Ring ring = Ring::integers();
    std::map<int, DegreeDecomposition> degrees;  ///< keyed by internal degree

    /// Decomposition at degree n; the zero module outside the computed window.
    DegreeDecomposition at(int n) const;
};

/// Splits every term of F over the window [lo, hi] (defaults to F's support).
///
/// With `alpha` (a chain map lambda -> F), G_n is chosen to contain Im alpha_n
/// when the default complement does not. Throws NotSaturated (Z, torsion in
/// F_n / Im d_{n-1}) or HypothesisFailure (Im alpha_n meets Im d_{n-1}).
Decomposition decompose(const ChainComplex& f, const GradedMap* alpha = nullptr);
Decomposition decompose(const ChainComplex& f, int lo, int hi, const GradedMap* alpha = nullptr);

struct DegreeHomology {
    std::size_t betti = 0;
    std::vector<mpz_class> torsion;   ///< invariant factors > 1 (Z only)
    SubspaceBasis representatives;    ///< cycles whose classes generate the free part
};

struct HomologyResult {
    Ring ring = Ring::integers();
    Convention convention = Convention::Cochain;
    std::map<int, DegreeHomology> degrees;  ///< internal degree -> data

    std::size_t betti(int n) const;
    bool is_zero() const;
    bool has_torsion() const;
    std::map<int, std::size_t> betti_numbers() const;
};

HomologyResult homology(const ChainComplex& f);

/// lambda_n = H^n(F) as a scalar object and the eigenmap sending its standard
/// basis to the representative cycles. Throws TorsionHomology over Z.
struct CanonicalAlpha {
    ChainComplex lambda;
    GradedMap alpha;
};
CanonicalAlpha canonical_alpha(const ChainComplex& f);

}  // namespace cateig
