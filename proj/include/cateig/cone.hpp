#pragma once

#include "cateig/complex.hpp"
#include "cateig/decomposition.hpp"

#include <map>
#include <optional>
#include <string>

namespace cateig {

/// Sizes of the three summands lambda_{n+1} (+) G_n (+) Im d_{n-1} of Z_n.
struct BlockLayout {
    std::size_t lambda = 0;
    std::size_t g = 0;
    std::size_t im = 0;

    std::size_t total() const { return lambda + g + im; }
    std::size_t g_offset() const { return lambda; }
    std::size_t im_offset() const { return lambda + g; }
    friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

/// Cone(alpha) = lambda[1] (+) F written in the adapted coordinates
/// [lambda_{n+1} | G_n | Im d_{n-1}], where d^Z_n is
///
///     [ 0          0        0 ]
///     [ alpha_{n+1} 0       0 ]
///     [ 0          delta_n  0 ]
///
/// No sign is introduced on the shifted summand.
struct ConeComplex {
    ChainComplex underlying;
    std::map<int, BlockLayout> layout;  ///< internal degree -> block sizes
    /// Columns: adapted basis of Z_n in the standard coordinates of lambda_{n+1} (+) F_n.
    std::map<int, Matrix> basis;

    BlockLayout layout_at(int n) const;
    Matrix basis_at(int n) const;
};

/// The same cone in the standard coordinates of lambda_{n+1} (+) F_n:
/// d^Z_n = [[0, 0], [alpha_{n+1}, d_n]]. Needs no decomposition.
ChainComplex standard_cone(const GradedMap& alpha);

/// Throws NotScalarSource if lambda has a nonzero differential, ValidationError
/// if alpha is not a chain map, HypothesisFailure if Im alpha_n is not inside
/// the chosen G_n.
ConeComplex mapping_cone(const GradedMap& alpha);
ConeComplex mapping_cone(const GradedMap& alpha, const Decomposition& dec);

/// Family Psi^n : X_n -> Y_{n-1}, keyed by the source degree n.
class Homotopy {
public:
    Homotopy() = default;
    Homotopy(ChainComplex source, ChainComplex target, std::map<int, Matrix> blocks);
    /// Homotopy on a single complex (source = target = x).
    Homotopy(const ChainComplex& x, std::map<int, Matrix> blocks) : Homotopy(x, x, std::move(blocks)) {}

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    Matrix block(int n) const;
    const std::map<int, Matrix>& blocks() const { return blocks_; }

private:
    ChainComplex source_;
    ChainComplex target_;
    std::map<int, Matrix> blocks_;
};

/// Builds Phi^n = [[0, phi1, 0], [0, 0, phi2], [0, 0, 0]] with
/// phi1 = -alpha_n^{-1} on ker delta_n and 0 on K_n, phi2 = -(delta_{n-1}|K)^{-1}.
/// Satisfies d Phi + Phi d = -id. Throws HypothesisFailure when lambda_n is not
/// carried isomorphically onto ker delta_n.
Homotopy construct_null_homotopy(const ConeComplex& cone, const Decomposition& dec);

struct HomotopyReport {
    bool ok = true;
    int degree = 0;  ///< internal degree of the first failing identity
    std::size_t row = 0;
    std::size_t col = 0;
    Scalar expected;
    Scalar actual;
    std::string message;

    explicit operator bool() const { return ok; }
};

/// Checks f^i - g^i = d_Y^{i-1} Psi^i + Psi^{i+1} d_X^i at every degree.
HomotopyReport verify_homotopy(const GradedMap& f, const GradedMap& g, const Homotopy& psi);
/// Same, for maps X -> X.
HomotopyReport verify_homotopy(const ChainComplex& x, const GradedMap& f, const GradedMap& g, const Homotopy& psi);
/// Shorthand for f = 0, g = id: d Psi + Psi d = -id.
HomotopyReport verify_null_homotopy(const ChainComplex& x, const Homotopy& psi);

struct ContractibilityResult {
    bool contractible = false;
    std::optional<Homotopy> witness;  ///< null-homotopy on X itself when contractible
    HomologyResult homology;
};

/// X ~ 0 iff all homology (including Z-torsion) vanishes; the witness is built
/// by splitting X.
ContractibilityResult is_contractible(const ChainComplex& x);

/// Re-expresses a homotopy on standard_cone(alpha) in the cone's layout coordinates.
Homotopy to_layout_coordinates(const ConeComplex& cone, const Homotopy& standard);
/// Inverse of to_layout_coordinates; `standard` is the complex to attach.
Homotopy from_layout_coordinates(const ConeComplex& cone, const Homotopy& layout, const ChainComplex& standard);

}  // namespace cateig
