#pragma once

#include "cateig/cone.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cateig {

enum class Verdict { Eigenvalue, NotEigenvalue };

enum class FailureKind { Torsion, RankMismatch, AlphaNotInjective, AlphaNotIntoG, NotSaturated };

std::string to_string(FailureKind kind);
std::string to_string(Verdict v);

struct FailureReason {
    FailureKind kind = FailureKind::RankMismatch;
    int degree = 0;                   ///< in the user's convention
    std::vector<mpz_class> factors;   ///< invariant factors, for Torsion / NotSaturated
    friend bool operator==(const FailureReason&, const FailureReason&) = default;
};

/// Outcome of testing whether lambda is a categorified eigenvalue of F with
/// eigenobject R. An Eigenvalue verdict always carries the cone and a witness
/// Phi on it with d Phi + Phi d = -id; a NotEigenvalue verdict carries the
/// first violated hypothesis (smallest degree).
struct EigenCertificate {
    Verdict verdict = Verdict::NotEigenvalue;
    Ring ring = Ring::integers();
    Convention convention = Convention::Cochain;
    std::string eigenobject = "R";
    std::map<int, std::size_t> lambda_ranks;             ///< internal degree
    std::map<int, std::size_t> homology_ranks;           ///< internal degree
    std::map<int, std::vector<mpz_class>> torsion;       ///< internal degree, nonempty entries only
    std::map<int, bool> alpha_injective;                 ///< internal degree
    std::optional<ConeComplex> cone;
    std::optional<Homotopy> witness;
    std::optional<FailureReason> failure;
};

/// Decides whether Cone(alpha) ~ 0 for a scalar lambda and chain map alpha:
/// lambda_n = H^n(F) for all n and alpha_n injective into some complement G_n.
/// NotEigenvalue verdicts are cross-checked against is_contractible.
EigenCertificate decide_eigenvalue(const ChainComplex& f, const ChainComplex& lambda, const GradedMap& alpha);

/// decide_eigenvalue with lambda = H(F) and the canonical eigenmap. Over Z with
/// torsion homology the free part is used and the certificate reports Torsion.
EigenCertificate certify_homology_eigenvalue(const ChainComplex& f);

/// Re-checks a certificate from its embedded data alone: verdict/witness
/// consistency and d Phi + Phi d = -id on the embedded cone.
HomotopyReport verify_certificate(const EigenCertificate& cert);

/// Additionally checks that the embedded cone is Cone(alpha) in the recorded bases.
HomotopyReport verify_certificate(const EigenCertificate& cert, const GradedMap& alpha);

/// Blocks of a homotopy Psi on a cone, read in the layout [lambda | G | Im].
struct DegreeBlockAnalysis {
    int degree = 0;       ///< internal degree n
    Matrix psi12;         ///< Psi^n : G_n -> lambda_n
    Matrix psi23;         ///< Psi^n : Im d_{n-1} -> G_{n-1}
    bool eq1 = false;     ///< psi12^n alpha_n = -id
    bool eq2 = false;     ///< alpha_n psi12^n + psi23^{n+1} delta_n = -id on G_n
    bool eq3 = false;     ///< delta_{n-1} psi23^n = -id on Im d_{n-1}
    Matrix c_residual;    ///< c_{n-1} = psi23^n + (delta_{n-1}|K)^{-1}
    bool c_condition = false;  ///< delta_{n-1} c_{n-1} = 0
    Matrix g_residual;    ///< psi12^n on the complement of Im alpha_n in G_n
    std::size_t rank_a = 0;  ///< ker delta cap (Im alpha)^c
    std::size_t rank_b = 0;  ///< K cap (Im alpha)^c
    std::size_t rank_c = 0;  ///< ker delta cap Im alpha
    std::size_t rank_d = 0;  ///< K cap Im alpha
    bool image_equals_ker_delta = false;

    bool equations_hold() const { return eq1 && eq2 && eq3 && c_condition; }
    bool conclusions_hold() const { return rank_a == 0 && rank_d == 0 && image_equals_ker_delta; }
};

struct BlockAnalysis {
    std::map<int, DegreeBlockAnalysis> degrees;

    bool equations_hold() const;
    bool conclusions_hold() const;
};

/// Throws LayoutMismatch when psi is not a homotopy on cone.underlying.
BlockAnalysis analyze_homotopy_blocks(const ConeComplex& cone, const Homotopy& psi, const Decomposition& dec);

}  // namespace cateig
