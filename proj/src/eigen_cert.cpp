#include "cateig/eigen_cert.hpp"

#include "cateig/errors.hpp"

#include <algorithm>
#include <set>

namespace cateig {

std::string to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::Torsion: return "Torsion";
        case FailureKind::RankMismatch: return "RankMismatch";
        case FailureKind::AlphaNotInjective: return "AlphaNotInjective";
        case FailureKind::AlphaNotIntoG: return "AlphaNotIntoG";
        case FailureKind::NotSaturated: return "NotSaturated";
    }
    return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Eigenvalue ? "Eigenvalue" : "NotEigenvalue"; }

namespace {

std::set<int> degrees_of(const ChainComplex& a, const ChainComplex& b) {
    std::set<int> out;
    for (auto& [n, r] : a.ranks()) out.insert(n);
    for (auto& [n, r] : b.ranks()) out.insert(n);
    return out;
}

/// First violated hypothesis at degree n, if any, in a fixed order.
std::optional<FailureReason> check_degree(const ChainComplex& f, const HomologyResult& h, const ChainComplex& lambda,
                                          const GradedMap& alpha, int n, bool& injective) {
    const int shown = user_degree(f.convention(), n);
    const Matrix a = alpha.block(n);
    injective = rank(a) == lambda.rank(n);

    if (auto it = h.degrees.find(n); it != h.degrees.end() && !it->second.torsion.empty()) {
        return FailureReason{FailureKind::Torsion, shown, it->second.torsion};
    }
    if (lambda.rank(n) != h.betti(n)) return FailureReason{FailureKind::RankMismatch, shown, {}};
    if (!injective) return FailureReason{FailureKind::AlphaNotInjective, shown, {}};
    if (lambda.rank(n) == 0) return std::nullopt;

    const Matrix prev = f.diff(n - 1);
    SubspaceBasis im = prev.cols() ? image_basis(prev) : empty_basis(f.ring(), f.rank(n));
    SubspaceBasis img = image_basis(a);
    Matrix both = hstack(img.vectors, im.vectors);
    if (rank(both) != img.size() + im.size()) return FailureReason{FailureKind::AlphaNotIntoG, shown, {}};
    if (auto bad = saturation_defect(both); !bad.empty()) {
        return FailureReason{FailureKind::NotSaturated, shown, std::move(bad)};
    }
    return std::nullopt;
}

}  // namespace

EigenCertificate decide_eigenvalue(const ChainComplex& f, const ChainComplex& lambda, const GradedMap& alpha) {
    if (!(alpha.source() == lambda) || !(alpha.target() == f)) {
        throw Error("decide_eigenvalue: alpha must map lambda into F");
    }
    if (!is_scalar(lambda)) {
        for (auto& [n, d] : lambda.diffs())
            if (!d.is_zero()) throw NotScalarSource(user_degree(lambda.convention(), n));
    }
    if (auto rep = validate_chain_map(alpha); !rep) throw ValidationError("alpha is not a chain map: " + rep.message);

    EigenCertificate cert;
    cert.ring = f.ring();
    cert.convention = f.convention();
    cert.lambda_ranks = lambda.ranks();
    HomologyResult h = homology(f);
    for (auto& [n, dh] : h.degrees) {
        cert.homology_ranks[n] = dh.betti;
        if (!dh.torsion.empty()) cert.torsion[n] = dh.torsion;
    }

    for (int n : degrees_of(f, lambda)) {
        bool injective = true;
        auto failure = check_degree(f, h, lambda, alpha, n, injective);
        cert.alpha_injective[n] = injective;
        if (failure && (!cert.failure || failure->degree < cert.failure->degree)) cert.failure = std::move(failure);
    }

    if (cert.failure) {
        cert.verdict = Verdict::NotEigenvalue;
        if (is_contractible(standard_cone(alpha)).contractible) {
            throw Error("internal: cone is contractible although " + to_string(cert.failure->kind) +
                        " was reported at degree " + std::to_string(cert.failure->degree));
        }
        return cert;
    }

    Decomposition dec = decompose(f, &alpha);
    ConeComplex cone = mapping_cone(alpha, dec);
    Homotopy phi = construct_null_homotopy(cone, dec);
    if (auto rep = verify_null_homotopy(cone.underlying, phi); !rep) {
        throw Error("internal: constructed null-homotopy does not verify: " + rep.message);
    }
    cert.verdict = Verdict::Eigenvalue;
    cert.cone = std::move(cone);
    cert.witness = std::move(phi);
    return cert;
}

EigenCertificate certify_homology_eigenvalue(const ChainComplex& f) {
    HomologyResult h = homology(f);
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> blocks;
    for (auto& [n, dh] : h.degrees) {
        ranks[n] = dh.betti;
        blocks[n] = dh.representatives.vectors;
    }
    ChainComplex lambda = scalar_object(f.ring(), f.convention(), ranks);
    GradedMap alpha(lambda, f, 0, std::move(blocks));
    return decide_eigenvalue(f, lambda, alpha);
}

HomotopyReport verify_certificate(const EigenCertificate& cert) {
    HomotopyReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.message = msg;
        return rep;
    };
    if (cert.verdict == Verdict::NotEigenvalue) {
        if (!cert.failure) return fail("NotEigenvalue certificate without a failure reason");
        if (cert.witness) return fail("NotEigenvalue certificate carries a witness");
        return rep;
    }
    if (cert.failure) return fail("Eigenvalue certificate carries a failure reason");
    if (!cert.witness || !cert.cone) return fail("Eigenvalue certificate lacks its witness or cone");
    if (!(cert.witness->source() == cert.cone->underlying)) return fail("witness is not defined on the embedded cone");
    return verify_null_homotopy(cert.cone->underlying, *cert.witness);
}

HomotopyReport verify_certificate(const EigenCertificate& cert, const GradedMap& alpha) {
    HomotopyReport rep = verify_certificate(cert);
    if (!rep || cert.verdict == Verdict::NotEigenvalue) return rep;
    const ConeComplex& cone = *cert.cone;
    ChainComplex std_cone = standard_cone(alpha);
    const ChainComplex& z = cone.underlying;
    for (int n = z.lo() - 1; n <= z.hi(); ++n) {
        if (std_cone.rank(n) != z.rank(n)) {
            rep.ok = false;
            rep.message = "cone rank differs at degree " + std::to_string(user_degree(z.convention(), n));
            return rep;
        }
        if (!(cone.basis_at(n + 1) * z.diff(n) == std_cone.diff(n) * cone.basis_at(n))) {
            rep.ok = false;
            rep.message = "embedded cone differential does not match Cone(alpha) at degree " +
                          std::to_string(user_degree(z.convention(), n));
            return rep;
        }
    }
    return rep;
}

bool BlockAnalysis::equations_hold() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& kv) { return kv.second.equations_hold(); });
}

bool BlockAnalysis::conclusions_hold() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const auto& kv) { return kv.second.conclusions_hold(); });
}

namespace {

std::size_t intersection_rank(const Matrix& u, const Matrix& v) {
    if (u.cols() == 0 || v.cols() == 0) return 0;
    return rank(u) + rank(v) - rank(hstack(u, v));
}

Matrix minus_identity(Ring ring, std::size_t n) { return -Matrix::identity(ring, n); }

}  // namespace

BlockAnalysis analyze_homotopy_blocks(const ConeComplex& cone, const Homotopy& psi, const Decomposition& dec) {
    const ChainComplex& z = cone.underlying;
    if (!(psi.source() == z) || !(psi.target() == z)) {
        throw LayoutMismatch("homotopy is not defined on the cone's layout coordinates");
    }
    const Ring ring = z.ring();
    BlockAnalysis out;
    if (z.is_zero()) return out;

    // Blocks of d^Z: alpha_n sits in d^Z_{n-1}, delta_n in d^Z_n.
    auto alpha_at = [&](int n) {
        const BlockLayout dst = cone.layout_at(n), src = cone.layout_at(n - 1);
        return z.diff(n - 1).block(dst.g_offset(), 0, dst.g, src.lambda);
    };
    auto delta_at = [&](int n) {
        const BlockLayout src = cone.layout_at(n), dst = cone.layout_at(n + 1);
        return z.diff(n).block(dst.im_offset(), src.g_offset(), dst.im, src.g);
    };
    auto psi12_at = [&](int n) {
        const BlockLayout src = cone.layout_at(n), dst = cone.layout_at(n - 1);
        return psi.block(n).block(0, src.g_offset(), dst.lambda, src.g);
    };
    auto psi23_at = [&](int n) {
        const BlockLayout src = cone.layout_at(n), dst = cone.layout_at(n - 1);
        return psi.block(n).block(dst.g_offset(), src.im_offset(), dst.g, src.im);
    };

    for (int n = z.lo(); n <= z.hi() + 1; ++n) {
        const BlockLayout here = cone.layout_at(n), below = cone.layout_at(n - 1);
        const auto dn = dec.at(n), dprev = dec.at(n - 1);
        if (dn.rank_g() != here.g || dn.rank_im() != here.im) {
            throw LayoutMismatch("decomposition and cone layout disagree at degree " +
                                 std::to_string(user_degree(z.convention(), n)));
        }
        DegreeBlockAnalysis a;
        a.degree = n;
        a.psi12 = psi12_at(n);
        a.psi23 = psi23_at(n);
        const Matrix alpha = alpha_at(n);
        const Matrix delta = delta_at(n);
        const Matrix delta_prev = delta_at(n - 1);

        a.eq1 = a.psi12 * alpha == minus_identity(ring, below.lambda);
        a.eq2 = alpha * a.psi12 + psi23_at(n + 1) * delta == minus_identity(ring, here.g);
        a.eq3 = delta_prev * a.psi23 == minus_identity(ring, here.im);

        if (here.im > 0) {
            Matrix on_k = delta_prev * dprev.k.vectors;
            Matrix right_inverse = dprev.k.vectors * inverse(on_k);
            a.c_residual = a.psi23 + right_inverse;
        } else {
            a.c_residual = Matrix(ring, below.g, 0);
        }
        a.c_condition = (delta_prev * a.c_residual).is_zero();

        // Submodules of G_n; ranks are taken over the fraction field.
        SubspaceBasis img = alpha.cols() ? image_basis(alpha) : empty_basis(ring, here.g);
        Matrix img_q = ring.is_field() ? img.vectors : img.vectors.change_ring(Ring::rationals());
        SubspaceBasis comp = complement_basis({here.g, img_q}, here.g);
        Matrix comp_r = ring.is_field() ? comp.vectors : Matrix(ring, here.g, 0);
        if (!ring.is_field()) {
            // Rational complement vectors are standard basis vectors when
            // they come from the echelon rule; otherwise clear denominators.
            std::vector<Matrix> cols;
            for (std::size_t j = 0; j < comp.size(); ++j) {
                mpz_class l = 1;
                for (std::size_t i = 0; i < here.g; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), comp.vectors(i, j).value().get_den_mpz_t());
                Matrix c(ring, here.g, 1);
                for (std::size_t i = 0; i < here.g; ++i) c(i, 0) = Scalar(ring, mpq_class(comp.vectors(i, j).value() * l));
                cols.push_back(std::move(c));
            }
            comp_r = Matrix::from_columns(ring, here.g, cols);
        }
        a.g_residual = a.psi12 * comp_r;
        a.rank_a = intersection_rank(dn.ker_delta.vectors, comp_r);
        a.rank_b = intersection_rank(dn.k.vectors, comp_r);
        a.rank_c = intersection_rank(dn.ker_delta.vectors, img.vectors);
        a.rank_d = intersection_rank(dn.k.vectors, img.vectors);
        a.image_equals_ker_delta = contained_in(dn.ker_delta.vectors, alpha) && contained_in(alpha, dn.ker_delta.vectors);
        out.degrees.emplace(n, std::move(a));
    }
    return out;
}

}  // namespace cateig
