#include "cateig/suites.hpp"

#include "cateig/eigen_cert.hpp"
#include "cateig/errors.hpp"
#include "cateig/linalg.hpp"
#include "cateig/oracle.hpp"
#include "cateig/random.hpp"

#include <chrono>
#include <functional>

namespace cateig {

std::size_t SuiteResult::count(const std::string& key) const {
    auto it = counters.find(key);
    return it == counters.end() ? 0 : it->second;
}

namespace {

constexpr std::size_t kMaxReported = 5;

/// Runs `trial` for each index; a trial returns an empty string on success.
SuiteResult run_trials(std::string name, std::size_t trials,
                       const std::function<std::string(std::size_t, SuiteResult&)>& trial) {
    SuiteResult res;
    res.name = std::move(name);
    res.trials = trials;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < trials; ++t) {
        std::string err;
        try {
            err = trial(t, res);
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        if (err.empty()) {
            ++res.passed;
        } else if (res.failures.size() < kMaxReported) {
            res.failures.push_back("trial " + std::to_string(t) + ": " + err);
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

/// Pivot count of the reduced form over a field, number of nonzero Smith
/// factors over Z.
std::size_t rank_by_reduction(const Matrix& d) {
    if (d.empty()) return 0;
    if (d.ring().is_field()) return rref(d).pivots.size();
    std::size_t r = 0;
    for (auto& f : smith_normal_form(d).invariant_factors) r += f != 0;
    return r;
}

/// Nonzero homology, computed from ranks and Smith factors only.
bool homology_nonzero_by_reduction(const ChainComplex& x) {
    for (auto& [n, r] : x.ranks()) {
        if (r != rank_by_reduction(x.diff(n)) + rank_by_reduction(x.diff(n - 1))) return true;
    }
    if (x.ring().kind() == RingKind::Integers) {
        for (auto& [n, d] : x.diffs())
            for (auto& f : smith_normal_form(d).invariant_factors)
                if (f > 1) return true;
    }
    return false;
}

/// Block equations and conclusions for one null-homotopy on the cone.
std::string analyse(const ConeComplex& cone, const Homotopy& psi, const Decomposition& dec, SuiteResult& res,
                    const char* what) {
    ++res.counters["homotopies analysed"];
    BlockAnalysis a = analyze_homotopy_blocks(cone, psi, dec);
    if (!a.equations_hold()) return std::string(what) + ": block equations fail";
    if (!a.conclusions_hold()) return std::string(what) + ": block conclusions fail";
    ++res.counters["block checks passed"];
    return {};
}

}  // namespace

SuiteResult run_forward_suite(const std::vector<Ring>& rings, std::uint64_t seed, std::size_t trials, int max_length,
                              std::size_t max_rank) {
    const ComplexShape shape{max_length, max_rank, static_cast<std::size_t>(max_length) * max_rank};
    return run_trials("forward", trials, [&](std::size_t t, SuiteResult& res) -> std::string {
        Rng rng = trial_rng(seed, t);
        const Ring ring = rings[t % rings.size()];
        ChainComplex f = random_complex(ring, rng, shape);
        ++res.counters["ring " + ring.name()];
        EigenCertificate cert = certify_homology_eigenvalue(f);
        if (cert.verdict != Verdict::Eigenvalue) return "verdict NotEigenvalue";
        if (!verify_certificate(cert)) return "certificate does not re-verify";
        if (!verify_null_homotopy(cert.cone->underlying, *cert.witness)) return "witness does not verify";
        CanonicalAlpha ca = canonical_alpha(f);
        return analyse(*cert.cone, *cert.witness, decompose(f, &ca.alpha), res, "witness");
    });
}

SuiteResult run_biconditional_suite(Ring ring, std::uint64_t seed, std::size_t trials, std::size_t max_dim) {
    const ComplexShape shape{6, 4, max_dim};
    return run_trials("biconditional", trials, [&](std::size_t t, SuiteResult& res) -> std::string {
        Rng rng = trial_rng(seed, t);
        ChainComplex f = random_complex(ring, rng, shape);
        const auto family = static_cast<InstanceFamily>(t % 7);
        EigenInstance inst = random_eigen_instance(f, rng, family);
        ++res.counters["family " + to_string(family)];

        EigenCertificate cert = decide_eigenvalue(inst.f, inst.lambda, inst.alpha);
        ChainComplex cone = standard_cone(inst.alpha);
        OracleReport oracle = null_homotopy_solvable(cone);
        const bool eigen = cert.verdict == Verdict::Eigenvalue;
        if (eigen != oracle.solvable) {
            return "verdict " + to_string(cert.verdict) + " but oracle says " +
                   (oracle.solvable ? "solvable" : "unsolvable") + " (" + to_string(family) + ")";
        }
        ++res.counters["oracle agrees"];

        if (!eigen) {
            ++res.counters["NotEigenvalue"];
            ++res.counters["failure " + to_string(cert.failure->kind)];
            if (is_contractible(cone).contractible) return "NotEigenvalue but cone is contractible";
            if (!homology_nonzero_by_reduction(cone)) return "NotEigenvalue but cone homology vanishes by reduction";
            ++res.counters["contrapositive ok"];
            return {};
        }

        ++res.counters["Eigenvalue"];
        if (!verify_certificate(cert, inst.alpha)) return "certificate does not re-verify";
        Decomposition dec = decompose(inst.f, &inst.alpha);
        if (auto err = analyse(*cert.cone, *cert.witness, dec, res, "witness"); !err.empty()) return err;
        Homotopy solved = to_layout_coordinates(*cert.cone, *oracle.solution);
        if (!verify_null_homotopy(cert.cone->underlying, solved)) return "oracle homotopy does not verify on the cone";
        return analyse(*cert.cone, solved, dec, res, "oracle homotopy");
    });
}

SuiteResult run_oracle_homology_suite(std::uint64_t seed, std::size_t trials, std::size_t max_dim) {
    const Ring f2 = Ring::prime_field(2);
    const ComplexShape shape{6, 4, max_dim};
    return run_trials("oracle homology", trials, [&](std::size_t t, SuiteResult& res) -> std::string {
        Rng rng = trial_rng(seed, t);
        ChainComplex f = random_complex(f2, rng, shape);
        res.counters["total rank " + std::to_string(f.total_rank())]++;
        const auto expected = brute_homology_f2(f).ranks;
        const HomologyResult h = homology(f);
        for (auto& [n, r] : f.ranks()) {
            (void)r;
            const auto it = expected.find(n);
            const std::size_t want = it == expected.end() ? 0 : it->second;
            if (h.betti(n) != want) {
                return "degree " + std::to_string(n) + ": homology " + std::to_string(h.betti(n)) + ", enumeration " +
                       std::to_string(want);
            }
        }
        return {};
    });
}

SuiteResult run_snf_suite(std::uint64_t seed, std::size_t trials, std::size_t max_size, long bound) {
    return run_trials("smith normal form", trials, [&](std::size_t t, SuiteResult& res) -> std::string {
        Rng rng = trial_rng(seed, t);
        Matrix a = random_int_matrix(rng, max_size, max_size, -bound, bound);
        SnfResult s = smith_normal_form(a);
        if (!(s.U * a * s.V == s.S)) return "U A V != S";
        const Scalar du = determinant(s.U), dv = determinant(s.V);
        if (!du.is_unit() || !dv.is_unit()) return "transform is not unimodular";
        for (std::size_t i = 0; i < s.S.rows(); ++i)
            for (std::size_t j = 0; j < s.S.cols(); ++j)
                if (i != j && !s.S(i, j).is_zero()) return "S is not diagonal";
        const auto& d = s.invariant_factors;
        if (d.size() != std::min(a.rows(), a.cols())) return "wrong number of factors";
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 0 || s.S(i, i).integer() != d[i]) return "factor list does not match S";
            if (i + 1 < d.size() && (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0)) return "divisibility fails";
        }
        if (rank(a) == std::min(a.rows(), a.cols())) ++res.counters["full rank"];
        return {};
    });
}

SuiteResult run_contractibility_suite(Ring ring, std::uint64_t seed, std::size_t trials, std::size_t max_dim) {
    const ComplexShape shape{6, 4, max_dim};
    return run_trials("contractibility", trials, [&](std::size_t t, SuiteResult& res) -> std::string {
        Rng rng = trial_rng(seed, t);
        ChainComplex x = random_complex(ring, rng, shape);
        if (t % 2) x = standard_cone(canonical_alpha(x).alpha);  // contractible by construction
        ContractibilityResult c = is_contractible(x);
        OracleReport o = null_homotopy_solvable(x);
        if (c.contractible != o.solvable) return "is_contractible disagrees with the linear system";
        if (c.contractible) {
            ++res.counters["contractible"];
            if (!c.witness || !verify_null_homotopy(x, *c.witness)) return "contractibility witness fails";
        }
        return {};
    });
}

}  // namespace cateig
