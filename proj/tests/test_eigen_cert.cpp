#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cateig/eigen_cert.hpp"
#include "cateig/errors.hpp"
#include "cateig/oracle.hpp"
#include "cateig/random.hpp"

using namespace cateig;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();
const Ring F2 = Ring::prime_field(2);

ChainComplex circle() {
    return ChainComplex(Z, Convention::Chain, {{0, 3}, {-1, 3}},
                        {{-1, Matrix::from_rows(Z, {{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}})}});
}

GradedMap circle_alpha(std::size_t lambda0 = 1) {
    ChainComplex lambda = scalar_object(Z, Convention::Chain, {{0, lambda0}, {-1, 1}});
    Matrix a0 = lambda0 == 1 ? Matrix::from_rows(Z, {{1}, {0}, {0}}) : Matrix::from_rows(Z, {{1, 0}, {0, 1}, {0, 0}});
    return GradedMap(lambda, circle(), 0, {{0, a0}, {-1, Matrix::from_rows(Z, {{1}, {1}, {1}})}});
}

}  // namespace

TEST_CASE("circle is an eigenvalue") {
    GradedMap alpha = circle_alpha();
    EigenCertificate cert = decide_eigenvalue(circle(), alpha.source(), alpha);
    CHECK(cert.verdict == Verdict::Eigenvalue);
    REQUIRE(cert.witness);
    CHECK(cert.witness->block(-1) == Matrix::from_rows(Z, {{0, 0, 0, -1}}));
    CHECK(verify_certificate(cert));
    CHECK(verify_certificate(cert, alpha));
    CHECK(cert.eigenobject == "R");

    EigenCertificate canon = certify_homology_eigenvalue(circle());
    CHECK(canon.verdict == Verdict::Eigenvalue);
    CHECK(canon.lambda_ranks == std::map<int, std::size_t>{{-1, 1}, {0, 1}});
}

TEST_CASE("rank mismatch at degree 0") {
    GradedMap alpha = circle_alpha(2);
    EigenCertificate cert = decide_eigenvalue(circle(), alpha.source(), alpha);
    CHECK(cert.verdict == Verdict::NotEigenvalue);
    REQUIRE(cert.failure);
    CHECK(cert.failure->kind == FailureKind::RankMismatch);
    CHECK(cert.failure->degree == 0);
    CHECK_FALSE(cert.witness);
    CHECK(verify_certificate(cert));
}

TEST_CASE("torsion is reported") {
    ChainComplex two(Z, Convention::Cochain, {{0, 1}, {1, 1}}, {{0, Matrix::from_rows(Z, {{2}})}});
    EigenCertificate cert = certify_homology_eigenvalue(two);
    CHECK(cert.verdict == Verdict::NotEigenvalue);
    REQUIRE(cert.failure);
    CHECK(cert.failure->kind == FailureKind::Torsion);
    CHECK(cert.failure->degree == 1);
    CHECK(cert.failure->factors == std::vector<mpz_class>{2});
}

TEST_CASE("exact complex has the zero eigenvalue") {
    ChainComplex exact(Q, Convention::Cochain, {{0, 1}, {1, 1}}, {{0, Matrix::identity(Q, 1)}});
    EigenCertificate cert = certify_homology_eigenvalue(exact);
    CHECK(cert.verdict == Verdict::Eigenvalue);
    CHECK(cert.lambda_ranks.empty());
}

TEST_CASE("non-injective and boundary alphas") {
    ChainComplex x = circle();
    ChainComplex lambda = scalar_object(Z, Convention::Chain, {{0, 1}, {-1, 1}});
    GradedMap zero_col(lambda, x, 0, {{0, Matrix(Z, 3, 1)}, {-1, Matrix::from_rows(Z, {{1}, {1}, {1}})}});
    auto c1 = decide_eigenvalue(x, lambda, zero_col);
    REQUIRE(c1.failure);
    CHECK(c1.failure->kind == FailureKind::AlphaNotInjective);
    CHECK_FALSE(c1.alpha_injective.at(0));

    GradedMap boundary(lambda, x, 0,
                       {{0, Matrix::from_rows(Z, {{-1}, {1}, {0}})}, {-1, Matrix::from_rows(Z, {{1}, {1}, {1}})}});
    auto c2 = decide_eigenvalue(x, lambda, boundary);
    REQUIRE(c2.failure);
    CHECK(c2.failure->kind == FailureKind::AlphaNotIntoG);
}

TEST_CASE("twice a generator is not saturated over Z") {
    ChainComplex x = circle();
    ChainComplex lambda = scalar_object(Z, Convention::Chain, {{0, 1}, {-1, 1}});
    GradedMap twice(lambda, x, 0, {{0, Matrix::from_rows(Z, {{1}, {0}, {0}})}, {-1, Matrix::from_rows(Z, {{2}, {2}, {2}})}});
    auto c = decide_eigenvalue(x, lambda, twice);
    REQUIRE(c.failure);
    CHECK(c.failure->kind == FailureKind::NotSaturated);
    CHECK(c.failure->degree == 1);
    CHECK(c.failure->factors == std::vector<mpz_class>{2});
    CHECK_FALSE(is_contractible(standard_cone(twice)).contractible);
}

TEST_CASE("the smallest failing degree is reported") {
    ChainComplex x = scalar_object(Q, Convention::Cochain, {{0, 1}, {3, 1}});
    ChainComplex lambda = scalar_object(Q, Convention::Cochain, {{0, 1}, {3, 1}});
    GradedMap alpha(lambda, x, 0, {{0, Matrix(Q, 1, 1)}, {3, Matrix(Q, 1, 1)}});
    auto c = decide_eigenvalue(x, lambda, alpha);
    REQUIRE(c.failure);
    CHECK(c.failure->degree == 0);
}

TEST_CASE("structural errors") {
    ChainComplex x = circle();
    ChainComplex nonscalar(Z, Convention::Chain, {{0, 1}, {-1, 1}}, {{-1, Matrix::from_rows(Z, {{1}})}});
    GradedMap a(nonscalar, x, 0, {});
    CHECK_THROWS_AS(decide_eigenvalue(x, nonscalar, a), NotScalarSource);
    ChainComplex lambda = scalar_object(Z, Convention::Chain, {{-1, 1}});
    GradedMap not_chain(lambda, x, 0, {{-1, Matrix::from_rows(Z, {{1}, {0}, {0}})}});
    CHECK_THROWS_AS(decide_eigenvalue(x, lambda, not_chain), ValidationError);
}

TEST_CASE("block analysis of the circle homotopy") {
    GradedMap alpha = circle_alpha();
    Decomposition dec = decompose(circle(), &alpha);
    EigenCertificate cert = decide_eigenvalue(circle(), alpha.source(), alpha);
    BlockAnalysis a = analyze_homotopy_blocks(*cert.cone, *cert.witness, dec);
    CHECK(a.equations_hold());
    CHECK(a.conclusions_hold());
    for (int n : {0, -1}) {
        const auto& d = a.degrees.at(n);
        CHECK(d.rank_a == 0);
        CHECK(d.rank_d == 0);
        CHECK(d.image_equals_ker_delta);
    }
}

TEST_CASE("zero homotopy breaks eq3 where there are boundaries") {
    GradedMap alpha = circle_alpha();
    Decomposition dec = decompose(circle(), &alpha);
    ConeComplex cone = mapping_cone(alpha, dec);
    BlockAnalysis a = analyze_homotopy_blocks(cone, Homotopy(cone.underlying, {}), dec);
    CHECK_FALSE(a.degrees.at(0).eq3);
    CHECK_FALSE(a.equations_hold());
    CHECK_THROWS_AS(analyze_homotopy_blocks(cone, Homotopy(circle(), {}), dec), LayoutMismatch);
}

TEST_CASE("oracle solutions pass the block analysis on random Q cones") {
    Rng rng(41);
    int analysed = 0;
    for (int i = 0; i < 40; ++i) {
        ChainComplex x = random_complex(Q, rng, {4, 3, 10});
        EigenInstance inst = random_eigen_instance(x, rng, InstanceFamily::Twisted);
        EigenCertificate cert = decide_eigenvalue(x, inst.lambda, inst.alpha);
        REQUIRE(cert.verdict == Verdict::Eigenvalue);
        OracleReport o = null_homotopy_solvable(standard_cone(inst.alpha));
        REQUIRE(o.solvable);
        Homotopy h = to_layout_coordinates(*cert.cone, *o.solution);
        REQUIRE(verify_null_homotopy(cert.cone->underlying, h));
        BlockAnalysis a = analyze_homotopy_blocks(*cert.cone, h, decompose(x, &inst.alpha));
        CHECK(a.equations_hold());
        CHECK(a.conclusions_hold());
        ++analysed;
    }
    CHECK(analysed == 40);
}

TEST_CASE("verdicts match contractibility on random F2 instances") {
    Rng rng(42);
    for (int i = 0; i < 140; ++i) {
        ChainComplex x = random_complex(F2, rng, {5, 3, 8});
        EigenInstance inst = random_eigen_instance(x, rng, static_cast<InstanceFamily>(i % 7));
        EigenCertificate cert = decide_eigenvalue(x, inst.lambda, inst.alpha);
        CHECK((cert.verdict == Verdict::Eigenvalue) == is_contractible(standard_cone(inst.alpha)).contractible);
        CHECK(verify_certificate(cert));
    }
}

TEST_CASE("tampered certificates are rejected") {
    EigenCertificate cert = certify_homology_eigenvalue(circle());
    EigenCertificate no_witness = cert;
    no_witness.witness.reset();
    CHECK_FALSE(verify_certificate(no_witness));
    EigenCertificate flipped = cert;
    auto blocks = flipped.witness->blocks();
    blocks[0] = -blocks[0];
    flipped.witness = Homotopy(cert.cone->underlying, blocks);
    CHECK_FALSE(verify_certificate(flipped));
}
