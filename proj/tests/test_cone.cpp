#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cateig/cone.hpp"
#include "cateig/errors.hpp"
#include "cateig/random.hpp"

using namespace cateig;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

ChainComplex circle() {
    return ChainComplex(Z, Convention::Chain, {{0, 3}, {-1, 3}},
                        {{-1, Matrix::from_rows(Z, {{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}})}});
}

GradedMap circle_alpha(std::size_t lambda0 = 1) {
    ChainComplex lambda = scalar_object(Z, Convention::Chain, {{0, lambda0}, {-1, 1}});
    Matrix a0 = lambda0 == 1 ? Matrix::from_rows(Z, {{1}, {0}, {0}}) : Matrix::from_rows(Z, {{1, 0}, {0, 1}, {0, 0}});
    return GradedMap(lambda, circle(), 0, {{0, a0}, {-1, Matrix::from_rows(Z, {{1}, {1}, {1}})}});
}

// Chain degree k is internal degree -k.
constexpr int c1 = -1, c2 = -2;

}  // namespace

TEST_CASE("circle cone matrices") {
    ConeComplex cone = mapping_cone(circle_alpha());
    const ChainComplex& z = cone.underlying;
    CHECK(validate_complex(z));
    CHECK(z.diff(c2) == Matrix::from_rows(Z, {{0}, {1}, {1}, {1}}));
    CHECK(z.diff(c1) == Matrix::from_rows(Z, {{1, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}}));
}

TEST_CASE("circle null-homotopy") {
    GradedMap alpha = circle_alpha();
    ConeComplex cone = mapping_cone(alpha);
    Homotopy psi = construct_null_homotopy(cone, decompose(circle(), &alpha));
    const Matrix psi1 = psi.block(c1), psi0 = psi.block(0);
    CHECK(psi1 == Matrix::from_rows(Z, {{0, 0, 0, -1}}));
    CHECK(psi0 == Matrix::from_rows(Z, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 0, 0}}));
    const Matrix d2 = cone.underlying.diff(c2), d1 = cone.underlying.diff(c1);
    CHECK(psi1 * d2 == -Matrix::identity(Z, 1));
    CHECK(psi0 * d1 + d2 * psi1 == -Matrix::identity(Z, 4));
    CHECK(d1 * psi0 == -Matrix::identity(Z, 3));
    CHECK(verify_null_homotopy(cone.underlying, psi));
}

TEST_CASE("a flipped sign is caught") {
    GradedMap alpha = circle_alpha();
    ConeComplex cone = mapping_cone(alpha);
    Homotopy psi = construct_null_homotopy(cone, decompose(circle(), &alpha));
    auto blocks = psi.blocks();
    blocks[c1] = Matrix::from_rows(Z, {{0, 0, 0, 1}});
    auto rep = verify_null_homotopy(cone.underlying, Homotopy(cone.underlying, blocks));
    CHECK_FALSE(rep);
    CHECK(rep.degree == c2);
}

TEST_CASE("rank mismatch has no null-homotopy") {
    GradedMap alpha = circle_alpha(2);
    CHECK_THROWS_AS(mapping_cone(alpha), HypothesisFailure);
    ChainComplex cone = standard_cone(alpha);
    CHECK_FALSE(is_contractible(cone).contractible);
}

TEST_CASE("non-scalar source") {
    ChainComplex x(Q, Convention::Cochain, {{0, 1}, {1, 1}}, {{0, Matrix::identity(Q, 1)}});
    CHECK_THROWS_AS(mapping_cone(GradedMap::identity(x)), NotScalarSource);
}

TEST_CASE("zero alpha gives F back") {
    ChainComplex x = circle();
    GradedMap zero = GradedMap::zero(ChainComplex(Z, Convention::Chain, {}), x);
    CHECK(standard_cone(zero) == x);
    ConeComplex cone = mapping_cone(zero);
    for (int n = x.lo(); n <= x.hi(); ++n) {
        CHECK(cone.layout_at(n).lambda == 0);
        CHECK(cone.underlying.rank(n) == x.rank(n));
    }
    CHECK(homology(cone.underlying).betti_numbers() == homology(x).betti_numbers());
}

TEST_CASE("identity on a scalar object") {
    ChainComplex lambda = scalar_object(Q, Convention::Cochain, {{0, 1}});
    ConeComplex cone = mapping_cone(GradedMap::identity(lambda));
    CHECK(cone.underlying.diff(-1) == Matrix::from_rows(Q, {{1}}));
    CHECK(is_contractible(cone.underlying).contractible);
    Homotopy phi = construct_null_homotopy(cone, decompose(lambda));
    CHECK(phi.block(0) == Matrix::from_rows(Q, {{-1}}));
    CHECK(verify_null_homotopy(cone.underlying, phi));
}

TEST_CASE("contractibility") {
    CHECK(is_contractible(standard_cone(circle_alpha())).contractible);
    CHECK_FALSE(is_contractible(scalar_object(Z, Convention::Cochain, {{0, 1}})).contractible);
    ChainComplex two(Z, Convention::Cochain, {{0, 1}, {1, 1}}, {{0, Matrix::from_rows(Z, {{2}})}});
    auto c = is_contractible(two);
    CHECK_FALSE(c.contractible);
    CHECK(c.homology.has_torsion());
}

TEST_CASE("verify_homotopy with explicit maps") {
    ChainComplex x = circle();
    GradedMap f = GradedMap::identity(x);
    CHECK(verify_homotopy(x, f, f, Homotopy(x, {})));
    CHECK(verify_homotopy(f, f, Homotopy(x, {})));
    CHECK_FALSE(verify_homotopy(x, f, GradedMap::zero(x, x), Homotopy(x, {})));
}

TEST_CASE("forward property: canonical cones are contractible with verified witnesses") {
    Rng rng(31);
    for (Ring r : {Q, Ring::prime_field(2), Ring::prime_field(3)}) {
        for (int i = 0; i < 60; ++i) {
            ChainComplex x = random_complex(r, rng, {});
            CanonicalAlpha ca = canonical_alpha(x);
            ConeComplex cone = mapping_cone(ca.alpha);
            CHECK(validate_complex(cone.underlying));
            Homotopy phi = construct_null_homotopy(cone, decompose(x, &ca.alpha));
            CHECK(verify_null_homotopy(cone.underlying, phi));
            auto c = is_contractible(cone.underlying);
            REQUIRE(c.contractible);
            CHECK(verify_null_homotopy(cone.underlying, *c.witness));
        }
    }
}

TEST_CASE("converse property: a rank mismatch is never contractible") {
    Rng rng(32);
    for (int i = 0; i < 80; ++i) {
        ChainComplex x = random_complex(Q, rng, {});
        EigenInstance inst = random_eigen_instance(x, rng, i % 2 ? InstanceFamily::ExtraRank : InstanceFamily::DroppedColumn);
        HomologyResult h = homology(x);
        bool mismatch = false;
        for (int n = std::min(x.lo(), inst.lambda.lo()); n <= std::max(x.hi(), inst.lambda.hi()); ++n)
            mismatch = mismatch || inst.lambda.rank(n) != h.betti(n);
        if (!mismatch) continue;
        CHECK_FALSE(is_contractible(standard_cone(inst.alpha)).contractible);
    }
}

TEST_CASE("layout coordinates round trip") {
    GradedMap alpha = circle_alpha();
    ConeComplex cone = mapping_cone(alpha);
    Homotopy psi = construct_null_homotopy(cone, decompose(circle(), &alpha));
    ChainComplex std_cone = standard_cone(alpha);
    Homotopy in_std = from_layout_coordinates(cone, psi, std_cone);
    CHECK(verify_null_homotopy(std_cone, in_std));
    Homotopy back = to_layout_coordinates(cone, in_std);
    CHECK(back.blocks() == psi.blocks());
}
