#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cateig/decomposition.hpp"
#include "cateig/errors.hpp"
#include "cateig/random.hpp"

using namespace cateig;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

/// Circle as a chain complex: C_1 -> C_0, edges AB, BC, CA.
ChainComplex circle() {
    return ChainComplex(Z, Convention::Chain, {{0, 3}, {-1, 3}},
                        {{-1, Matrix::from_rows(Z, {{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}})}});
}

ChainComplex circle_lambda() { return scalar_object(Z, Convention::Chain, {{0, 1}, {-1, 1}}); }

}  // namespace

TEST_CASE("degree conventions") {
    CHECK(internal_degree(Convention::Chain, 2) == -2);
    CHECK(user_degree(Convention::Chain, -2) == 2);
    CHECK(internal_degree(Convention::Cochain, 2) == 2);
}

TEST_CASE("validate_complex") {
    CHECK(validate_complex(scalar_object(Q, Convention::Cochain, {{0, 2}, {1, 3}})));
    CHECK(validate_complex(circle()));
    ChainComplex bad(Q, Convention::Cochain, {{0, 2}, {1, 2}, {2, 2}},
                     {{0, Matrix::identity(Q, 2)}, {1, Matrix::identity(Q, 2)}});
    auto rep = validate_complex(bad);
    CHECK_FALSE(rep);
    CHECK(rep.degree == 0);
    CHECK_THROWS_AS(ChainComplex(Q, Convention::Cochain, {{0, 2}, {1, 1}}, {{0, Matrix::identity(Q, 2)}}),
                    ShapeMismatch);
}

TEST_CASE("validate_chain_map") {
    GradedMap alpha(circle_lambda(), circle(), 0,
                    {{0, Matrix::from_rows(Z, {{1}, {0}, {0}})}, {-1, Matrix::from_rows(Z, {{1}, {1}, {1}})}});
    CHECK(validate_chain_map(alpha));
    CHECK(validate_chain_map(GradedMap::zero(circle(), circle_lambda())));
    GradedMap bad(circle_lambda(), circle(), 0, {{-1, Matrix::from_rows(Z, {{1}, {0}, {0}})}});
    CHECK_FALSE(validate_chain_map(bad));
}

TEST_CASE("shift, direct sum, scalar object") {
    ChainComplex lambda = scalar_object(Z, Convention::Cochain, {{0, 1}, {1, 1}});
    CHECK(is_scalar(lambda));
    ChainComplex s = shift(lambda, 1);
    CHECK(s.rank(-1) == 1);
    CHECK(s.rank(0) == 1);
    CHECK(s.rank(1) == 0);

    // lambda[1] + F for the circle: 4 in chain degree 1, 3 in chain degree 0.
    ChainComplex sum = direct_sum(shift(circle_lambda(), 1), circle());
    CHECK(sum.rank(internal_degree(Convention::Chain, 1)) == 4);
    CHECK(sum.rank(internal_degree(Convention::Chain, 0)) == 3);
    CHECK(validate_complex(sum));

    CHECK_THROWS_AS(direct_sum(lambda, circle()), ConventionMismatch);
}

TEST_CASE("shift keeps differentials unsigned") {
    ChainComplex x(Q, Convention::Cochain, {{0, 1}, {1, 1}}, {{0, Matrix::from_rows(Q, {{3}})}});
    CHECK(shift(x, 2).diff(-2) == Matrix::from_rows(Q, {{3}}));
}

TEST_CASE("graded map shapes are checked") {
    CHECK_THROWS_AS(GradedMap(circle_lambda(), circle(), 0, {{0, Matrix(Z, 2, 1)}}), ShapeMismatch);
}

TEST_CASE("convention change preserves validity and homology ranks") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        ChainComplex x = random_complex(Q, rng, {});
        ChainComplex y = x.with_convention(x.convention() == Convention::Chain ? Convention::Cochain : Convention::Chain);
        CHECK(validate_complex(y));
        CHECK(homology(x).betti_numbers() == homology(y).betti_numbers());
    }
}

TEST_CASE("direct sums add ranks and homology") {
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        ChainComplex a = random_complex(Q, rng, {4, 3, 12});
        ChainComplex b = random_complex(Q, rng, {4, 3, 12});
        if (a.convention() != b.convention()) b = b.with_convention(a.convention());
        ChainComplex s = direct_sum(a, b);
        CHECK(validate_complex(s));
        auto ha = homology(a), hb = homology(b), hs = homology(s);
        for (int n = s.lo(); n <= s.hi(); ++n) {
            CHECK(s.rank(n) == a.rank(n) + b.rank(n));
            CHECK(hs.betti(n) == ha.betti(n) + hb.betti(n));
        }
    }
}

TEST_CASE("random complexes are valid") {
    Rng rng(8);
    for (Ring r : {Q, Z, Ring::prime_field(2), Ring::prime_field(3)}) {
        for (int i = 0; i < 40; ++i) CHECK(validate_complex(random_complex(r, rng, {})));
    }
}
