#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cateig/errors.hpp"
#include "cateig/oracle.hpp"
#include "cateig/random.hpp"
#include "cateig/suites.hpp"

using namespace cateig;

namespace {

const Ring F2 = Ring::prime_field(2);
const Ring Q = Ring::rationals();

ChainComplex two_term(Ring r, const Matrix& d) {
    return ChainComplex(r, Convention::Cochain, {{0, d.cols()}, {1, d.rows()}}, {{0, d}});
}

}  // namespace

TEST_CASE("enumeration on tiny complexes") {
    auto a = brute_homology_f2(two_term(F2, Matrix(F2, 1, 1)));
    CHECK(a.method == OracleMethod::Enumeration);
    CHECK(a.ranks == std::map<int, std::size_t>{{0, 1}, {1, 1}});
    auto b = brute_homology_f2(two_term(F2, Matrix::identity(F2, 1)));
    CHECK(b.ranks == std::map<int, std::size_t>{{0, 0}, {1, 0}});
    auto c = brute_homology_f2(two_term(F2, Matrix::from_rows(F2, {{1, 0}, {0, 0}})));
    CHECK(c.ranks == std::map<int, std::size_t>{{0, 1}, {1, 1}});
}

TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(brute_homology_f2(scalar_object(F2, Convention::Cochain, {{0, 7}, {1, 6}})), TooLarge);
    CHECK_THROWS_AS(brute_homology_f2(scalar_object(Q, Convention::Cochain, {{0, 1}})), RingMismatch);
}

TEST_CASE("linear system examples") {
    auto lone = null_homotopy_solvable(scalar_object(Q, Convention::Cochain, {{0, 1}}));
    CHECK(lone.method == OracleMethod::LinearSystem);
    CHECK_FALSE(lone.solvable);

    ChainComplex x = two_term(Q, Matrix::from_rows(Q, {{1, 2}, {3, 5}}));
    auto id = null_homotopy_solvable(x);
    REQUIRE(id.solvable);
    CHECK(verify_null_homotopy(x, *id.solution));

    GradedMap f(x, x, 0, {{0, Matrix::from_rows(Q, {{1, 2}, {0, 1}})}});
    auto same = homotopy_system_solvable(x, f, f);
    REQUIRE(same.solvable);
    for (auto& [n, b] : same.solution->blocks()) CHECK(b.is_zero());

    CHECK_THROWS_AS(null_homotopy_solvable(scalar_object(Ring::integers(), Convention::Cochain, {{0, 1}})), NotAField);
}

TEST_CASE("the circle cone over Q is solvable") {
    ChainComplex circle(Q, Convention::Chain, {{0, 3}, {-1, 3}},
                        {{-1, Matrix::from_rows(Q, {{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}})}});
    ChainComplex lambda = scalar_object(Q, Convention::Chain, {{0, 1}, {-1, 1}});
    GradedMap alpha(lambda, circle, 0,
                    {{0, Matrix::from_rows(Q, {{1}, {0}, {0}})}, {-1, Matrix::from_rows(Q, {{1}, {1}, {1}})}});
    ChainComplex cone = standard_cone(alpha);
    auto rep = null_homotopy_solvable(cone);
    REQUIRE(rep.solvable);
    CHECK(verify_null_homotopy(cone, *rep.solution));
}

TEST_CASE("homology agrees with enumeration") {
    SuiteResult r = run_oracle_homology_suite(17, 150);
    for (auto& f : r.failures) MESSAGE(f);
    CHECK(r.ok());
}

TEST_CASE("is_contractible agrees with the linear system") {
    for (Ring r : {F2, Ring::prime_field(3), Q}) {
        SuiteResult res = run_contractibility_suite(r, 19, 60);
        for (auto& f : res.failures) MESSAGE(f);
        CHECK(res.ok());
        CHECK(res.count("contractible") >= 30);
    }
}

TEST_CASE("suites are reproducible from the seed") {
    SuiteResult a = run_biconditional_suite(F2, 5, 30), b = run_biconditional_suite(F2, 5, 30);
    CHECK(a.counters == b.counters);
    CHECK(a.ok());
}
