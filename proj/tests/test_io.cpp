#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cateig/errors.hpp"
#include "cateig/io.hpp"
#include "cateig/random.hpp"

#include <fstream>
#include <sstream>

using namespace cateig;

namespace {

std::string data(const std::string& name) { return std::string(CATEIG_TEST_DATA) + "/" + name; }

const Ring Z = Ring::integers();

}  // namespace

TEST_CASE("circle fixture") {
    ChainComplex x = read_complex(read_json_file(data("s1.json")));
    CHECK(x.convention() == Convention::Chain);
    CHECK(x.ring() == Z);
    CHECK(x.rank(0) == 3);
    CHECK(x.rank(-1) == 3);
    CHECK(x.diff(-1) == Matrix::from_rows(Z, {{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}}));
}

TEST_CASE("triangle boundary from facets") {
    SimplicialComplexFile sc = read_simplicial(read_json_file(data("triangle.json")));
    SimplicialChain c = simplicial_to_chain(sc, Z);
    CHECK(c.complex.diff(-1) == Matrix::from_rows(Z, {{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}}));
    CHECK(c.labels.at(1) == std::vector<std::string>{"[AB]", "[BC]", "[CA]"});
    CHECK(c.labels.at(0) == std::vector<std::string>{"[A]", "[B]", "[C]"});
    HomologyResult h = homology(c.complex);
    CHECK(h.betti(0) == 1);
    CHECK(h.betti(-1) == 1);
    CHECK(c.complex == read_complex(read_json_file(data("s1.json"))));
}

TEST_CASE("simplicial examples") {
    SimplicialComplexFile point{{"P"}, {{0}}, std::nullopt};
    HomologyResult h = homology(simplicial_to_chain(point, Z).complex);
    CHECK(h.betti(0) == 1);
    CHECK(h.betti_numbers().size() == 1);

    SimplicialChain full = simplicial_to_chain(read_simplicial(read_json_file(data("simplex2.json"))), Z);
    CHECK(validate_complex(full.complex));
    HomologyResult hf = homology(full.complex);
    CHECK(hf.betti(0) == 1);
    CHECK(hf.betti(-1) == 0);
    CHECK(hf.betti(-2) == 0);
    CHECK_FALSE(hf.has_torsion());

    CHECK_THROWS_AS(simplicial_to_chain({{"A", "B"}, {{0, 2}}, std::nullopt}, Z), BadIndex);
    CHECK_THROWS_AS(simplicial_to_chain({{"A", "B"}, {{}}, std::nullopt}, Z), BadIndex);
    CHECK_THROWS_AS(simplicial_to_chain({{"A", "B"}, {{1, 1}}, std::nullopt}, Z), BadIndex);
}

TEST_CASE("random simplicial complexes satisfy dd = 0") {
    Rng rng(9);
    for (int i = 0; i < 40; ++i) {
        SimplicialComplexFile sc;
        const std::size_t nv = 1 + rng() % 6;
        for (std::size_t v = 0; v < nv; ++v) sc.labels.push_back(std::to_string(v));
        for (int f = 0; f < 3; ++f) {
            std::vector<std::size_t> facet;
            for (std::size_t v = 0; v < nv; ++v)
                if (rng() % 2) facet.push_back(v);
            if (!facet.empty()) sc.facets.push_back(facet);
        }
        CHECK(validate_complex(simplicial_to_chain(sc, Z).complex));
    }
}

TEST_CASE("canonical files round trip byte for byte") {
    Rng rng(10);
    for (Ring r : {Z, Ring::rationals(), Ring::prime_field(3)}) {
        for (int i = 0; i < 20; ++i) {
            ChainComplex x = random_complex(r, rng, {});
            const std::string text = dump_json(write_complex(x));
            ChainComplex y = read_complex(parse_json(text));
            CHECK(y == x);
            CHECK(dump_json(write_complex(y)) == text);
        }
    }
}

TEST_CASE("certificates, cones and homotopies round trip") {
    ChainComplex x = read_complex(read_json_file(data("s1.json")));
    EigenCertificate cert = certify_homology_eigenvalue(x);
    const std::string text = dump_json(write_certificate(cert));
    EigenCertificate back = read_certificate(parse_json(text));
    CHECK(dump_json(write_certificate(back)) == text);
    CHECK(verify_certificate(back));
    CHECK(back.witness->blocks() == cert.witness->blocks());

    ChainComplex lambda = read_complex(read_json_file(data("s1_lambda.json")));
    GradedMap alpha = read_graded_map(read_json_file(data("s1_alpha.json")), lambda, x);
    CHECK(validate_chain_map(alpha));
    const std::string mtext = dump_json(write_graded_map(alpha));
    CHECK(dump_json(write_graded_map(read_graded_map(parse_json(mtext), lambda, x))) == mtext);

    ConeComplex cone = mapping_cone(alpha);
    ConeComplex cone2 = read_cone(parse_json(dump_json(write_cone(cone))));
    CHECK(cone2.underlying == cone.underlying);
    CHECK(cone2.layout == cone.layout);
    CHECK(cone2.basis == cone.basis);

    Homotopy psi = read_homotopy(read_json_file(data("s1_psi.json")), cone.underlying, cone.underlying);
    CHECK(verify_null_homotopy(cone.underlying, psi));
}

TEST_CASE("failed certificate keeps its reason") {
    ChainComplex x = read_complex(read_json_file(data("torsion.json")));
    EigenCertificate cert = certify_homology_eigenvalue(x);
    EigenCertificate back = read_certificate(parse_json(dump_json(write_certificate(cert))));
    REQUIRE(back.failure);
    CHECK(*back.failure == *cert.failure);
    CHECK(back.torsion == cert.torsion);
}

TEST_CASE("scalars are strings") {
    Json j = write_complex(read_complex(read_json_file(data("s1.json"))));
    CHECK(j["diffs"][0]["entries"][0][0].is_string());
    CHECK(write_ring(Ring::prime_field(5)) == Json{{"Fp", 5}});
    CHECK(read_ring(Json{{"Fp", 7}}) == Ring::prime_field(7));
    CHECK_THROWS_AS(read_ring(Json{{"Fp", 8}}), ParseError);
}

TEST_CASE("errors carry positions and degrees") {
    try {
        read_json_file(data("broken.json"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 6);
        CHECK(e.column() > 0);
    }
    try {
        read_complex(read_json_file(data("not_complex.json")));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("degree 0") != std::string::npos);
    }
    CHECK_THROWS_AS(read_complex(parse_json(R"({"ring": "Z", "convention": "chain", "degrees": [{"degree": 0, "rank": 1}],
        "diffs": [{"from_degree": 0, "entries": [[1]]}]})")),
                    ParseError);
    CHECK_THROWS_AS(read_complex(parse_json(R"({"ring": "Z", "degrees": []})")), ParseError);
}

TEST_CASE("adapted basis fixture gives the same cone in plain coordinates") {
    ChainComplex x = read_complex(read_json_file(data("s1_adapted.json")));
    ChainComplex lambda = read_complex(read_json_file(data("s1_lambda.json")));
    GradedMap alpha = read_graded_map(read_json_file(data("s1_alpha.json")), lambda, x);
    REQUIRE(validate_chain_map(alpha));
    ChainComplex cone = standard_cone(alpha);
    CHECK(cone.diff(-1) == Matrix::from_rows(Z, {{1, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}}));
    CHECK(cone.diff(-2) == Matrix::from_rows(Z, {{0}, {1}, {1}, {1}}));
    CHECK(decide_eigenvalue(x, lambda, alpha).verdict == Verdict::Eigenvalue);
}
