#include "cateig/io.hpp"

#include "cateig/errors.hpp"

#include <fstream>
#include <sstream>

namespace cateig {

namespace {

/// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

int get_int(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::size_t get_size(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) {
        throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

const Json& get_array(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
    return v;
}

Json write_convention(Convention c) { return c == Convention::Chain ? "chain" : "cochain"; }

Convention read_convention(const Json& j) {
    if (j == "chain") return Convention::Chain;
    if (j == "cochain") return Convention::Cochain;
    throw ParseError("convention must be \"chain\" or \"cochain\"");
}

Json write_factors(const std::vector<mpz_class>& f) {
    Json out = Json::array();
    for (auto& v : f) out.push_back(v.get_str());
    return out;
}

std::vector<mpz_class> read_factors(const Json& j) {
    std::vector<mpz_class> out;
    for (auto& v : j) {
        if (!v.is_string()) throw ParseError("factors must be strings");
        out.push_back(Scalar::parse(Ring::integers(), v.get<std::string>()).integer());
    }
    return out;
}

Json write_blocks(const std::map<int, Matrix>& blocks, Convention c) {
    std::map<int, Json> sorted;
    for (auto& [n, m] : blocks) sorted[user_degree(c, n)] = Json{{"degree", user_degree(c, n)}, {"entries", write_matrix(m)}};
    Json out = Json::array();
    for (auto& [k, v] : sorted) out.push_back(v);
    return out;
}

/// `shape(n)` gives rows/cols of the block at internal degree n.
template <class Shape>
std::map<int, Matrix> read_blocks(const Json& j, Ring ring, Convention c, Shape shape) {
    std::map<int, Matrix> out;
    for (auto& b : j) {
        const int n = internal_degree(c, get_int(b, "degree"));
        const auto [rows, cols] = shape(n);
        out[n] = read_matrix(field(b, "entries"), ring, rows, cols);
    }
    return out;
}

void check_header(const Json& j, const ChainComplex& x) {
    if (read_ring(field(j, "ring")) != x.ring()) throw ParseError("ring differs from the complex it acts on");
    if (read_convention(field(j, "convention")) != x.convention()) {
        throw ParseError("convention differs from the complex it acts on");
    }
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(e.what(), line, col);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json write_ring(const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return "Q";
        case RingKind::Integers: return "Z";
        case RingKind::PrimeField: return Json{{"Fp", ring.characteristic()}};
    }
    return nullptr;
}

Ring read_ring(const Json& j) {
    if (j == "Q") return Ring::rationals();
    if (j == "Z") return Ring::integers();
    if (j.is_object() && j.size() == 1 && j.contains("Fp") && j["Fp"].is_number_integer() && j["Fp"].get<long>() > 0) {
        try {
            return Ring::prime_field(j["Fp"].get<std::uint64_t>());
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("ring must be \"Q\", \"Z\" or {\"Fp\": p}");
}

Json write_matrix(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix read_matrix(const Json& j, Ring ring, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) {
        throw ParseError("expected " + std::to_string(rows) + " rows of " + std::to_string(cols) + " entries");
    }
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_string()) throw ParseError("scalars must be strings");
            m(i, c) = Scalar::parse(ring, j[i][c].get<std::string>());
        }
    }
    return m;
}

Json write_complex(const ChainComplex& x) {
    const Convention c = x.convention();
    std::map<int, Json> degrees, diffs;
    for (auto& [n, r] : x.ranks()) degrees[user_degree(c, n)] = Json{{"degree", user_degree(c, n)}, {"rank", r}};
    for (auto& [n, d] : x.diffs()) {
        diffs[user_degree(c, n)] = Json{{"from_degree", user_degree(c, n)}, {"entries", write_matrix(d)}};
    }
    Json out;
    out["ring"] = write_ring(x.ring());
    out["convention"] = write_convention(c);
    out["degrees"] = Json::array();
    for (auto& [k, v] : degrees) out["degrees"].push_back(v);
    out["diffs"] = Json::array();
    for (auto& [k, v] : diffs) out["diffs"].push_back(v);
    return out;
}

ChainComplex read_complex(const Json& j) {
    const Ring ring = read_ring(field(j, "ring"));
    const Convention c = read_convention(field(j, "convention"));
    std::map<int, std::size_t> ranks;
    for (auto& d : get_array(j, "degrees")) {
        const int n = internal_degree(c, get_int(d, "degree"));
        if (ranks.count(n)) throw ParseError("degree " + std::to_string(get_int(d, "degree")) + " listed twice");
        ranks[n] = get_size(d, "rank");
    }
    auto rank_of = [&](int n) {
        auto it = ranks.find(n);
        return it == ranks.end() ? std::size_t{0} : it->second;
    };
    std::map<int, Matrix> diffs;
    if (j.contains("diffs")) {
        for (auto& d : get_array(j, "diffs")) {
            const int n = internal_degree(c, get_int(d, "from_degree"));
            diffs[n] = read_matrix(field(d, "entries"), ring, rank_of(n + 1), rank_of(n));
        }
    }
    ChainComplex x(ring, c, std::move(ranks), std::move(diffs));
    if (auto rep = validate_complex(x); !rep) {
        throw ValidationError("d o d != 0 at degree " + std::to_string(user_degree(c, rep.degree)) + ", entry (" +
                              std::to_string(rep.row) + ", " + std::to_string(rep.col) + ")");
    }
    return x;
}

Json write_graded_map(const GradedMap& f) {
    const Convention c = f.source().convention();
    Json out;
    out["ring"] = write_ring(f.source().ring());
    out["convention"] = write_convention(c);
    out["degree_shift"] = c == Convention::Chain ? -f.shift() : f.shift();
    out["blocks"] = write_blocks(f.blocks(), c);
    return out;
}

GradedMap read_graded_map(const Json& j, const ChainComplex& source, const ChainComplex& target) {
    check_header(j, source);
    const Convention c = source.convention();
    const int user_shift = j.contains("degree_shift") ? get_int(j, "degree_shift") : 0;
    const int shift = c == Convention::Chain ? -user_shift : user_shift;
    auto blocks = read_blocks(get_array(j, "blocks"), source.ring(), c,
                              [&](int n) { return std::pair{target.rank(n + shift), source.rank(n)}; });
    return GradedMap(source, target, shift, std::move(blocks));
}

Json write_homotopy(const Homotopy& h) {
    Json out;
    out["ring"] = write_ring(h.source().ring());
    out["convention"] = write_convention(h.source().convention());
    out["blocks"] = write_blocks(h.blocks(), h.source().convention());
    return out;
}

Homotopy read_homotopy(const Json& j, const ChainComplex& source, const ChainComplex& target) {
    check_header(j, source);
    auto blocks = read_blocks(get_array(j, "blocks"), source.ring(), source.convention(),
                              [&](int n) { return std::pair{target.rank(n - 1), source.rank(n)}; });
    return Homotopy(source, target, std::move(blocks));
}

Json write_cone(const ConeComplex& cone) {
    const Convention c = cone.underlying.convention();
    Json out;
    out["complex"] = write_complex(cone.underlying);
    out["basis"] = write_blocks(cone.basis, c);
    std::map<int, Json> layout;
    for (auto& [n, l] : cone.layout) {
        layout[user_degree(c, n)] = Json{{"degree", user_degree(c, n)}, {"lambda", l.lambda}, {"g", l.g}, {"im", l.im}};
    }
    out["layout"] = Json::array();
    for (auto& [k, v] : layout) out["layout"].push_back(v);
    return out;
}

ConeComplex read_cone(const Json& j) {
    ConeComplex cone;
    cone.underlying = read_complex(field(j, "complex"));
    const Convention c = cone.underlying.convention();
    for (auto& l : get_array(j, "layout")) {
        const int n = internal_degree(c, get_int(l, "degree"));
        BlockLayout b{get_size(l, "lambda"), get_size(l, "g"), get_size(l, "im")};
        if (b.total() != cone.underlying.rank(n)) {
            throw LayoutMismatch("layout at degree " + std::to_string(get_int(l, "degree")) + " does not add up to the rank");
        }
        cone.layout[n] = b;
    }
    cone.basis = read_blocks(get_array(j, "basis"), cone.underlying.ring(), c, [&](int n) {
        return std::pair{cone.underlying.rank(n), cone.underlying.rank(n)};
    });
    return cone;
}

Json write_certificate(const EigenCertificate& cert) {
    const Convention c = cert.convention;
    auto degree_list = [&](const std::map<int, std::size_t>& m, const char* key) {
        std::map<int, Json> sorted;
        for (auto& [n, r] : m) sorted[user_degree(c, n)] = Json{{"degree", user_degree(c, n)}, {key, r}};
        Json out = Json::array();
        for (auto& [k, v] : sorted) out.push_back(v);
        return out;
    };
    Json out;
    out["verdict"] = to_string(cert.verdict);
    out["ring"] = write_ring(cert.ring);
    out["convention"] = write_convention(c);
    out["eigenobject"] = cert.eigenobject;
    out["lambda_ranks"] = degree_list(cert.lambda_ranks, "rank");

    std::map<int, Json> hom;
    for (auto& [n, r] : cert.homology_ranks) {
        auto t = cert.torsion.find(n);
        hom[user_degree(c, n)] = Json{{"degree", user_degree(c, n)},
                                      {"rank", r},
                                      {"torsion", write_factors(t == cert.torsion.end() ? std::vector<mpz_class>{} : t->second)}};
    }
    out["homology"] = Json::array();
    for (auto& [k, v] : hom) out["homology"].push_back(v);

    std::map<int, Json> inj;
    for (auto& [n, b] : cert.alpha_injective) inj[user_degree(c, n)] = Json{{"degree", user_degree(c, n)}, {"injective", b}};
    out["alpha_injective"] = Json::array();
    for (auto& [k, v] : inj) out["alpha_injective"].push_back(v);

    out["cone"] = cert.cone ? write_cone(*cert.cone) : Json(nullptr);
    out["witness"] = cert.witness ? write_homotopy(*cert.witness) : Json(nullptr);
    if (cert.failure) {
        out["failure_reason"] = Json{{"kind", to_string(cert.failure->kind)},
                                     {"degree", cert.failure->degree},
                                     {"factors", write_factors(cert.failure->factors)}};
    } else {
        out["failure_reason"] = nullptr;
    }
    return out;
}

EigenCertificate read_certificate(const Json& j) {
    EigenCertificate cert;
    const Json& verdict = field(j, "verdict");
    if (verdict == "Eigenvalue") {
        cert.verdict = Verdict::Eigenvalue;
    } else if (verdict == "NotEigenvalue") {
        cert.verdict = Verdict::NotEigenvalue;
    } else {
        throw ParseError("verdict must be \"Eigenvalue\" or \"NotEigenvalue\"");
    }
    cert.ring = read_ring(field(j, "ring"));
    cert.convention = read_convention(field(j, "convention"));
    const Convention c = cert.convention;
    if (j.contains("eigenobject")) cert.eigenobject = field(j, "eigenobject").get<std::string>();
    for (auto& d : get_array(j, "lambda_ranks")) cert.lambda_ranks[internal_degree(c, get_int(d, "degree"))] = get_size(d, "rank");
    for (auto& d : get_array(j, "homology")) {
        const int n = internal_degree(c, get_int(d, "degree"));
        cert.homology_ranks[n] = get_size(d, "rank");
        if (d.contains("torsion")) {
            auto t = read_factors(get_array(d, "torsion"));
            if (!t.empty()) cert.torsion[n] = std::move(t);
        }
    }
    for (auto& d : get_array(j, "alpha_injective")) {
        const Json& b = field(d, "injective");
        if (!b.is_boolean()) throw ParseError("\"injective\" must be a boolean");
        cert.alpha_injective[internal_degree(c, get_int(d, "degree"))] = b.get<bool>();
    }
    if (j.contains("cone") && !j["cone"].is_null()) cert.cone = read_cone(j["cone"]);
    if (j.contains("witness") && !j["witness"].is_null()) {
        if (!cert.cone) throw ParseError("witness given without its cone");
        cert.witness = read_homotopy(j["witness"], cert.cone->underlying, cert.cone->underlying);
    }
    if (j.contains("failure_reason") && !j["failure_reason"].is_null()) {
        const Json& f = j["failure_reason"];
        FailureReason r;
        const std::string kind = field(f, "kind").get<std::string>();
        bool known = false;
        for (auto k : {FailureKind::Torsion, FailureKind::RankMismatch, FailureKind::AlphaNotInjective,
                       FailureKind::AlphaNotIntoG, FailureKind::NotSaturated}) {
            if (to_string(k) == kind) {
                r.kind = k;
                known = true;
            }
        }
        if (!known) throw ParseError("unknown failure kind \"" + kind + "\"");
        r.degree = get_int(f, "degree");
        if (f.contains("factors")) r.factors = read_factors(get_array(f, "factors"));
        cert.failure = std::move(r);
    }
    return cert;
}

Json write_homology(const HomologyResult& h) {
    const Convention c = h.convention;
    std::map<int, Json> sorted;
    for (auto& [n, d] : h.degrees) {
        sorted[user_degree(c, n)] = Json{{"degree", user_degree(c, n)},
                                         {"rank", d.betti},
                                         {"torsion", write_factors(d.torsion)},
                                         {"representatives", write_matrix(d.representatives.vectors)}};
    }
    Json out;
    out["ring"] = write_ring(h.ring);
    out["convention"] = write_convention(c);
    out["degrees"] = Json::array();
    for (auto& [k, v] : sorted) out["degrees"].push_back(v);
    return out;
}

Json write_decomposition(const Decomposition& dec, Convention c) {
    std::map<int, Json> sorted;
    for (auto& [n, d] : dec.degrees) {
        sorted[user_degree(c, n)] = Json{{"degree", user_degree(c, n)},
                                         {"g", write_matrix(d.g.vectors)},
                                         {"im", write_matrix(d.im_prev.vectors)},
                                         {"delta", write_matrix(d.delta)},
                                         {"ker_delta", write_matrix(d.ker_delta.vectors)},
                                         {"k", write_matrix(d.k.vectors)}};
    }
    Json out;
    out["ring"] = write_ring(dec.ring);
    out["convention"] = write_convention(c);
    out["degrees"] = Json::array();
    for (auto& [k, v] : sorted) out["degrees"].push_back(v);
    return out;
}

Json write_simplicial(const SimplicialComplexFile& sc) {
    Json out;
    out["vertices"] = sc.labels;
    out["facets"] = sc.facets;
    if (sc.ring) out["ring"] = write_ring(*sc.ring);
    return out;
}

bool is_simplicial(const Json& j) { return j.is_object() && j.contains("facets"); }

SimplicialComplexFile read_simplicial(const Json& j) {
    SimplicialComplexFile sc;
    const Json& v = field(j, "vertices");
    if (v.is_number_unsigned()) {
        for (std::size_t i = 0; i < v.get<std::size_t>(); ++i) sc.labels.push_back(std::to_string(i));
    } else if (v.is_array()) {
        for (auto& l : v) {
            if (!l.is_string()) throw ParseError("vertex labels must be strings");
            sc.labels.push_back(l.get<std::string>());
        }
    } else {
        throw ParseError("\"vertices\" must be a count or a list of labels");
    }
    for (auto& f : get_array(j, "facets")) {
        if (!f.is_array()) throw ParseError("each facet must be a list of vertex indices");
        std::vector<std::size_t> facet;
        for (auto& i : f) {
            if (!i.is_number_integer()) throw ParseError("vertex indices must be integers");
            if (i.get<long>() < 0) throw BadIndex("negative vertex index");
            facet.push_back(i.get<std::size_t>());
        }
        sc.facets.push_back(std::move(facet));
    }
    if (j.contains("ring")) sc.ring = read_ring(j["ring"]);
    return sc;
}

ChainComplex read_any_complex(const Json& j, Ring fallback) {
    if (!is_simplicial(j)) return read_complex(j);
    SimplicialComplexFile sc = read_simplicial(j);
    return simplicial_to_chain(sc, sc.ring.value_or(fallback)).complex;
}

}  // namespace cateig
