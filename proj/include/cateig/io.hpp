#pragma once

#include "cateig/eigen_cert.hpp"
#include "cateig/simplicial.hpp"

#include "json.hpp"

#include <string>

namespace cateig {

using Json = nlohmann::json;

/// Parses text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

Json write_ring(const Ring& ring);
Ring read_ring(const Json& j);

/// Matrix as rows of scalar strings. `rows`/`cols` fix the shape of empty matrices.
Json write_matrix(const Matrix& m);
Matrix read_matrix(const Json& j, Ring ring, std::size_t rows, std::size_t cols);

// Degrees are written in the complex's own convention.

Json write_complex(const ChainComplex& x);
/// Throws ValidationError when d o d != 0.
ChainComplex read_complex(const Json& j);

Json write_graded_map(const GradedMap& f);
GradedMap read_graded_map(const Json& j, const ChainComplex& source, const ChainComplex& target);

Json write_homotopy(const Homotopy& h);
Homotopy read_homotopy(const Json& j, const ChainComplex& source, const ChainComplex& target);

Json write_cone(const ConeComplex& cone);
ConeComplex read_cone(const Json& j);

Json write_certificate(const EigenCertificate& cert);
EigenCertificate read_certificate(const Json& j);

Json write_homology(const HomologyResult& h);
Json write_decomposition(const Decomposition& dec, Convention convention);

Json write_simplicial(const SimplicialComplexFile& sc);
SimplicialComplexFile read_simplicial(const Json& j);
bool is_simplicial(const Json& j);

/// A ComplexFile, or a simplicial file turned into its chain complex
/// (over its own ring, else `fallback`).
ChainComplex read_any_complex(const Json& j, Ring fallback = Ring::integers());

}  // namespace cateig
