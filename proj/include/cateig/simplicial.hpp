#pragma once

#include "cateig/complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cateig {

/// Vertices are 0..labels.size()-1; faces of the facets are generated.
struct SimplicialComplexFile {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> facets;
    std::optional<Ring> ring;
};

struct SimplicialChain {
    ChainComplex complex;                                 ///< chain convention, C_k in degree k
    std::map<int, std::vector<std::string>> labels;       ///< chain degree -> basis labels
    std::map<int, std::vector<std::vector<std::size_t>>> simplices;
};

/// Listed facets keep their vertex order (and so their orientation); faces
/// that are only generated are stored with sorted vertices, in lexicographic
/// order after the listed simplices of the same dimension. The boundary of
/// (v_0..v_k) is sum (-1)^i (v_0..^v_i..v_k), with each face's sign adjusted
/// to the orientation it is stored with. Throws BadIndex.
SimplicialChain simplicial_to_chain(const SimplicialComplexFile& sc, Ring ring);

}  // namespace cateig
