#pragma once

#include "cateig/cone.hpp"

#include <map>
#include <optional>

namespace cateig {

enum class OracleMethod { Enumeration, LinearSystem };

/// Produced without touching decomposition or cone internals.
struct OracleReport {
    OracleMethod method = OracleMethod::Enumeration;
    std::map<int, std::size_t> ranks;  ///< Enumeration: betti numbers by internal degree
    bool solvable = false;             ///< LinearSystem
    std::optional<Homotopy> solution;  ///< LinearSystem, when solvable
};

/// Homology of an F_2 complex by listing every vector of every term.
/// Throws TooLarge when the total rank exceeds 12.
OracleReport brute_homology_f2(const ChainComplex& x);

/// Solves f - g = d Psi + Psi d for Psi as one linear system over the field.
/// Throws NotAField for Z.
OracleReport homotopy_system_solvable(const ChainComplex& x, const GradedMap& f, const GradedMap& g);

/// f = 0, g = id.
OracleReport null_homotopy_solvable(const ChainComplex& x);

}  // namespace cateig
