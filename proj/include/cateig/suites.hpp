#pragma once

#include "cateig/ring.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cateig {

/// Outcome of one randomized suite. `counters` holds named tallies
/// (instance families, verdicts, block-analysis checks).
struct SuiteResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t passed = 0;
    double seconds = 0.0;
    std::map<std::string, std::size_t> counters;
    std::vector<std::string> failures;  ///< first few, for diagnostics

    bool ok() const { return passed == trials; }
    std::size_t count(const std::string& key) const;
};

/// certify_homology_eigenvalue on random complexes; the witness must verify
/// and its blocks must satisfy the block equations and conclusions.
SuiteResult run_forward_suite(const std::vector<Ring>& rings, std::uint64_t seed, std::size_t trials,
                              int max_length = 6, std::size_t max_rank = 4);

/// decide_eigenvalue against the linear-system oracle on the cone. For every
/// NotEigenvalue verdict the cone must be non-contractible with nonzero
/// homology (counted separately); every null-homotopy is block-analysed.
SuiteResult run_biconditional_suite(Ring ring, std::uint64_t seed, std::size_t trials, std::size_t max_dim = 8);

/// homology against brute_homology_f2.
SuiteResult run_oracle_homology_suite(std::uint64_t seed, std::size_t trials, std::size_t max_dim = 12);

/// Smith normal form contract on random integer matrices.
SuiteResult run_snf_suite(std::uint64_t seed, std::size_t trials, std::size_t max_size = 8, long bound = 9);

/// is_contractible against the linear-system oracle on random field complexes.
SuiteResult run_contractibility_suite(Ring ring, std::uint64_t seed, std::size_t trials, std::size_t max_dim = 8);

}  // namespace cateig
