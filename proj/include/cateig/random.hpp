#pragma once

#include "cateig/complex.hpp"

#include <random>
#include <string>

namespace cateig {

using Rng = std::mt19937_64;

/// Independent generator for trial `trial` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct ComplexShape {
    int max_length = 6;           ///< number of consecutive degrees
    std::size_t max_rank = 4;
    std::size_t max_total = 24;
};

/// Random bounded complex; d_n is a random map vanishing on Im d_{n-1}.
/// Entries come from {-2..2} over Q and Z, and from all residues over F_p.
ChainComplex random_complex(Ring ring, Rng& rng, const ComplexShape& shape);

/// Matrix with dimensions in [1, max_rows] x [1, max_cols] and entries in [lo, hi].
Matrix random_int_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols, long lo, long hi);

enum class InstanceFamily { Canonical, Twisted, ExtraRank, DroppedColumn, NonInjective, BoundaryColumn, RandomCycles };

std::string to_string(InstanceFamily f);

/// A scalar lambda with a chain map alpha : lambda -> f.
struct EigenInstance {
    InstanceFamily family = InstanceFamily::Canonical;
    ChainComplex f;
    ChainComplex lambda;
    GradedMap alpha;
};

/// Field rings only. Families other than Canonical/Twisted are built to break
/// one hypothesis; when f gives them nothing to break they may still pass.
EigenInstance random_eigen_instance(const ChainComplex& f, Rng& rng);
EigenInstance random_eigen_instance(const ChainComplex& f, Rng& rng, InstanceFamily family);

}  // namespace cateig
