#include "cateig/random.hpp"

#include "cateig/decomposition.hpp"
#include "cateig/errors.hpp"
#include "cateig/linalg.hpp"

#include <algorithm>

namespace cateig {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Scalar random_entry(Ring ring, Rng& rng) {
    if (ring.kind() == RingKind::PrimeField) {
        const long p = static_cast<long>(ring.characteristic());
        return Scalar(ring, uniform(rng, 0, p - 1));
    }
    return Scalar(ring, uniform(rng, -2, 2));
}

Matrix random_matrix(Ring ring, Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_entry(ring, rng);
    return m;
}

/// Random invertible square matrix over a field.
Matrix random_invertible(Ring ring, Rng& rng, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(ring, rng, n, n);
        if (rank(m) == n) return m;
    }
}

}  // namespace

ChainComplex random_complex(Ring ring, Rng& rng, const ComplexShape& shape) {
    const int length = static_cast<int>(uniform(rng, 1, shape.max_length));
    const int lo = static_cast<int>(uniform(rng, -3, 3));
    const Convention conv = uniform(rng, 0, 1) ? Convention::Chain : Convention::Cochain;

    std::map<int, std::size_t> ranks;
    std::size_t total = 0;
    for (int n = lo; n < lo + length; ++n) {
        std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(shape.max_rank)));
        r = std::min(r, shape.max_total - total);
        total += r;
        ranks[n] = r;
    }

    std::map<int, Matrix> diffs;
    Matrix prev(ring, ranks[lo], 0);  // d_{n-1} into X_n
    for (int n = lo; n + 1 < lo + length; ++n) {
        const std::size_t src = ranks[n], dst = ranks[n + 1];
        // Rows of d_n live in the left kernel of d_{n-1}.
        SubspaceBasis left = prev.cols() ? kernel_basis(prev.transpose()) : standard_basis(ring, src);
        Matrix d(ring, dst, src);
        if (left.size() > 0 && dst > 0 && uniform(rng, 0, 5) != 0) {
            d = random_matrix(ring, rng, dst, left.size()) * left.vectors.transpose();
        }
        if (src > 0 && dst > 0) diffs[n] = d;
        prev = d;
    }

    return ChainComplex(ring, conv, std::move(ranks), std::move(diffs));
}

Matrix random_int_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols, long lo, long hi) {
    const Ring z = Ring::integers();
    const auto rows = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_rows)));
    const auto cols = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_cols)));
    Matrix m(z, rows, cols);
    const bool sparse = uniform(rng, 0, 3) == 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Scalar(z, sparse && uniform(rng, 0, 2) ? 0 : uniform(rng, lo, hi));
    return m;
}

std::string to_string(InstanceFamily f) {
    switch (f) {
        case InstanceFamily::Canonical: return "canonical";
        case InstanceFamily::Twisted: return "twisted";
        case InstanceFamily::ExtraRank: return "extra-rank";
        case InstanceFamily::DroppedColumn: return "dropped-column";
        case InstanceFamily::NonInjective: return "non-injective";
        case InstanceFamily::BoundaryColumn: return "boundary-column";
        case InstanceFamily::RandomCycles: return "random-cycles";
    }
    return "?";
}

EigenInstance random_eigen_instance(const ChainComplex& f, Rng& rng) {
    const auto family = static_cast<InstanceFamily>(uniform(rng, 0, 6));
    return random_eigen_instance(f, rng, family);
}

EigenInstance random_eigen_instance(const ChainComplex& f, Rng& rng, InstanceFamily family) {
    const Ring ring = f.ring();
    if (!ring.is_field()) throw NotAField();
    HomologyResult h = homology(f);

    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> blocks;
    for (int n = f.lo(); n <= f.hi(); ++n) {
        const auto it = h.degrees.find(n);
        Matrix reps = it == h.degrees.end() ? Matrix(ring, f.rank(n), 0) : it->second.representatives.vectors;
        ranks[n] = reps.cols();
        blocks[n] = reps;
    }
    std::vector<int> degrees;
    for (int n = f.lo(); n <= f.hi(); ++n) degrees.push_back(n);
    auto pick = [&](auto pred) -> std::optional<int> {
        std::vector<int> ok;
        for (int n : degrees)
            if (pred(n)) ok.push_back(n);
        if (ok.empty()) return std::nullopt;
        return ok[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ok.size()) - 1))];
    };
    auto cycles = [&](int n) { return kernel_basis(f.diff(n)).vectors; };
    auto boundaries = [&](int n) {
        const Matrix d = f.diff(n - 1);
        return d.cols() ? image_basis(d).vectors : Matrix(ring, f.rank(n), 0);
    };
    // Random cycle: boundary-heavy when `only_boundary`.
    auto random_cycle = [&](int n, bool only_boundary) {
        const Matrix src = only_boundary ? boundaries(n) : cycles(n);
        return src * random_matrix(ring, rng, src.cols(), 1);
    };

    switch (family) {
        case InstanceFamily::Canonical:
            break;
        case InstanceFamily::Twisted:
            for (int n : degrees) {
                Matrix& a = blocks[n];
                if (a.cols() == 0) continue;
                a = a * random_invertible(ring, rng, a.cols());
                Matrix b = boundaries(n);
                if (b.cols()) a = a + b * random_matrix(ring, rng, b.cols(), a.cols());
            }
            break;
        case InstanceFamily::ExtraRank: {
            int n = pick([](int) { return true; }).value_or(f.lo());
            if (uniform(rng, 0, 4) == 0) n = f.hi() + 1;  // outside the support of f
            Matrix col = f.rank(n) ? random_cycle(n, false) : Matrix(ring, 0, 1);
            blocks[n] = blocks.count(n) ? hstack(blocks[n], col) : col;
            ranks[n] += 1;
            break;
        }
        case InstanceFamily::DroppedColumn: {
            if (auto n = pick([&](int k) { return ranks[k] > 0; })) {
                const std::size_t c = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ranks[*n]) - 1));
                std::vector<std::size_t> keep;
                for (std::size_t j = 0; j < ranks[*n]; ++j)
                    if (j != c) keep.push_back(j);
                blocks[*n] = blocks[*n].columns(keep);
                ranks[*n] -= 1;
            }
            break;
        }
        case InstanceFamily::NonInjective: {
            if (auto n = pick([&](int k) { return ranks[k] > 0; })) {
                Matrix& a = blocks[*n];
                const std::size_t c = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(a.cols()) - 1));
                // Column c becomes a combination of the others plus boundaries.
                Matrix combo(ring, a.rows(), 1);
                for (std::size_t j = 0; j < a.cols(); ++j)
                    if (j != c) combo = combo + random_entry(ring, rng) * a.column(j);
                Matrix b = boundaries(*n);
                if (b.cols()) combo = combo + b * random_matrix(ring, rng, b.cols(), 1);
                a.set_block(0, c, combo);
            }
            break;
        }
        case InstanceFamily::BoundaryColumn: {
            if (auto n = pick([&](int k) { return ranks[k] > 0 && boundaries(k).cols() > 0; })) {
                Matrix& a = blocks[*n];
                const std::size_t c = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(a.cols()) - 1));
                a.set_block(0, c, random_cycle(*n, true));
            } else if (auto m = pick([&](int k) { return ranks[k] > 0; })) {
                Matrix& a = blocks[*m];
                a.set_block(0, 0, Matrix(ring, a.rows(), 1));
            }
            break;
        }
        case InstanceFamily::RandomCycles:
            for (int n : degrees) {
                const Matrix z = cycles(n);
                const std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ranks[n]) + 1));
                ranks[n] = r;
                blocks[n] = z.cols() ? z * random_matrix(ring, rng, z.cols(), r) : Matrix(ring, f.rank(n), r);
            }
            break;
    }

    for (auto it = ranks.begin(); it != ranks.end();) {
        if (it->second == 0) {
            blocks.erase(it->first);
            it = ranks.erase(it);
        } else {
            ++it;
        }
    }
    ChainComplex lambda = scalar_object(ring, f.convention(), ranks);
    GradedMap alpha(lambda, f, 0, std::move(blocks));
    return {family, f, std::move(lambda), std::move(alpha)};
}

}  // namespace cateig
