#include "cateig/simplicial.hpp"

#include "cateig/errors.hpp"

#include <algorithm>
#include <set>

namespace cateig {

namespace {

using Simplex = std::vector<std::size_t>;

/// +1 or -1: parity of the permutation taking `a` to `b` (same vertex set).
int relative_sign(const Simplex& a, const Simplex& b) {
    Simplex pos(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) pos[i] = static_cast<std::size_t>(std::find(b.begin(), b.end(), a[i]) - b.begin());
    int sign = 1;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j]) sign = -sign;
    return sign;
}

Simplex sorted(Simplex s) {
    std::sort(s.begin(), s.end());
    return s;
}

std::string label_of(const Simplex& s, const std::vector<std::string>& names) {
    const bool short_names = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i && !short_names) out += ",";
        out += names[s[i]];
    }
    return out + "]";
}

}  // namespace

SimplicialChain simplicial_to_chain(const SimplicialComplexFile& sc, Ring ring) {
    const std::size_t nv = sc.labels.size();
    std::map<int, std::vector<Simplex>> cells;
    std::map<int, std::map<Simplex, std::size_t>> index;  // sorted vertex set -> position

    auto add = [&](const Simplex& s) {
        const int k = static_cast<int>(s.size()) - 1;
        const Simplex key = sorted(s);
        if (index[k].count(key)) return;
        index[k][key] = cells[k].size();
        cells[k].push_back(s);
    };

    for (std::size_t v = 0; v < nv; ++v) add({v});
    for (const Simplex& f : sc.facets) {
        if (f.empty()) throw BadIndex("empty facet");
        for (std::size_t v : f)
            if (v >= nv) throw BadIndex("vertex index " + std::to_string(v) + " out of range (" + std::to_string(nv) + " vertices)");
        if (std::set<std::size_t>(f.begin(), f.end()).size() != f.size()) throw BadIndex("facet repeats a vertex");
        add(f);
    }

    // Generated faces of every dimension, sorted, after the listed ones.
    std::set<Simplex> generated;
    for (const Simplex& f : sc.facets) {
        const Simplex s = sorted(f);
        const std::size_t n = s.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1u) face.push_back(s[i]);
            generated.insert(face);
        }
    }
    std::map<int, std::vector<Simplex>> by_dim;
    for (const Simplex& s : generated) by_dim[static_cast<int>(s.size()) - 1].push_back(s);
    for (auto& [k, list] : by_dim)
        for (const Simplex& s : list) add(s);

    SimplicialChain out;
    std::map<int, std::size_t> ranks;
    std::map<int, Matrix> diffs;
    for (auto& [k, list] : cells) {
        ranks[internal_degree(Convention::Chain, k)] = list.size();
        for (const Simplex& s : list) out.labels[k].push_back(label_of(s, sc.labels));
        out.simplices[k] = list;
        if (k == 0) continue;
        Matrix d(ring, cells[k - 1].size(), list.size());
        for (std::size_t j = 0; j < list.size(); ++j) {
            const Simplex& s = list[j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(i));
                const std::size_t row = index[k - 1].at(sorted(face));
                const int sign = (i % 2 ? -1 : 1) * relative_sign(face, cells[k - 1][row]);
                d(row, j) += Scalar(ring, static_cast<long>(sign));
            }
        }
        diffs[internal_degree(Convention::Chain, k)] = std::move(d);
    }
    out.complex = ChainComplex(ring, Convention::Chain, std::move(ranks), std::move(diffs));
    return out;
}

}  // namespace cateig
