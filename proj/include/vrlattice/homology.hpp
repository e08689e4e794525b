#pragma once

// Z/2 simplicial homology via boundary-matrix column reduction. Serves as
// the independent oracle for dismantling and Morse results. A brute-force
// second path (all-subsets clique list, dense elimination) cross-validates
// the primary path on small complexes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "vrlattice/flag_complex.hpp"

namespace vrl {

struct BettiVector {
    std::vector<std::int64_t> betti;  // unreduced, index = dimension
    bool reduced = false;

    std::int64_t at(int d) const {
        if (d < 0 || d >= static_cast<int>(betti.size())) return 0;
        return betti[static_cast<std::size_t>(d)];
    }
    bool operator==(const BettiVector& o) const = default;
};

namespace detail {

struct SimplexKeyHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Rank over Z/2 of the boundary matrix from d-simplices (columns) to
// (d-1)-simplices (rows), with the given row index map.
inline std::int64_t boundary_rank(const std::vector<Simplex>& rows,
                                  const std::vector<Simplex>& cols) {
    if (rows.empty() || cols.empty()) return 0;
    std::unordered_map<Simplex, int, SimplexKeyHash> row_index;
    row_index.reserve(rows.size() * 2);
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index.emplace(rows[i], static_cast<int>(i));

    const std::size_t words = (rows.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reduced;  // pivot -> column
    std::unordered_map<int, int> pivot_to_col;
    std::int64_t rank = 0;

    std::vector<std::uint64_t> col(words);
    for (const Simplex& s : cols) {
        std::fill(col.begin(), col.end(), 0);
        Simplex face(s.size() - 1);
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            std::size_t t = 0;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != skip) face[t++] = s[j];
            int ri = row_index.at(face);
            col[static_cast<std::size_t>(ri) >> 6] ^= (std::uint64_t{1} << (ri & 63));
        }
        // reduce against stored pivots (highest set bit as pivot)
        while (true) {
            int pivot = -1;
            for (std::size_t w = words; w-- > 0;)
                if (col[w]) {
                    pivot = static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(col[w])));
                    break;
                }
            if (pivot < 0) break;
            auto it = pivot_to_col.find(pivot);
            if (it == pivot_to_col.end()) {
                pivot_to_col.emplace(pivot, static_cast<int>(reduced.size()));
                reduced.push_back(col);
                ++rank;
                break;
            }
            const auto& other = reduced[static_cast<std::size_t>(it->second)];
            for (std::size_t w = 0; w < words; ++w) col[w] ^= other[w];
        }
    }
    return rank;
}

}  // namespace detail

// Unreduced Z/2 Betti numbers for dimensions 0..dmax. Enumerates the
// (dmax+1)-skeleton so that betti[dmax] is exact.
inline BettiVector betti_z2(const FlagComplex& k, int dmax, const Caps& caps = Caps{}) {
    if (dmax < 0) throw std::invalid_argument("betti_z2: dmax must be >= 0");
    SimplexLists lists = simplices_up_to(k, dmax + 1, caps);
    BettiVector out;
    out.betti.assign(static_cast<std::size_t>(dmax + 1), 0);
    std::vector<std::int64_t> rank(static_cast<std::size_t>(dmax + 2), 0);
    for (int d = 1; d <= dmax + 1; ++d)
        rank[static_cast<std::size_t>(d)] =
            detail::boundary_rank(lists.by_dim[static_cast<std::size_t>(d)],
                                  lists.by_dim[static_cast<std::size_t>(d + 1)]);
    for (int d = 0; d <= dmax; ++d)
        out.betti[static_cast<std::size_t>(d)] =
            lists.count(d) - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d + 1)];
    return out;
}

// Second, independent path for small complexes: works from points and scale
// only, enumerating cliques by an all-subsets scan.
inline BettiVector betti_z2_bruteforce(const FlagComplex& k, int dmax) {
    const std::size_t n = k.size();
    if (n > 22) throw std::invalid_argument("betti_z2_bruteforce: too many vertices");
    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(dmax + 3));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Simplex s;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) s.push_back(static_cast<int>(v));
        if (static_cast<int>(s.size()) > dmax + 2) continue;
        bool clique = true;
        for (std::size_t a = 0; a < s.size() && clique; ++a)
            for (std::size_t b = a + 1; b < s.size() && clique; ++b)
                if (l1_distance(k.vertices[static_cast<std::size_t>(s[a])],
                                k.vertices[static_cast<std::size_t>(s[b])]) > k.scale)
                    clique = false;
        if (clique) by_dim[s.size()].push_back(s);
    }
    for (auto& v : by_dim) std::sort(v.begin(), v.end());

    auto dense_rank = [](const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
        if (rows.empty() || cols.empty()) return std::int64_t{0};
        std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Simplex& s = cols[c];
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != skip) face.push_back(s[j]);
                auto it = std::lower_bound(rows.begin(), rows.end(), face);
                m[static_cast<std::size_t>(it - rows.begin())][c] = 1;
            }
        }
        std::int64_t rank = 0;
        std::size_t row = 0;
        for (std::size_t c = 0; c < cols.size() && row < rows.size(); ++c) {
            std::size_t p = row;
            while (p < rows.size() && m[p][c] == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(m[p], m[row]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != row && m[i][c])
                    for (std::size_t j = c; j < cols.size(); ++j) m[i][j] ^= m[row][j];
            ++row;
            ++rank;
        }
        return rank;
    };

    BettiVector out;
    out.betti.assign(static_cast<std::size_t>(dmax + 1), 0);
    for (int d = 0; d <= dmax; ++d) {
        std::int64_t fd = static_cast<std::int64_t>(by_dim[static_cast<std::size_t>(d + 1)].size());
        std::int64_t rd = d == 0 ? 0
                                 : dense_rank(by_dim[static_cast<std::size_t>(d)],
                                              by_dim[static_cast<std::size_t>(d + 1)]);
        std::int64_t rd1 = dense_rank(by_dim[static_cast<std::size_t>(d + 1)],
                                      by_dim[static_cast<std::size_t>(d + 2)]);
        out.betti[static_cast<std::size_t>(d)] = fd - rd - rd1;
    }
    return out;
}

struct WedgeVerdict {
    bool is_wedge = false;
    std::int64_t sphere_count = 0;
};

// True iff the unreduced Betti vector is (1,0,...,0,k,0,...) with the single
// nonzero reduced entry at expected_dim. Returns k.
inline WedgeVerdict check_wedge_signature(const BettiVector& b, int expected_dim) {
    WedgeVerdict v;
    if (b.at(0) != 1) return v;
    for (int d = 1; d < static_cast<int>(b.betti.size()); ++d)
        if (d != expected_dim && b.at(d) != 0) return v;
    v.sphere_count = b.at(expected_dim);
    v.is_wedge = v.sphere_count > 0 || expected_dim >= static_cast<int>(b.betti.size());
    return v;
}

// Prop 2.4 shadow: removing a dominated vertex leaves Betti numbers
// unchanged.
inline bool betti_preserved_by_step(const FlagComplex& k, int removed, int dominator,
                                    int dmax, const Caps& caps = Caps{}) {
    if (removed == dominator)
        throw std::invalid_argument("betti_preserved_by_step: identical vertices");
    Bitset nr = k.adj[static_cast<std::size_t>(removed)];
    nr.set(static_cast<std::size_t>(removed));
    Bitset nd = k.adj[static_cast<std::size_t>(dominator)];
    nd.set(static_cast<std::size_t>(dominator));
    if (!nr.subset_of(nd))
        throw std::invalid_argument("betti_preserved_by_step: step is not a domination");
    std::vector<int> keep;
    for (int v = 0; v < static_cast<int>(k.size()); ++v)
        if (v != removed) keep.push_back(v);
    return betti_z2(k, dmax, caps) == betti_z2(induced(k, keep), dmax, caps);
}

inline std::int64_t euler_characteristic(const SimplexLists& lists) {
    std::int64_t chi = 0;
    for (int d = 0; d <= lists.dmax; ++d) chi += (d % 2 == 0 ? 1 : -1) * lists.count(d);
    return chi;
}

}  // namespace vrl
