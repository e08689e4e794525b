#pragma once

// Flag (clique) complexes stored as their 1-skeleton. Simplices are never
// materialized globally; queries and enumeration work off the adjacency
// bitsets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vrlattice/lattice.hpp"

namespace vrl {

using Simplex = std::vector<int>;  // strictly increasing vertex indices

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return n_; }

    // this subseteq other
    bool subset_of(const Bitset& other) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~other.w_[k]) return false;
        return true;
    }

    Bitset operator&(const Bitset& other) const {
        Bitset out(n_);
        for (std::size_t k = 0; k < w_.size(); ++k) out.w_[k] = w_[k] & other.w_[k];
        return out;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    std::vector<std::uint64_t>& words() { return w_; }
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct FlagComplex {
    std::vector<Point> vertices;  // anti-lex ascending
    int scale = 0;
    std::string provenance = "external";  // grid | gamma | induced | external
    std::vector<Bitset> adj;              // symmetric, irreflexive

    std::size_t size() const { return vertices.size(); }
    int dim_ambient() const { return vertices.empty() ? 0 : static_cast<int>(vertices[0].size()); }

    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }

    int index_of(const Point& p) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), p, antilex_less);
        if (it == vertices.end() || *it != p) return -1;
        return static_cast<int>(it - vertices.begin());
    }

    bool is_clique(const Simplex& s) const {
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (!adjacent(s[a], s[b])) return false;
        return true;
    }

    bool is_maximal_clique(const Simplex& s) const {
        if (!is_clique(s)) return false;
        for (int v = 0; v < static_cast<int>(size()); ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            bool all = true;
            for (int u : s)
                if (!adjacent(u, v)) { all = false; break; }
            if (all) return false;
        }
        return true;
    }
};

inline FlagComplex build_complex(std::vector<Point> points, int r,
                                 const std::string& provenance = "external",
                                 const Caps& caps = Caps{}) {
    if (static_cast<std::int64_t>(points.size()) > caps.max_vertices)
        throw cap_exceeded("build_complex: vertex count " + std::to_string(points.size()) +
                           " exceeds cap " + std::to_string(caps.max_vertices));
    if (r < 0) throw std::invalid_argument("build_complex: negative scale");
    std::sort(points.begin(), points.end(), antilex_less);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i] == points[i + 1])
            throw std::invalid_argument("build_complex: duplicate point");
        check_same_dim(points[i], points[i + 1]);
    }
    FlagComplex k;
    k.vertices = std::move(points);
    k.scale = r;
    k.provenance = provenance;
    k.adj.assign(k.size(), Bitset(k.size()));
    for (std::size_t u = 0; u < k.size(); ++u)
        for (std::size_t v = u + 1; v < k.size(); ++v)
            if (l1_distance(k.vertices[u], k.vertices[v]) <= r) {
                k.adj[u].set(v);
                k.adj[v].set(u);
            }
    return k;
}

inline std::int64_t edge_count(const FlagComplex& k) {
    std::int64_t e = 0;
    for (const auto& row : k.adj) e += static_cast<std::int64_t>(row.count());
    return e / 2;
}

// Rechecks the stored adjacency against the distance predicate at the
// stored scale. Used by the JSON loader and invariant tests.
inline bool adjacency_consistent(const FlagComplex& k) {
    for (std::size_t u = 0; u < k.size(); ++u) {
        if (k.adj[u].test(u)) return false;
        for (std::size_t v = 0; v < k.size(); ++v) {
            bool want = u != v && l1_distance(k.vertices[u], k.vertices[v]) <= k.scale;
            if (k.adj[u].test(v) != want) return false;
            if (k.adj[u].test(v) != k.adj[v].test(u)) return false;
        }
    }
    return true;
}

inline std::vector<int> closed_neighborhood(const FlagComplex& k, int v) {
    if (v < 0 || v >= static_cast<int>(k.size()))
        throw std::invalid_argument("closed_neighborhood: unknown vertex");
    std::vector<int> out;
    for (int u = 0; u < static_cast<int>(k.size()); ++u)
        if (u == v || k.adjacent(v, u)) out.push_back(u);
    return out;
}

inline FlagComplex induced(const FlagComplex& k, const std::vector<int>& keep) {
    FlagComplex out;
    out.scale = k.scale;
    out.provenance = "induced";
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= static_cast<int>(k.size()))
            throw std::invalid_argument("induced: vertex out of range");
        out.vertices.push_back(k.vertices[static_cast<std::size_t>(v)]);
    }
    out.adj.assign(out.size(), Bitset(out.size()));
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = a + 1; b < sorted.size(); ++b)
            if (k.adjacent(sorted[a], sorted[b])) {
                out.adj[a].set(b);
                out.adj[b].set(a);
            }
    return out;
}

// Link of a vertex in a flag complex: the induced subcomplex on its open
// neighborhood.
inline FlagComplex link(const FlagComplex& k, int v) {
    if (v < 0 || v >= static_cast<int>(k.size()))
        throw std::invalid_argument("link: unknown vertex");
    std::vector<int> nbrs;
    for (int u = 0; u < static_cast<int>(k.size()); ++u)
        if (u != v && k.adjacent(v, u)) nbrs.push_back(u);
    return induced(k, nbrs);
}

// All cliques of size <= dmax+1, grouped by dimension, each dimension's list
// in lexicographic order of vertex indices. result[d+1] holds the
// d-simplices; result[0] = { empty simplex }.
struct SimplexLists {
    int dmax = -1;
    std::vector<std::vector<Simplex>> by_dim;  // index d+1 -> d-simplices

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& v : by_dim) t += static_cast<std::int64_t>(v.size());
        return t;
    }
    std::int64_t count(int d) const {
        std::size_t i = static_cast<std::size_t>(d + 1);
        return i < by_dim.size() ? static_cast<std::int64_t>(by_dim[i].size()) : 0;
    }
};

inline SimplexLists simplices_up_to(const FlagComplex& k, int dmax,
                                    const Caps& caps = Caps{}) {
    if (dmax < -1) throw std::invalid_argument("simplices_up_to: dmax < -1");
    SimplexLists out;
    out.dmax = dmax;
    out.by_dim.assign(static_cast<std::size_t>(dmax + 2), {});
    out.by_dim[0].push_back({});  // the empty simplex
    if (dmax < 0) return out;
    std::int64_t emitted = 1;
    Simplex cur;
    std::function<void(int, const Bitset&)> grow = [&](int start, const Bitset& cand) {
        for (int v = start; v < static_cast<int>(k.size()); ++v) {
            if (!cur.empty() && !cand.test(static_cast<std::size_t>(v))) continue;
            cur.push_back(v);
            out.by_dim[cur.size()].push_back(cur);
            if (++emitted > caps.max_simplices)
                throw cap_exceeded("simplices_up_to: more than " +
                                   std::to_string(caps.max_simplices) +
                                   " simplices (partial count at abort)");
            if (static_cast<int>(cur.size()) <= dmax) {
                Bitset next = cur.size() == 1 ? k.adj[static_cast<std::size_t>(v)]
                                              : (cand & k.adj[static_cast<std::size_t>(v)]);
                grow(v + 1, next);
            }
            cur.pop_back();
        }
    };
    grow(0, Bitset(k.size()));
    return out;
}

// Bron-Kerbosch with pivoting; output sorted (size, lexicographic) for
// deterministic reports.
inline std::vector<Simplex> maximal_simplices(const FlagComplex& k,
                                              std::int64_t max_out = 10000000) {
    std::vector<Simplex> out;
    if (k.size() == 0) return out;
    Bitset all(k.size());
    for (std::size_t v = 0; v < k.size(); ++v) all.set(v);
    Simplex cur;
    std::function<void(Bitset, Bitset)> bk = [&](Bitset p, Bitset x) {
        if (p.count() == 0 && x.count() == 0) {
            out.push_back(cur);
            std::sort(out.back().begin(), out.back().end());
            if (static_cast<std::int64_t>(out.size()) > max_out)
                throw cap_exceeded("maximal_simplices: output cap exceeded");
            return;
        }
        // pivot: vertex of P union X with most neighbors in P
        int pivot = -1;
        std::size_t best = 0;
        for (int u = 0; u < static_cast<int>(k.size()); ++u) {
            if (!p.test(static_cast<std::size_t>(u)) && !x.test(static_cast<std::size_t>(u))) continue;
            std::size_t c = (p & k.adj[static_cast<std::size_t>(u)]).count();
            if (pivot < 0 || c > best) {
                pivot = u;
                best = c;
            }
        }
        for (int v = 0; v < static_cast<int>(k.size()); ++v) {
            if (!p.test(static_cast<std::size_t>(v))) continue;
            if (pivot >= 0 && k.adjacent(pivot, v)) continue;
            cur.push_back(v);
            bk(p & k.adj[static_cast<std::size_t>(v)], x & k.adj[static_cast<std::size_t>(v)]);
            cur.pop_back();
            p.reset(static_cast<std::size_t>(v));
            x.set(static_cast<std::size_t>(v));
        }
    };
    bk(all, Bitset(k.size()));
    std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace vrl
