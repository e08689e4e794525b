#pragma once

// Discrete Morse machinery: the anti-lex vertex matching on the face poset,
// acyclicity verification on the reoriented Hasse digraph, and the
// critical-cell census.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vrlattice/flag_complex.hpp"

namespace vrl {

// Face poset ids: simplices grouped by dimension (including the empty simplex
// at dimension -1), each dimension's block in lexicographic order.
struct FacePoset {
    SimplexLists lists;
    std::vector<std::int64_t> offset;  // offset[d+1] = first id of dimension d

    std::int64_t total() const { return lists.total(); }

    std::int64_t id_of(const Simplex& s) const {
        const auto& block = lists.by_dim[s.size()];
        auto it = std::lower_bound(block.begin(), block.end(), s);
        if (it == block.end() || *it != s) return -1;
        return offset[s.size()] + (it - block.begin());
    }
    int dim_of(std::int64_t id) const {
        int d = -1;
        while (d + 2 < static_cast<int>(offset.size()) &&
               id >= offset[static_cast<std::size_t>(d + 2)])
            ++d;
        return d;
    }
    const Simplex& simplex_of(std::int64_t id) const {
        int d = dim_of(id);
        return lists.by_dim[static_cast<std::size_t>(d + 1)]
                           [static_cast<std::size_t>(id - offset[static_cast<std::size_t>(d + 1)])];
    }
};

inline FacePoset build_face_poset(const FlagComplex& k, int dmax, const Caps& caps = Caps{}) {
    FacePoset p;
    p.lists = simplices_up_to(k, dmax + 1, caps);
    if (!p.lists.by_dim.back().empty())
        throw std::invalid_argument("build_face_poset: complex has simplices above dmax");
    p.lists.by_dim.pop_back();
    p.lists.dmax = dmax;
    p.offset.assign(p.lists.by_dim.size() + 1, 0);
    for (std::size_t i = 0; i < p.lists.by_dim.size(); ++i)
        p.offset[i + 1] = p.offset[i] + static_cast<std::int64_t>(p.lists.by_dim[i].size());
    p.offset.pop_back();
    return p;
}

struct MorseMatching {
    FacePoset poset;
    std::vector<std::int64_t> mate;  // id -> matched id, -1 if critical
    int dmax = -1;

    bool is_critical(std::int64_t id) const { return mate[static_cast<std::size_t>(id)] < 0; }
};

// The staged vertex matching: vertices are processed in anti-lex ascending
// order; at step i every still-unmatched simplex not containing v_i is matched
// with its still-unmatched union with v_i when that union is a simplex. The
// per-step pairing is applied set-at-once (targets contain v_i, sources do
// not, so the applications never conflict).
inline MorseMatching build_matching_mu(const FlagComplex& k, int dmax,
                                       const Caps& caps = Caps{}) {
    MorseMatching m;
    m.poset = build_face_poset(k, dmax, caps);
    m.dmax = dmax;
    const std::int64_t total = m.poset.total();
    m.mate.assign(static_cast<std::size_t>(total), -1);
    std::vector<std::pair<std::int64_t, std::int64_t>> batch;
    Simplex merged;
    for (int v = 0; v < static_cast<int>(k.size()); ++v) {
        batch.clear();
        for (std::int64_t id = 0; id < total; ++id) {
            if (m.mate[static_cast<std::size_t>(id)] >= 0) continue;
            const Simplex& s = m.poset.simplex_of(id);
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            if (static_cast<int>(s.size()) > dmax) continue;  // union would exceed dmax
            // union must be a clique: v adjacent to every vertex of s
            bool ok = true;
            for (int u : s)
                if (!k.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            merged.clear();
            merged.insert(merged.end(), s.begin(), s.end());
            merged.insert(std::lower_bound(merged.begin(), merged.end(), v), v);
            std::int64_t tid = m.poset.id_of(merged);
            if (tid < 0 || m.mate[static_cast<std::size_t>(tid)] >= 0) continue;
            batch.emplace_back(id, tid);
        }
        for (auto [a, b] : batch) {
            m.mate[static_cast<std::size_t>(a)] = b;
            m.mate[static_cast<std::size_t>(b)] = a;
        }
    }
    return m;
}

// Structural validity: involution, covering pairs only.
inline bool matching_valid(const MorseMatching& m) {
    const std::int64_t total = m.poset.total();
    for (std::int64_t id = 0; id < total; ++id) {
        std::int64_t mate = m.mate[static_cast<std::size_t>(id)];
        if (mate < 0) continue;
        if (mate >= total || m.mate[static_cast<std::size_t>(mate)] != id) return false;
        const Simplex& a = m.poset.simplex_of(std::min(id, mate));
        const Simplex& b = m.poset.simplex_of(std::max(id, mate));
        if (b.size() != a.size() + 1) return false;
        if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
    return true;
}

// Acyclicity of the reoriented Hasse digraph: matched covering edges point
// up, all others point down. Kahn's algorithm over the whole poset.
inline bool verify_acyclic(const MorseMatching& m) {
    if (!matching_valid(m))
        throw std::invalid_argument("verify_acyclic: structurally invalid matching");
    const std::int64_t total = m.poset.total();
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(total));
    std::vector<std::int64_t> indeg(static_cast<std::size_t>(total), 0);
    Simplex face;
    for (std::int64_t id = 0; id < total; ++id) {
        const Simplex& s = m.poset.simplex_of(id);
        if (s.empty()) continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            face.clear();
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != skip) face.push_back(s[j]);
            std::int64_t fid = m.poset.id_of(face);
            if (m.mate[static_cast<std::size_t>(fid)] == id) {
                adj[static_cast<std::size_t>(fid)].push_back(id);  // up edge
                ++indeg[static_cast<std::size_t>(id)];
            } else {
                adj[static_cast<std::size_t>(id)].push_back(fid);  // down edge
                ++indeg[static_cast<std::size_t>(fid)];
            }
        }
    }
    std::vector<std::int64_t> queue;
    for (std::int64_t id = 0; id < total; ++id)
        if (indeg[static_cast<std::size_t>(id)] == 0) queue.push_back(id);
    std::int64_t seen = 0;
    while (!queue.empty()) {
        std::int64_t u = queue.back();
        queue.pop_back();
        ++seen;
        for (std::int64_t w : adj[static_cast<std::size_t>(u)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    return seen == total;
}

struct CriticalCensus {
    std::map<int, std::int64_t> counts;           // dimension -> count (0..dmax)
    std::map<int, std::vector<Simplex>> witness;  // filled on request
    bool empty_simplex_critical = false;

    std::int64_t at(int d) const {
        auto it = counts.find(d);
        return it == counts.end() ? 0 : it->second;
    }
};

inline CriticalCensus critical_census(const MorseMatching& m, bool witnesses = false) {
    CriticalCensus c;
    for (int d = 0; d <= m.dmax; ++d) c.counts[d] = 0;
    for (std::int64_t id = 0; id < m.poset.total(); ++id) {
        if (!m.is_critical(id)) continue;
        const Simplex& s = m.poset.simplex_of(id);
        if (s.empty()) {
            c.empty_simplex_critical = true;
            continue;
        }
        int d = static_cast<int>(s.size()) - 1;
        ++c.counts[d];
        if (witnesses) c.witness[d].push_back(s);
    }
    return c;
}

struct HomotopyReport {
    bool single_dimension = false;
    int dimension = -1;             // when single_dimension
    std::int64_t sphere_count = 0;  // 0 means contractible
    bool contractible = false;
    bool simply_connected_evidence = false;
    CriticalCensus census;
};

// Verdict per the critical-cell census of an acyclic matching: one critical
// dimension means a wedge of that many spheres (plus the base 0-cell).
inline HomotopyReport homotopy_report(const MorseMatching& m) {
    if (!verify_acyclic(m)) throw std::invalid_argument("homotopy_report: matching not acyclic");
    CriticalCensus c = critical_census(m);
    if (c.empty_simplex_critical)
        throw std::invalid_argument("homotopy_report: empty simplex unmatched");
    HomotopyReport rep;
    rep.census = c;
    std::vector<int> dims;
    for (const auto& [d, cnt] : c.counts)
        if (cnt > 0) dims.push_back(d);
    rep.simply_connected_evidence = c.at(0) == 0 && c.at(1) == 0;
    if (dims.empty()) {
        rep.single_dimension = true;
        rep.contractible = true;
    } else if (dims.size() == 1) {
        rep.single_dimension = true;
        rep.dimension = dims[0];
        rep.sphere_count = c.at(dims[0]);
    }
    return rep;
}

// First-three-coordinates projection; 1-Lipschitz for the L1 metric, hence a
// simplicial retraction onto the n = 3 slice.
inline Point project_retraction(const Point& v) {
    if (v.size() < 3)
        throw std::invalid_argument("project_retraction: requires dimension >= 3");
    return Point(v.begin(), v.begin() + 3);
}

}  // namespace vrl
