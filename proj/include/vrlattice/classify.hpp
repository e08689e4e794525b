#pragma once

// Classification of maximal simplices at scale 2: closed neighborhoods,
// squares and triangle-squares, all intersected with the ambient box. Base
// points may lie outside the box, so the witness search ranges over the
// enclosing lattice.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "vrlattice/flag_complex.hpp"

namespace vrl {

enum class MaxSimplexKind { ClosedNeighborhood, Square, TriangleSquare, Unclassified };

inline const char* to_string(MaxSimplexKind k) {
    switch (k) {
        case MaxSimplexKind::ClosedNeighborhood: return "closed-neighborhood";
        case MaxSimplexKind::Square: return "square";
        case MaxSimplexKind::TriangleSquare: return "triangle-square";
        default: return "unclassified";
    }
}

struct MaxSimplexClass {
    MaxSimplexKind kind = MaxSimplexKind::Unclassified;
    Point base;                // witness x
    std::vector<int> indices;  // signed witness indices (i0[,j0[,k0]])
};

namespace detail {

// Lattice points within L1 distance `rad` of p.
inline void ball_points(const Point& p, int rad, std::set<Point>& out) {
    Point cur = p;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
        if (i == p.size()) {
            out.insert(cur);
            return;
        }
        for (int d = -budget; d <= budget; ++d) {
            cur[i] = p[i] + d;
            rec(i + 1, budget - std::abs(d));
        }
        cur[i] = p[i];
    };
    rec(0, rad);
}

inline std::vector<Point> simplex_points(const FlagComplex& k, const Simplex& s) {
    std::vector<Point> pts;
    for (int v : s) pts.push_back(k.vertices[static_cast<std::size_t>(v)]);
    std::sort(pts.begin(), pts.end(), antilex_less);
    return pts;
}

// Intersect a candidate generated set with the complex's vertex set and
// compare against tau (as sorted point lists).
inline bool matches(const FlagComplex& k, const std::vector<Point>& tau,
                    std::vector<Point> gen) {
    std::vector<Point> in_box;
    for (auto& p : gen)
        if (k.index_of(p) >= 0) in_box.push_back(std::move(p));
    std::sort(in_box.begin(), in_box.end(), antilex_less);
    in_box.erase(std::unique(in_box.begin(), in_box.end()), in_box.end());
    return in_box == tau;
}

}  // namespace detail

// Classify a maximal simplex of a scale-2 box complex per the three types.
inline MaxSimplexClass classify_maximal_r2(const FlagComplex& k, const Simplex& tau) {
    if (k.scale != 2) throw std::invalid_argument("classify_maximal_r2: scale must be 2");
    if (!k.is_maximal_clique(tau))
        throw std::invalid_argument("classify_maximal_r2: simplex is not maximal");
    const int n = k.dim_ambient();
    std::vector<Point> tau_pts = detail::simplex_points(k, tau);

    std::set<Point> candidates;
    for (const auto& p : tau_pts) detail::ball_points(p, 2, candidates);

    // Signed index pool: +1..+n, -1..-n.
    std::vector<int> signed_idx;
    for (int i = 1; i <= n; ++i) {
        signed_idx.push_back(i);
        signed_idx.push_back(-i);
    }

    MaxSimplexClass result;
    for (const Point& x : candidates) {
        // Type (i): tau = N[x] intersected with the box.
        std::vector<Point> nbhd{x};
        for (int i : signed_idx) nbhd.push_back(shift(x, {i}));
        if (detail::matches(k, tau_pts, nbhd)) {
            result.kind = MaxSimplexKind::ClosedNeighborhood;
            result.base = x;
            return result;
        }
    }
    for (const Point& x : candidates) {
        // Type (ii): tau = {x, x^{i0}, x^{j0}, x^{i0,j0}} intersected.
        for (int i0 : signed_idx)
            for (int j0 : signed_idx) {
                if (std::abs(i0) >= std::abs(j0)) continue;
                std::vector<Point> gen{x, shift(x, {i0}), shift(x, {j0}), shift(x, {i0, j0})};
                if (detail::matches(k, tau_pts, gen)) {
                    result.kind = MaxSimplexKind::Square;
                    result.base = x;
                    result.indices = {i0, j0};
                    return result;
                }
            }
    }
    for (const Point& x : candidates) {
        // Type (iii): tau = {x, x^{i0,j0}, x^{j0,k0}, x^{i0,k0}} intersected.
        for (int i0 : signed_idx)
            for (int j0 : signed_idx) {
                if (std::abs(i0) >= std::abs(j0)) continue;
                for (int k0 : signed_idx) {
                    if (std::abs(k0) <= std::abs(j0)) continue;
                    std::vector<Point> gen{x, shift(x, {i0, j0}), shift(x, {j0, k0}),
                                           shift(x, {i0, k0})};
                    if (detail::matches(k, tau_pts, gen)) {
                        result.kind = MaxSimplexKind::TriangleSquare;
                        result.base = x;
                        result.indices = {i0, j0, k0};
                        return result;
                    }
                }
            }
    }
    return result;  // Unclassified
}

}  // namespace vrl
