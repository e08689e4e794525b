#pragma once

// Points of Z^n under the Manhattan metric, the anti-lexicographic order,
// coordinate step operators, and vertex-set generators for grid boxes and
// their truncated/shifted links.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vrl {

using Coord = int;
using Point = std::vector<Coord>;

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    std::int64_t max_vertices = 100000;
    std::int64_t max_simplices = 20000000;
};

inline void check_same_dim(const Point& x, const Point& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
}

// sgn of a nonzero integer; never called on 0.
inline int sign_of(Coord v) {
    if (v == 0) throw std::invalid_argument("sign_of(0) is undefined");
    return v > 0 ? 1 : -1;
}

inline std::int64_t l1_distance(const Point& x, const Point& y) {
    check_same_dim(x, y);
    std::int64_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        d += std::abs(static_cast<std::int64_t>(x[i]) - y[i]);
    return d;
}

inline std::int64_t l1_norm(const Point& x) {
    std::int64_t d = 0;
    for (Coord c : x) d += std::abs(static_cast<std::int64_t>(c));
    return d;
}

// x < y in anti-lexicographic order: at the largest differing index, x is smaller.
inline bool antilex_less(const Point& x, const Point& y) {
    check_same_dim(x, y);
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

// lambda^{[x;S]}: each nonzero coordinate indexed by S (1-based) moves one
// step toward zero.
inline Point lambda_op(const Point& x, const std::vector<int>& s) {
    Point y = x;
    for (int j : s) {
        if (j < 1 || j > static_cast<int>(x.size()))
            throw std::invalid_argument("lambda_op: index out of range");
        Coord& c = y[static_cast<std::size_t>(j - 1)];
        if (c > 0) --c;
        else if (c < 0) ++c;
    }
    return y;
}

// x^{i_1,...,i_k}: +1 at coordinate j for +j in idx, -1 for -j in idx.
// Indices are signed and 1-based; absolute values must be pairwise distinct.
inline Point shift(const Point& x, const std::vector<int>& idx) {
    Point y = x;
    std::vector<int> seen;
    for (int i : idx) {
        int a = std::abs(i);
        if (a < 1 || a > static_cast<int>(x.size()))
            throw std::invalid_argument("shift: index out of range");
        if (std::find(seen.begin(), seen.end(), a) != seen.end())
            throw std::invalid_argument("shift: repeated absolute index");
        seen.push_back(a);
        y[static_cast<std::size_t>(a - 1)] += (i > 0) ? 1 : -1;
    }
    return y;
}

// x^{[i;k^+]}: coordinate i increased by k.
inline Point shift_by(const Point& x, int i, Coord k) {
    if (i < 1 || i > static_cast<int>(x.size()))
        throw std::invalid_argument("shift_by: index out of range");
    Point y = x;
    y[static_cast<std::size_t>(i - 1)] += k;
    return y;
}

struct GridSpec {
    int n = 1;  // ambient dimension
    int m = 1;  // box side, vertices in {0..m}^n
    int r = 0;  // Rips scale

    void validate() const {
        if (n < 1) throw std::invalid_argument("GridSpec: n must be >= 1");
        if (m < 1) throw std::invalid_argument("GridSpec: m must be >= 1");
        if (r < 0) throw std::invalid_argument("GridSpec: r must be >= 0");
        if (m > (1 << 15)) throw std::invalid_argument("GridSpec: m exceeds coordinate bound");
    }

    std::int64_t vertex_count() const {
        std::int64_t c = 1;
        for (int i = 0; i < n; ++i) {
            c *= (m + 1);
            if (c > (std::int64_t{1} << 40)) throw std::invalid_argument("GridSpec: box too large");
        }
        return c;
    }
};

struct GammaSpec {
    GridSpec grid;
    std::int64_t alpha = 1;  // number of least vertices removed

    void validate() const {
        grid.validate();
        if (alpha < 1 || alpha > grid.vertex_count() - 1)
            throw std::invalid_argument("GammaSpec: alpha out of range");
    }
};

// All (m+1)^n points of {0..m}^n in ascending anti-lex order: last coordinate
// is most significant, so it is the outermost odometer digit.
inline std::vector<Point> grid_vertices(const GridSpec& spec,
                                        const Caps& caps = Caps{}) {
    spec.validate();
    std::int64_t total = spec.vertex_count();
    if (total > caps.max_vertices)
        throw cap_exceeded("grid_vertices: " + std::to_string(total) +
                           " vertices exceeds cap " + std::to_string(caps.max_vertices));
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(total));
    Point p(static_cast<std::size_t>(spec.n), 0);
    out.push_back(p);
    for (std::int64_t k = 1; k < total; ++k) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < spec.m) {
                ++p[i];
                break;
            }
            p[i] = 0;
        }
        out.push_back(p);
    }
    return out;
}

// Vertex set of Gamma_n^{alpha,r}: drop the first alpha grid vertices, shift
// by the least remaining vertex delta, keep the nonzero translates within
// distance r of the origin. All survivors satisfy 0 < y in anti-lex order.
inline std::vector<Point> gamma_vertices(const GammaSpec& spec,
                                         const Caps& caps = Caps{}) {
    spec.validate();
    std::vector<Point> grid = grid_vertices(spec.grid, caps);
    const Point& delta = grid[static_cast<std::size_t>(spec.alpha)];
    std::vector<Point> out;
    for (std::size_t i = static_cast<std::size_t>(spec.alpha) + 1; i < grid.size(); ++i) {
        Point y(grid[i].size());
        for (std::size_t j = 0; j < y.size(); ++j) y[j] = grid[i][j] - delta[j];
        if (l1_norm(y) <= spec.grid.r) out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end(), antilex_less);
    return out;
}

}  // namespace vrl
