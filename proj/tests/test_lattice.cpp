#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vrlattice/lattice.hpp"

using namespace vrl;

TEST_CASE("l1 distance") {
    CHECK(l1_distance({0, 0, 0}, {1, 1, 0}) == 2);
    CHECK(l1_distance({4, -3}, {4, -3}) == 0);
    CHECK(l1_distance({2, 0}, {0, 3}) == 5);
    CHECK_THROWS_AS(l1_distance({0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("l1 distance is a metric on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), coord(-10, 10);
    for (int t = 0; t < 10000; ++t) {
        int n = dim(rng);
        Point x(n), y(n), z(n);
        for (int i = 0; i < n; ++i) {
            x[i] = coord(rng);
            y[i] = coord(rng);
            z[i] = coord(rng);
        }
        auto dxy = l1_distance(x, y);
        CHECK(dxy >= 0);
        CHECK(dxy == l1_distance(y, x));
        CHECK((dxy == 0) == (x == y));
        CHECK(l1_distance(x, z) <= dxy + l1_distance(y, z));
    }
}

TEST_CASE("anti-lex order") {
    CHECK(antilex_less({1, 0}, {0, 1}));
    CHECK_FALSE(antilex_less({2, 5}, {2, 5}));
    CHECK_FALSE(antilex_less({0, 0, 1}, {0, 0, 0}));

    // trichotomy + transitivity on random triples
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int t = 0; t < 10000; ++t) {
        Point x(3), y(3), z(3);
        for (int i = 0; i < 3; ++i) {
            x[i] = coord(rng);
            y[i] = coord(rng);
            z[i] = coord(rng);
        }
        int rel = (antilex_less(x, y) ? 1 : 0) + (antilex_less(y, x) ? 1 : 0) +
                  (x == y ? 1 : 0);
        CHECK(rel == 1);
        if (antilex_less(x, y) && antilex_less(y, z)) CHECK(antilex_less(x, z));
    }
}

TEST_CASE("lambda operator") {
    CHECK(lambda_op({3, -2, 0}, {1, 2}) == Point{2, -1, 0});
    CHECK(lambda_op({7, -1}, {}) == Point{7, -1});
    CHECK(lambda_op({0, 5}, {1, 2}) == Point{0, 4});

    // moves each nonzero indexed coordinate exactly one step toward zero
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coord(-5, 5), pick(0, 1);
    for (int t = 0; t < 2000; ++t) {
        Point x(4);
        std::vector<int> s;
        for (int i = 0; i < 4; ++i) {
            x[i] = coord(rng);
            if (pick(rng)) s.push_back(i + 1);
        }
        Point y = lambda_op(x, s);
        std::int64_t moved = 0;
        for (int j : s)
            if (x[j - 1] != 0) ++moved;
        CHECK(l1_norm(x) - l1_norm(y) == moved);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(y[i]) <= std::abs(x[i]));
    }
}

TEST_CASE("shift operators") {
    CHECK(shift({1, 1}, {2}) == Point{1, 2});
    CHECK(shift({1, 1}, {-1}) == Point{0, 1});
    CHECK(shift({0, 0, 0}, {1, -3}) == Point{1, 0, -1});
    CHECK_THROWS_AS(shift({0, 0}, {1, -1}), std::invalid_argument);

    CHECK(shift_by({1, 1}, 1, 2) == Point{3, 1});
    CHECK(shift_by({9, -2}, 2, 0) == Point{9, -2});
    CHECK(shift_by({0, 4, 0}, 2, -2) == Point{0, 2, 0});
}

TEST_CASE("grid vertices") {
    CHECK(grid_vertices({1, 2, 0}) == std::vector<Point>{{0}, {1}, {2}});
    CHECK(grid_vertices({2, 1, 0}) ==
          std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(grid_vertices({3, 3, 2}).size() == 64);

    auto g = grid_vertices({3, 2, 1});
    for (std::size_t i = 0; i + 1 < g.size(); ++i) CHECK(antilex_less(g[i], g[i + 1]));

    Caps tight;
    tight.max_vertices = 10;
    CHECK_THROWS_AS(grid_vertices({3, 3, 2}, tight), cap_exceeded);
}

TEST_CASE("gamma vertices") {
    CHECK(gamma_vertices({{1, 3, 1}, 1}) == std::vector<Point>{{1}});
    // n=2, m=1, alpha=1, r=2: H = {(1,0),(0,1),(1,1)}, delta = (1,0),
    // Y = {(0,0),(-1,1),(0,1)}; nonzero points within distance 2
    CHECK(gamma_vertices({{2, 1, 2}, 1}) == std::vector<Point>{{-1, 1}, {0, 1}});

    Point zero(3, 0);
    for (std::int64_t alpha : {1, 5, 12, 26}) {
        auto v = gamma_vertices({{3, 2, 2}, alpha});
        for (const auto& y : v) {
            CHECK(antilex_less(zero, y));
            CHECK(l1_norm(y) <= 2);
        }
        for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(antilex_less(v[i], v[i + 1]));
    }
    CHECK_THROWS_AS(gamma_vertices({{2, 1, 2}, 4}), std::invalid_argument);
    CHECK_THROWS_AS(gamma_vertices({{2, 1, 2}, 0}), std::invalid_argument);
}

namespace {

// shared sampler for the distance-inequality suites
struct Sampler {
    std::mt19937 rng{42};
    int n = 0, r = 0;
    Point x, z;

    void draw(int min_n) {
        std::uniform_int_distribution<int> dn(min_n, 6);
        n = dn(rng);
        std::uniform_int_distribution<int> dr(std::max(2, min_n), 10);
        r = dr(rng);
        std::uniform_int_distribution<int> dc(-r, r);
        x.assign(n, 0);
        z.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            x[i] = dc(rng);
            z[i] = dc(rng);
        }
    }
    int idx() {
        std::uniform_int_distribution<int> d(0, n - 1);
        return d(rng);
    }
};

Point step_toward_zero(const Point& x, const std::vector<int>& coords) {
    Point y = x;
    for (int i : coords) {
        // |y_i| = |x_i| - 1 with matching sign
        y[i] = x[i] > 0 ? x[i] - 1 : x[i] + 1;
    }
    return y;
}

}  // namespace

TEST_CASE("one-coordinate step inequality") {
    Sampler s;
    int done = 0;
    while (done < 10000) {
        s.draw(1);
        int i = s.idx();
        if (s.x[i] == 0 || l1_distance(s.x, s.z) > s.r) continue;
        Point y = step_toward_zero(s.x, {i});
        bool hyp = std::abs(s.z[i]) < std::abs(s.x[i]) ||
                   (s.z[i] != 0 && (s.z[i] > 0) != (s.x[i] > 0));
        if (!hyp) continue;
        CHECK(l1_distance(s.z, y) <= s.r - 1);
        ++done;
    }
}

TEST_CASE("two-coordinate step inequality") {
    Sampler s;
    int done = 0;
    while (done < 10000) {
        s.draw(2);
        int i = s.idx(), j = s.idx();
        if (i == j || s.x[i] == 0 || s.x[j] == 0 || l1_distance(s.x, s.z) > s.r) continue;
        Point y = step_toward_zero(s.x, {i, j});
        auto lower = [&](int t) { return std::abs(s.z[t]) < std::abs(s.x[t]); };
        auto opposite = [&](int t) {
            return std::abs(s.z[t]) >= std::abs(s.x[t]) && s.z[t] != 0 &&
                   (s.z[t] > 0) != (s.x[t] > 0);
        };
        if (!(lower(i) || lower(j) || opposite(i) || opposite(j))) continue;
        CHECK(l1_distance(s.z, y) <= s.r);
        ++done;
    }
}

TEST_CASE("three-coordinate step inequality") {
    Sampler s;
    int done = 0;
    while (done < 10000) {
        s.draw(3);
        int i = s.idx(), j = s.idx(), k = s.idx();
        if (i == j || j == k || i == k) continue;
        if (s.x[i] == 0 || s.x[j] == 0 || s.x[k] == 0) continue;
        if (l1_distance(s.x, s.z) > s.r) continue;
        Point y = step_toward_zero(s.x, {i, j, k});
        int lower = 0;
        for (int t : {i, j, k})
            if (std::abs(s.z[t]) < std::abs(s.x[t])) ++lower;
        if (lower < 2) continue;
        CHECK(l1_distance(s.z, y) <= s.r - 1);
        ++done;
    }
}

TEST_CASE("four-coordinate step inequality") {
    Sampler s;
    int done = 0;
    while (done < 10000) {
        s.draw(4);
        int i = s.idx(), j = s.idx(), k = s.idx(), l = s.idx();
        std::vector<int> c{i, j, k, l};
        std::sort(c.begin(), c.end());
        if (std::unique(c.begin(), c.end()) != c.end()) continue;
        bool zero = false;
        for (int t : c)
            if (s.x[t] == 0) zero = true;
        if (zero || l1_distance(s.x, s.z) > s.r) continue;
        Point y = step_toward_zero(s.x, c);
        int lower = 0;
        for (int t : c)
            if (std::abs(s.z[t]) < std::abs(s.x[t])) ++lower;
        if (lower < 2) continue;
        CHECK(l1_distance(s.z, y) <= s.r);
        ++done;
    }
}
