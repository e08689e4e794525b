#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vrlattice/classify.hpp"
#include "vrlattice/flag_complex.hpp"

using namespace vrl;

namespace {

FlagComplex grid_complex(int n, int m, int r) {
    return build_complex(grid_vertices({n, m, r}), r, "grid");
}

// independent clique check over all subsets (small complexes only)
std::int64_t brute_clique_count(const FlagComplex& k, int max_size) {
    std::int64_t count = 1;  // empty set
    const std::size_t n = k.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Simplex s;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) s.push_back(static_cast<int>(v));
        if (static_cast<int>(s.size()) <= max_size && k.is_clique(s)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("build_complex basics") {
    auto path = build_complex({{0}, {1}, {2}}, 1);
    CHECK(path.size() == 3);
    CHECK(path.adjacent(0, 1));
    CHECK(path.adjacent(1, 2));
    CHECK_FALSE(path.adjacent(0, 2));
    CHECK(edge_count(path) == 2);
    CHECK(adjacency_consistent(path));

    auto square = build_complex({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
    CHECK(edge_count(square) == 6);
    auto ms = maximal_simplices(square);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == Simplex{0, 1, 2, 3});

    auto cube = grid_complex(3, 1, 1);
    CHECK(cube.size() == 8);
    CHECK(edge_count(cube) == 12);

    CHECK_THROWS_AS(build_complex({{0}, {0}}, 1), std::invalid_argument);
}

TEST_CASE("neighborhoods, links, induced") {
    auto path = build_complex({{0}, {1}, {2}}, 1);
    CHECK(closed_neighborhood(path, 1) == std::vector<int>{0, 1, 2});
    CHECK(closed_neighborhood(path, 0) == std::vector<int>{0, 1});
    CHECK_THROWS_AS(closed_neighborhood(path, 5), std::invalid_argument);

    auto k4 = build_complex({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
    CHECK(link(k4, 0).size() == 3);
    CHECK(edge_count(link(k4, 0)) == 3);
    CHECK(link(path, 0).size() == 1);

    auto same = induced(k4, {0, 1, 2, 3});
    CHECK(same.vertices == k4.vertices);
    CHECK(edge_count(same) == 6);
    CHECK(induced(k4, {}).size() == 0);

    // restriction commutes with construction
    auto big = grid_complex(2, 2, 2);
    std::vector<int> keep;
    std::vector<Point> pts;
    for (int v = 0; v < static_cast<int>(big.size()); ++v)
        if (std::abs(big.vertices[v][0] - 1) <= 1 && big.vertices[v][1] <= 1) {
            keep.push_back(v);
            pts.push_back(big.vertices[v]);
        }
    auto a = induced(big, keep);
    auto b = build_complex(pts, 2);
    CHECK(a.vertices == b.vertices);
    for (std::size_t u = 0; u < a.size(); ++u)
        for (std::size_t v = 0; v < a.size(); ++v)
            CHECK(a.adjacent(static_cast<int>(u), static_cast<int>(v)) ==
                  b.adjacent(static_cast<int>(u), static_cast<int>(v)));
}

TEST_CASE("gamma vertex set equals link of the minimum") {
    for (std::int64_t alpha : {1, 2, 3, 7}) {
        GammaSpec spec{{2, 2, 2}, alpha};
        auto grid = grid_vertices(spec.grid);
        const Point& delta = grid[alpha];
        std::vector<Point> y;
        for (std::size_t i = alpha; i < grid.size(); ++i) {
            Point p(grid[i].size());
            for (std::size_t j = 0; j < p.size(); ++j) p[j] = grid[i][j] - delta[j];
            y.push_back(p);
        }
        auto vr = build_complex(y, spec.grid.r);
        Point zero(2, 0);
        auto lk = link(vr, vr.index_of(zero));
        CHECK(lk.vertices == gamma_vertices(spec));
    }
}

TEST_CASE("simplex enumeration") {
    auto tri = build_complex({{0}, {1}, {2}}, 2);  // complete on 3
    auto lists = simplices_up_to(tri, 2);
    CHECK(lists.total() == 8);
    CHECK(lists.count(-1) == 1);
    CHECK(lists.count(0) == 3);
    CHECK(lists.count(1) == 3);
    CHECK(lists.count(2) == 1);

    auto path = build_complex({{0}, {1}, {2}}, 1);
    auto pl = simplices_up_to(path, 2);
    CHECK(pl.count(1) == 2);
    CHECK(pl.count(2) == 0);

    // agreement with the all-subsets clique counter
    auto cube = grid_complex(3, 1, 2);
    auto cl = simplices_up_to(cube, 3);
    CHECK(cl.total() == brute_clique_count(cube, 4));

    // per-dimension lists are lexicographic
    for (const auto& block : cl.by_dim)
        CHECK(std::is_sorted(block.begin(), block.end()));

    Caps tight;
    tight.max_simplices = 5;
    CHECK_THROWS_AS(simplices_up_to(cube, 3, tight), cap_exceeded);
}

TEST_CASE("maximal simplices") {
    auto k4 = build_complex({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
    CHECK(maximal_simplices(k4).size() == 1);

    auto path = build_complex({{0}, {1}, {2}}, 1);
    auto ms = maximal_simplices(path);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == Simplex{0, 1});
    CHECK(ms[1] == Simplex{1, 2});

    // no maximal clique contains another; subclique closure = full enumeration
    auto k = grid_complex(2, 2, 2);
    auto maxes = maximal_simplices(k);
    for (std::size_t a = 0; a < maxes.size(); ++a)
        for (std::size_t b = 0; b < maxes.size(); ++b)
            if (a != b)
                CHECK_FALSE(std::includes(maxes[a].begin(), maxes[a].end(),
                                          maxes[b].begin(), maxes[b].end()));
    for (const auto& s : maxes) CHECK(k.is_maximal_clique(s));

    // dimension bound at scale 2: max simplex size <= 2n + 1
    auto big = grid_complex(3, 3, 2);
    for (const auto& s : maximal_simplices(big)) CHECK(s.size() <= 7);
}

TEST_CASE("scale-2 maximal simplex classifier") {
    auto k = grid_complex(3, 3, 2);
    auto maxes = maximal_simplices(k);
    bool saw_nbhd = false, saw_square = false;
    for (const auto& tau : maxes) {
        auto cls = classify_maximal_r2(k, tau);
        CHECK(cls.kind != MaxSimplexKind::Unclassified);
        if (cls.kind == MaxSimplexKind::ClosedNeighborhood) {
            saw_nbhd = true;
            if (tau.size() == 7) {
                // interior witness regenerates the full closed neighborhood
                CHECK(l1_norm(cls.base) >= 0);
            }
        }
        if (cls.kind == MaxSimplexKind::Square) saw_square = true;
    }
    CHECK(saw_nbhd);
    CHECK(saw_square);

    // non-maximal input is rejected
    CHECK_THROWS_AS(classify_maximal_r2(k, Simplex{0}), std::invalid_argument);
}

TEST_CASE("classifier on n=2 boxes") {
    for (int m = 1; m <= 3; ++m) {
        auto k = grid_complex(2, m, 2);
        for (const auto& tau : maximal_simplices(k))
            CHECK(classify_maximal_r2(k, tau).kind != MaxSimplexKind::Unclassified);
    }
}
