#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vrlattice/json_io.hpp"

using namespace vrl;

TEST_CASE("complex round trip") {
    auto k = build_complex(grid_vertices({2, 2, 2}), 2, "grid");
    auto j = to_json(k);
    CHECK(j["n"] == 2);
    CHECK(j["r"] == 2);
    CHECK(j["vertices"].size() == 9);
    auto k2 = complex_from_json(j);
    CHECK(k2.vertices == k.vertices);
    CHECK(edge_count(k2) == edge_count(k));
    CHECK(complex_digest(k2) == complex_digest(k));

    // tampering is detected
    auto bad = j;
    bad["edge_count"] = 0;
    CHECK_THROWS_AS(complex_from_json(bad), std::invalid_argument);
    auto bad2 = j;
    bad2["schema_version"] = 99;
    CHECK_THROWS_AS(complex_from_json(bad2), std::invalid_argument);
    auto bad3 = j;
    bad3["digest"] = "0000000000000000";
    CHECK_THROWS_AS(complex_from_json(bad3), std::invalid_argument);
}

TEST_CASE("digest binds scale and vertices") {
    auto a = build_complex(grid_vertices({2, 1, 1}), 1);
    auto b = build_complex(grid_vertices({2, 1, 2}), 2);
    CHECK(complex_digest(a) != complex_digest(b));
}

TEST_CASE("certificate round trip") {
    auto k = build_complex(grid_vertices({2, 2, 2}), 2, "grid");
    auto cert = dismantle(k);
    auto j = to_json(cert, k);
    CHECK(j["digest"] == complex_digest(k));
    auto cert2 = certificate_from_json(j);
    CHECK(cert2.steps == cert.steps);
    CHECK(cert2.residual == cert.residual);
    CHECK(verify_certificate(k, cert2).ok);
}

TEST_CASE("census and betti serialization") {
    auto k = build_complex(grid_vertices({3, 1, 2}), 2, "grid");
    auto m = build_matching_mu(k, 6);
    bool acyclic = verify_acyclic(m);
    auto j = to_json(critical_census(m, true), k, acyclic, true);
    CHECK(j["acyclic"] == true);
    CHECK(j.contains("witnesses"));

    auto bj = to_json(betti_z2(k, 4), k, 4);
    CHECK(bj["betti"].size() == 5);
    CHECK(bj["digest"] == complex_digest(k));

    auto rep = explore_conjecture_5_1(2, 2, 2, 1);
    auto rj = to_json(rep);
    CHECK(rj["verdict"] == "reduced-and-contractible");
}
