#include <doctest.h>

#include "representation.hpp"
#include "test_support.hpp"

using namespace gridpaths;
using namespace gridpaths::testing;

namespace {

grid_representation rep_of(std::map<vertex_id, grid_path> paths, rep_mode mode) {
    return {std::move(paths), mode};
}

}  // namespace

TEST_CASE("induced_graph_epg") {
    SUBCASE("shared unit edge gives K_2") {
        auto rep = rep_of({{1, grid_path({{0, 0}, {2, 0}})}, {2, grid_path({{1, 0}, {3, 0}})}},
                          rep_mode::epg);
        graph g = induced_graph_epg(rep);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(1, 2));
    }
    SUBCASE("point crossing is not an EPG edge") {
        auto rep = rep_of({{1, grid_path({{0, 1}, {2, 1}})}, {2, grid_path({{1, 0}, {1, 2}})}},
                          rep_mode::epg);
        CHECK(induced_graph_epg(rep).edge_count() == 0);
        CHECK(induced_graph_vpg(rep).has_edge(1, 2));
    }
}

TEST_CASE("induced_graph_vpg") {
    auto touching = rep_of({{1, grid_path({{0, 0}, {2, 0}})}, {2, grid_path({{2, 0}, {2, 2}})}},
                           rep_mode::vpg);
    CHECK(induced_graph_vpg(touching).has_edge(1, 2));
    auto disjoint = rep_of({{1, grid_path({{0, 0}, {1, 0}})}, {2, grid_path({{5, 5}, {6, 5}})}},
                           rep_mode::vpg);
    CHECK(induced_graph_vpg(disjoint).edge_count() == 0);
}

TEST_CASE("is_proper_vpg") {
    SUBCASE("shared unit edge violates (a)") {
        auto rep = rep_of({{1, grid_path({{0, 0}, {2, 0}})}, {2, grid_path({{1, 0}, {3, 0}})}},
                          rep_mode::vpg);
        auto cert = is_proper_vpg(rep);
        CHECK_FALSE(cert.proper);
        CHECK(!cert.violation.empty());
    }
    SUBCASE("plus crossing is proper") {
        auto rep = rep_of({{1, grid_path({{0, 1}, {2, 1}})}, {2, grid_path({{1, 0}, {1, 2}})}},
                          rep_mode::vpg);
        CHECK(is_proper_vpg(rep).proper);
    }
    SUBCASE("endpoint touching an interior violates (b)") {
        // path 2 ends at (1,1), on the interior of the horizontal path 1:
        // neither path uses the upward edge at the shared point
        auto rep = rep_of({{1, grid_path({{0, 1}, {2, 1}})}, {2, grid_path({{1, 1}, {1, 0}})}},
                          rep_mode::vpg);
        CHECK_FALSE(is_proper_vpg(rep).proper);
    }
    SUBCASE("three paths through one point are improper") {
        auto rep = rep_of({{1, grid_path({{0, 1}, {2, 1}})},
                           {2, grid_path({{1, 0}, {1, 2}})},
                           {3, grid_path({{1, 1}, {2, 1}, {2, 2}})}},
                          rep_mode::vpg);
        CHECK_FALSE(is_proper_vpg(rep).proper);
    }
    SUBCASE("generator output is always proper") {
        rng_t rng(7301);
        for (int t = 0; t < 50; ++t) {
            auto rep = random_proper_vpg(rng, rand_int(rng, 1, 10), coin(rng));
            CHECK(is_proper_vpg(rep).proper);
            CHECK(stats(rep).multiplicity <= 1);
        }
    }
}

TEST_CASE("validate") {
    graph k2({1, 2}, {{1, 2}});
    auto exact = rep_of({{1, grid_path({{0, 0}, {2, 0}})}, {2, grid_path({{1, 0}, {3, 0}})}},
                        rep_mode::epg);
    SUBCASE("exact K_2") {
        auto report = validate(exact, k2);
        CHECK(report.exact);
        CHECK(report.missing.empty());
        CHECK(report.excess.empty());
        CHECK(report.path_class.at(1) == "xy+");
    }
    SUBCASE("excess edge against the empty graph") {
        graph empty2;
        empty2.add_vertex(1);
        empty2.add_vertex(2);
        auto report = validate(exact, empty2);
        CHECK_FALSE(report.exact);
        REQUIRE(report.excess.size() == 1);
        CHECK(report.excess[0] == vertex_pair{1, 2});
    }
    SUBCASE("vertex mismatch") {
        graph other({1, 3}, {});
        CHECK_THROWS(validate(exact, other));
    }
    SUBCASE("proper-vpg mode requires properness for exactness") {
        auto improper = rep_of({{1, grid_path({{0, 0}, {2, 0}})}, {2, grid_path({{1, 0}, {3, 0}})}},
                               rep_mode::proper_vpg);
        auto report = validate(improper, k2);
        CHECK_FALSE(report.exact);
        REQUIRE(report.properness.has_value());
        CHECK_FALSE(report.properness->proper);
    }
    SUBCASE("validate against own induced graph is exact") {
        rng_t rng(7302);
        for (int t = 0; t < 30; ++t) {
            grid_representation rep;
            rep.mode = rep_mode::epg;
            int n = rand_int(rng, 1, 8);
            for (int v = 0; v < n; ++v) rep.paths.emplace(v, random_trail(rng, 20));
            CHECK(validate(rep, induced_graph_epg(rep)).exact);
        }
    }
}

TEST_CASE("stats") {
    SUBCASE("single point") {
        auto rep = rep_of({{1, grid_path({{3, 3}})}}, rep_mode::epg);
        auto s = stats(rep);
        CHECK(s.box.w == 1);
        CHECK(s.box.h == 1);
        CHECK(s.distinct_grid_edges == 0);
        CHECK(s.multiplicity == 0);
        CHECK(s.monotone_class == "xy+");
    }
    SUBCASE("one shared edge") {
        auto rep = rep_of({{1, grid_path({{0, 0}, {2, 0}})}, {2, grid_path({{1, 0}, {3, 0}})}},
                          rep_mode::epg);
        auto s = stats(rep);
        CHECK(s.distinct_grid_edges == 3);
        CHECK(s.multiplicity == 2);
    }
    SUBCASE("strongest common class") {
        auto rep = rep_of({{1, grid_path({{0, 0}, {1, 0}, {1, 1}})},   // xy+
                           {2, grid_path({{5, 1}, {6, 1}, {6, 0}})}},  // xy only
                          rep_mode::epg);
        CHECK(stats(rep).monotone_class == "xy");
    }
}

TEST_CASE("oracle equivalence: segment-overlap vs unit-edge brute force") {
    rng_t rng(7303);
    for (int t = 0; t < 100; ++t) {
        grid_representation rep;
        rep.mode = rep_mode::epg;
        int n = rand_int(rng, 1, 12);
        for (int v = 0; v < n; ++v) rep.paths.emplace(v, random_trail(rng, 25));
        CHECK(induced_graph_epg(rep) == brute_induced_epg(rep));
        CHECK(induced_graph_vpg(rep) == brute_induced_vpg(rep));
    }
}
