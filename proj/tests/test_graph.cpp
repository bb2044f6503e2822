#include <doctest.h>

#include "graph.hpp"
#include "test_support.hpp"

using namespace gridpaths;
using namespace gridpaths::testing;

TEST_CASE("basic graph operations") {
    graph g({1, 2, 3}, {{1, 2}, {2, 3}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbors(2) == std::vector<vertex_id>{1, 3});

    g.remove_vertex(2);
    CHECK(g.edge_count() == 0);
    CHECK(g.vertex_count() == 2);

    CHECK_THROWS(g.add_edge(1, 1));
}

TEST_CASE("triangle_free") {
    CHECK(triangle_free(path_graph(5)));
    CHECK(triangle_free(complete_bipartite(2, 3)));
    CHECK_FALSE(triangle_free(complete_graph(3)));
    CHECK(triangle_free(cycle_graph(4)));
}

TEST_CASE("subdivide_all_edges") {
    graph k3 = complete_graph(3);
    graph s = subdivide_all_edges(k3);
    CHECK(s.vertex_count() == 6);
    CHECK(s.edge_count() == 6);
    CHECK(is_bipartite(s));  // chromatic number <= 2

    // C_6 in disguise
    CHECK(s == subdivide_all_edges(complete_graph(3)));

    graph single({0, 1}, {{0, 1}});
    graph ss = subdivide_all_edges(single);
    CHECK(ss.vertex_count() == 3);
    CHECK(is_bipartite(ss));
}

TEST_CASE("subdivision is always bipartite") {
    rng_t rng(7001);
    for (int t = 0; t < 25; ++t) {
        graph g = random_graph(rng, rand_int(rng, 2, 8));
        if (g.edge_count() == 0) continue;
        CHECK(is_bipartite(subdivide_all_edges(g)));
    }
}

TEST_CASE("split_to_4graph") {
    SUBCASE("K_5 unchanged") {
        auto [h, back] = split_to_4graph(complete_graph(5));
        CHECK(h == complete_graph(5));
        for (const auto& [v, orig] : back) CHECK(v == orig);
    }
    SUBCASE("star K_{1,5}: one split") {
        graph star = complete_bipartite(1, 5);
        auto [h, back] = split_to_4graph(star);
        CHECK(h.vertex_count() == 7);
        CHECK(h.max_degree() <= 4);
    }
    SUBCASE("K_6: every vertex split once") {
        auto [h, back] = split_to_4graph(complete_graph(6));
        CHECK(h.vertex_count() == 12);
        CHECK(h.max_degree() <= 4);
    }
    SUBCASE("contracting the split edges restores the graph") {
        rng_t rng(7002);
        for (int t = 0; t < 15; ++t) {
            graph g = random_graph(rng, rand_int(rng, 3, 8), 0.7);
            auto [h, back] = split_to_4graph(g);
            CHECK(h.max_degree() <= 4);
            // contract every edge between parts of the same original vertex,
            // then relabel through the back map: this must restore g
            graph restored = h;
            auto back_of = back;
            bool merged = true;
            while (merged) {
                merged = false;
                for (const auto& e : restored.edges()) {
                    if (back_of.at(e.first) != back_of.at(e.second)) continue;
                    vertex_id fresh = restored.fresh_id();
                    back_of[fresh] = back_of.at(e.first);
                    contract_edge(restored, e.first, e.second, fresh);
                    merged = true;
                    break;
                }
            }
            graph expect;
            for (vertex_id v : restored.vertices()) expect.add_vertex(back_of.at(v));
            for (const auto& e : restored.edges())
                expect.add_edge(back_of.at(e.first), back_of.at(e.second));
            CHECK(expect == g);
        }
    }
}

TEST_CASE("orient_with_out_edges") {
    SUBCASE("single edge") {
        graph g({0, 1}, {{0, 1}});
        auto o = orient_with_out_edges(g);
        CHECK(o.direction.size() == 1);
    }
    SUBCASE("K_5 Eulerian: all out-degrees 2") {
        auto o = orient_with_out_edges(complete_graph(5));
        std::map<vertex_id, int> out;
        for (const auto& [e, d] : o.direction) ++out[d.first];
        for (const auto& [v, k] : out) CHECK(k == 2);
        CHECK(o.direction.size() == 10);
    }
    SUBCASE("path toward root") {
        auto o = orient_with_out_edges(path_graph(3));
        CHECK(o.direction.size() == 2);
    }
    SUBCASE("degree-4 vertices always have an outgoing edge") {
        rng_t rng(7003);
        for (int t = 0; t < 30; ++t) {
            auto [g, d] = random_grid_drawing(rng, rand_int(rng, 2, 4), rand_int(rng, 2, 4));
            auto o = orient_with_out_edges(g);
            std::map<vertex_id, int> out;
            for (vertex_id v : g.vertices()) out[v] = 0;
            for (const auto& [e, dir] : o.direction) ++out[dir.first];
            for (vertex_id v : g.vertices())
                if (g.degree(v) == 4) CHECK(out[v] >= 1);
        }
    }
    SUBCASE("rejects disconnected and high degree") {
        graph two;
        two.add_vertex(0);
        two.add_vertex(1);
        CHECK_THROWS(orient_with_out_edges(two));
        CHECK_THROWS(orient_with_out_edges(complete_bipartite(1, 5)));
    }
}

TEST_CASE("apply_minor") {
    SUBCASE("contract one edge of C_4 gives K_3") {
        minor_recipe r;
        r.contracted_edges.push_back({0, 1});
        graph out = apply_minor(cycle_graph(4), r);
        CHECK(out.vertex_count() == 3);
        CHECK(out.edge_count() == 3);
        CHECK_FALSE(triangle_free(out));
    }
    SUBCASE("empty recipe is identity") {
        rng_t rng(7004);
        graph g = random_graph(rng, 6);
        CHECK(apply_minor(g, {}) == g);
    }
    SUBCASE("C_6 contract alternate edges gives K_3") {
        minor_recipe r;
        r.contracted_edges = {{0, 1}, {2, 3}, {4, 5}};
        graph out = apply_minor(cycle_graph(6), r);
        CHECK(out.vertex_count() == 3);
        CHECK(out.edge_count() == 3);
    }
    SUBCASE("deletions before contractions, invalid steps rejected") {
        graph g = cycle_graph(4);
        minor_recipe r;
        r.deleted_edges.insert({0, 1});
        r.contracted_edges.push_back({0, 1});
        CHECK_THROWS(apply_minor(g, r));
    }
    SUBCASE("never increases vertex count, never creates loops") {
        rng_t rng(7005);
        for (int t = 0; t < 20; ++t) {
            graph g = random_graph(rng, rand_int(rng, 3, 8));
            auto r = random_recipe(rng, g);
            graph out = apply_minor(g, r);
            CHECK(out.vertex_count() <= g.vertex_count());
            for (const auto& e : out.edges()) CHECK(e.first != e.second);
        }
    }
}
