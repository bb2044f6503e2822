#include <doctest.h>

#include "intervals.hpp"
#include "test_support.hpp"

using namespace gridpaths;
using namespace gridpaths::testing;

TEST_CASE("normalize") {
    SUBCASE("distinct endpoints: rank remap keeps the graph") {
        interval_representation ir;
        ir.intervals = {{1, {1, 3}}, {2, {2, 5}}, {3, {4, 6}}};
        auto out = normalize(ir);
        CHECK(out.is_normalized());
        CHECK(induced_interval_graph(out) == induced_interval_graph(ir));
    }
    SUBCASE("degenerate interval rejected") {
        interval_representation ir;
        ir.intervals = {{1, {7, 7}}};
        CHECK_THROWS(normalize(ir));
    }
    SUBCASE("touching endpoints stay intersecting") {
        interval_representation ir;
        ir.intervals = {{1, {1, 2}}, {2, {2, 3}}};
        auto out = normalize(ir);
        CHECK(out.is_normalized());
        CHECK(induced_interval_graph(out).has_edge(1, 2));
    }
}

TEST_CASE("induced_interval_graph") {
    interval_representation ir;
    ir.intervals = {{1, {1, 2}}, {2, {3, 4}}, {3, {2, 5}}};
    graph g = induced_interval_graph(ir);
    CHECK_FALSE(g.has_edge(1, 2));  // disjoint
    CHECK(g.has_edge(1, 3));        // touching
    CHECK(g.has_edge(2, 3));        // nested
}

TEST_CASE("clique_number") {
    interval_representation disjoint;
    for (int v = 0; v < 4; ++v) disjoint.intervals[v] = {2 * v + 1, 2 * v + 2};
    CHECK(clique_number(disjoint) == 1);

    interval_representation nested;
    for (int v = 0; v < 4; ++v) nested.intervals[v] = {v + 1, 20 - v};
    CHECK(clique_number(nested) == 4);

    interval_representation mixed;
    mixed.intervals = {{1, {1, 4}}, {2, {2, 6}}, {3, {3, 5}}, {4, {7, 8}}};
    CHECK(clique_number(mixed) == 3);
}

TEST_CASE("greedy_colour uses exactly clique_number colours") {
    rng_t rng(7201);
    for (int t = 0; t < 500; ++t) {
        auto ir = random_connected_intervals(rng, rand_int(rng, 1, 20), rand_int(rng, 2, 6));
        auto colour = greedy_colour(ir);
        graph g = induced_interval_graph(ir);
        for (const auto& e : g.edges()) CHECK(colour.at(e.first) != colour.at(e.second));
        int used = 0;
        for (const auto& [v, c] : colour) used = std::max(used, c + 1);
        CHECK(static_cast<std::size_t>(used) == clique_number(ir));
    }
}

TEST_CASE("components") {
    interval_representation ir;
    ir.intervals = {{1, {1, 2}}, {2, {3, 4}}, {3, {5, 8}}, {4, {6, 7}}};
    auto parts = components(ir);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].intervals.count(1));
    CHECK(parts[1].intervals.count(2));
    CHECK(parts[2].size() == 2);

    rng_t rng(7202);
    auto connected = random_connected_intervals(rng, 9, 3);
    CHECK(components(connected).size() == 1);
}

TEST_CASE("decomposition_to_intervals") {
    SUBCASE("two bags") {
        path_decomposition pd;
        pd.bags = {{1, 2}, {2, 3}};
        CHECK(pd.width() == 1);
        auto ir = decomposition_to_intervals(pd);
        CHECK(ir.is_normalized());
        CHECK(clique_number(ir) == 2);
        graph g = induced_interval_graph(ir);
        CHECK(g.has_edge(1, 2));
        CHECK(g.has_edge(2, 3));
        CHECK_FALSE(g.has_edge(1, 3));
    }
    SUBCASE("single bag is a clique") {
        path_decomposition pd;
        pd.bags = {{1, 2, 3}};
        auto ir = decomposition_to_intervals(pd);
        CHECK(clique_number(ir) == 3);
        CHECK(induced_interval_graph(ir).edge_count() == 3);
    }
    SUBCASE("non-contiguous occurrence rejected") {
        path_decomposition pd;
        pd.bags = {{1}, {2}, {1}};
        CHECK_THROWS(decomposition_to_intervals(pd));
    }
    SUBCASE("covers every edge of a decomposed graph") {
        // width-3 decomposition of the 3x3 grid graph
        graph g = grid_graph(3, 3);
        path_decomposition pd;
        pd.bags = {{0, 1, 3, 4}, {1, 3, 4, 6}, {1, 4, 6, 7}, {1, 2, 4, 7}, {2, 4, 5, 7}, {2, 5, 7, 8}};
        CHECK(pd.width() == 3);
        auto ir = decomposition_to_intervals(pd);
        CHECK(clique_number(ir) == 4);
        graph h = induced_interval_graph(ir);
        for (const auto& e : g.edges()) CHECK(h.has_edge(e.first, e.second));
    }
}
