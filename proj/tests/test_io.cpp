#include <doctest.h>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "constructions.hpp"
#include "io.hpp"
#include "svg.hpp"
#include "test_support.hpp"

using namespace gridpaths;
using namespace gridpaths::testing;

TEST_CASE("graph round-trip") {
    graph g({0, 1, 2}, {{0, 1}, {1, 2}});
    std::string text = serialize_graph(g);
    CHECK(parse_graph(text) == g);

    rng_t rng(7701);
    for (int t = 0; t < 100; ++t) {
        graph r = random_graph(rng, rand_int(rng, 1, 12));
        CHECK(parse_graph(serialize_graph(r)) == r);
    }

    SUBCASE("serializer requires dense 0-based ids") {
        graph sparse({5, 9}, {{5, 9}});
        CHECK_THROWS(serialize_graph(sparse));
    }
}

TEST_CASE("graph parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const parse_error& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("2\n") == 1);              // malformed header
    CHECK(line_of("2 1\n0 0\n") == 2);       // loop
    CHECK(line_of("2 1\n1 0\n") == 2);       // u > v
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3);  // duplicate edge
    CHECK(line_of("2 1\n0 5\n") == 2);       // id out of range
    CHECK(line_of("2 2\n0 1\n") == 2);       // edge count mismatch
    CHECK(line_of("2 1\n0 x\n") == 2);       // non-numeric token
}

TEST_CASE("interval round-trip") {
    rng_t rng(7702);
    for (int t = 0; t < 100; ++t) {
        auto ir = random_connected_intervals(rng, rand_int(rng, 1, 15), 4);
        CHECK(parse_intervals(serialize_intervals(ir)).intervals == ir.intervals);
    }
    CHECK_THROWS_AS(parse_intervals("0 1\n"), parse_error);     // missing field
    CHECK_THROWS_AS(parse_intervals("0 3 1\n"), parse_error);   // l >= r
    CHECK_THROWS_AS(parse_intervals("0 1 2\n0 3 4\n"), parse_error);  // duplicate id
}

TEST_CASE("decomposition round-trip") {
    path_decomposition pd;
    pd.bags = {{0, 1, 5}, {1, 2, 5}, {2, 4, 5}, {2, 3, 4}};
    auto back = parse_decomposition(serialize_decomposition(pd));
    CHECK(back.bags == pd.bags);
    CHECK(parse_decomposition("").bags.empty());
    CHECK_THROWS_AS(parse_decomposition("1 2 1\n"), parse_error);  // duplicate in bag
}

TEST_CASE("representation round-trip") {
    rng_t rng(7703);
    SUBCASE("random proper VPGs after origin normalization") {
        for (int t = 0; t < 100; ++t) {
            auto rep = random_proper_vpg(rng, rand_int(rng, 1, 8), coin(rng));
            std::string text = serialize_representation(rep);
            auto back = parse_representation(text, rep.mode);
            CHECK(back.mode == rep.mode);
            // serialization normalizes to origin (1,1): a second pass is exact
            CHECK(serialize_representation(back) == text);
            CHECK(induced_graph_vpg(back) == induced_graph_vpg(rep));
        }
    }
    SUBCASE("closed paths keep the marker") {
        grid_representation rep;
        rep.mode = rep_mode::epg;
        rep.paths.emplace(0, grid_path({{1, 1}, {2, 1}, {2, 2}, {1, 2}}, true));
        auto back = parse_representation(serialize_representation(rep));
        CHECK(back.paths.at(0).closed());
    }
    SUBCASE("parse errors") {
        auto line_of = [](const std::string& text) -> std::size_t {
            try {
                parse_representation(text);
            } catch (const parse_error& e) {
                return e.line;
            }
            return 0;
        };
        CHECK(line_of("0 :\n") == 1);               // empty corner list
        CHECK(line_of("0 : 1,1\n0 : 2,2\n") == 2);  // duplicate vertex
        CHECK(line_of("0 : 1,1 2,2\n") == 1);       // diagonal segment
        CHECK(line_of("0 : 1;1\n") == 1);           // bad point syntax
    }
}

TEST_CASE("drawing round-trip") {
    rng_t rng(7704);
    for (int t = 0; t < 50; ++t) {
        auto [g, d] = random_grid_drawing(rng, rand_int(rng, 2, 4), rand_int(rng, 2, 4));
        auto back = parse_drawing(serialize_drawing(d));
        CHECK(back.positions == d.positions);
        CHECK(back.routes == d.routes);
    }
    CHECK_THROWS_AS(parse_drawing("0 1 1\n"), parse_error);  // missing section header
}

TEST_CASE("recipe round-trip") {
    rng_t rng(7705);
    for (int t = 0; t < 50; ++t) {
        graph g = random_graph(rng, rand_int(rng, 3, 8));
        auto r = random_recipe(rng, g);
        auto back = parse_recipe(serialize_recipe(r));
        CHECK(back.deleted_vertices == r.deleted_vertices);
        CHECK(back.deleted_edges == r.deleted_edges);
        CHECK(back.contracted_edges == r.contracted_edges);
    }
    CHECK_THROWS_AS(parse_recipe("shrink 0 1\n"), parse_error);  // unknown verb
}

TEST_CASE("report and analysis output") {
    graph g = complete_graph(4);
    auto rep = epg_any_graph(g);
    auto report = validate(rep, g);

    SUBCASE("JSON reports are well-formed and carry the verdict") {
        auto j = nlohmann::json::parse(report_json(report));
        CHECK(j.at("exact").get<bool>());
        CHECK(j.at("stats").at("width").get<int>() <= 12);
    }
    SUBCASE("text report mentions exactness") {
        CHECK(report_text(report).find("exact") != std::string::npos);
    }
    SUBCASE("analysis JSON includes bound verdicts") {
        std::vector<bound_report> bounds{projection_pathwidth_bound(rep),
                                         cross_check_pathwidth(rep, g)};
        auto j = nlohmann::json::parse(analysis_json(stats(rep), bounds));
        REQUIRE(j.at("bounds").size() == 2);
        for (const auto& b : j.at("bounds")) CHECK(b.at("holds").get<bool>());
    }
}

TEST_CASE("render_svg") {
    SUBCASE("deterministic bytes") {
        auto rep = complete_vpg(5);
        CHECK(render_svg(rep) == render_svg(rep));
        REQUIRE(!render_svg(rep).empty());
    }
    SUBCASE("empty representation renders an empty document") {
        grid_representation rep;
        std::string svg = render_svg(rep);
        CHECK(svg.find("<svg") == 0);
        CHECK(svg.find("width=\"0\"") != std::string::npos);
    }
    SUBCASE("one polyline per vertex-path") {
        auto rep = complete_vpg(5);
        std::string svg = render_svg(rep);
        std::size_t count = 0;
        for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
             pos = svg.find("<polyline", pos + 1))
            ++count;
        CHECK(count == 5);
    }
    SUBCASE("shared grid-edges get distinct offsets") {
        grid_representation rep;
        rep.mode = rep_mode::epg;
        rep.paths.emplace(0, grid_path({{1, 1}, {3, 1}}));
        rep.paths.emplace(1, grid_path({{1, 1}, {3, 1}}));
        std::string svg = render_svg(rep);
        // the two polylines must not coincide
        auto first = svg.find("points=\"");
        auto second = svg.find("points=\"", first + 1);
        REQUIRE(second != std::string::npos);
        auto end1 = svg.find('"', first + 8), end2 = svg.find('"', second + 8);
        CHECK(svg.substr(first + 8, end1 - first - 8) !=
              svg.substr(second + 8, end2 - second - 8));
    }
    SUBCASE("tiny cells rejected") {
        render_style style;
        style.cell = 2;
        CHECK_THROWS(render_svg(complete_vpg(2), style));
    }
}
