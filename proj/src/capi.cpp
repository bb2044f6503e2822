#include "gridpaths.h"

#include <cstring>

#include "bounds.hpp"
#include "constructions.hpp"
#include "io.hpp"
#include "svg.hpp"
#include "transforms.hpp"

using namespace gridpaths;

struct gp_graph {
    graph g;
};

struct gp_rep {
    grid_representation rep;
};

namespace {

thread_local std::string last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
gp_status guarded(F&& f) {
    try {
        f();
        return GP_OK;
    } catch (const parse_error& e) {
        last_error = e.what();
        return GP_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return GP_ERR_INVALID;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GP_ERR_INTERNAL;
    }
}

gp_status require(bool ok, const char* message) {
    if (ok) return GP_OK;
    last_error = message;
    return GP_ERR_INVALID;
}

}  // namespace

const char* gp_last_error(void) { return last_error.c_str(); }

void gp_string_free(char* s) { delete[] s; }

gp_status gp_graph_parse(const char* text, gp_graph** out) {
    if (auto st = require(text && out, "gp_graph_parse: NULL argument")) return st;
    return guarded([&] { *out = new gp_graph{parse_graph(text)}; });
}

char* gp_graph_serialize(const gp_graph* g) {
    if (!g) return nullptr;
    try {
        return dup_string(serialize_graph(g->g));
    } catch (const std::exception& e) {
        last_error = e.what();
        return nullptr;
    }
}

void gp_graph_free(gp_graph* g) { delete g; }

gp_status gp_rep_parse(const char* text, const char* mode, gp_rep** out) {
    if (auto st = require(text && mode && out, "gp_rep_parse: NULL argument")) return st;
    return guarded([&] { *out = new gp_rep{parse_representation(text, rep_mode_from_string(mode))}; });
}

char* gp_rep_serialize(const gp_rep* rep) {
    if (!rep) return nullptr;
    return dup_string(serialize_representation(rep->rep));
}

void gp_rep_free(gp_rep* rep) { delete rep; }

gp_status gp_construct_complete(const gp_graph* g, gp_rep** out) {
    if (auto st = require(g && out, "gp_construct_complete: NULL argument")) return st;
    return guarded([&] { *out = new gp_rep{epg_any_graph(g->g)}; });
}

gp_status gp_construct_pathwidth(const gp_graph* g, const char* source_text,
                                 int is_decomposition, gp_rep** out) {
    if (auto st = require(g && source_text && out, "gp_construct_pathwidth: NULL argument"))
        return st;
    return guarded([&] {
        interval_representation ir = is_decomposition
                                         ? decomposition_to_intervals(parse_decomposition(source_text))
                                         : normalize(parse_intervals(source_text));
        *out = new gp_rep{pathwidth_epg(g->g, ir)};
    });
}

gp_status gp_construct_orthogonal(const gp_graph* g, const char* drawing_text,
                                  const char* recipe_text, int open_paths, gp_rep** out) {
    if (auto st = require(g && drawing_text && out, "gp_construct_orthogonal: NULL argument"))
        return st;
    return guarded([&] {
        orthogonal_drawing d = parse_drawing(drawing_text);
        minor_recipe r = recipe_text ? parse_recipe(recipe_text) : minor_recipe{};
        *out = new gp_rep{orth_to_epg(d, g->g, r, open_paths != 0)};
    });
}

gp_status gp_apply_minor(const gp_graph* g, const char* recipe_text, gp_graph** out) {
    if (auto st = require(g && recipe_text && out, "gp_apply_minor: NULL argument")) return st;
    return guarded([&] { *out = new gp_graph{apply_minor(g->g, parse_recipe(recipe_text))}; });
}

gp_status gp_validate(const gp_rep* rep, const gp_graph* g, int json, int* exact,
                      char** report_out) {
    if (auto st = require(rep && g && exact, "gp_validate: NULL argument")) return st;
    return guarded([&] {
        auto report = validate(rep->rep, g->g);
        *exact = report.exact ? 1 : 0;
        if (report_out) *report_out = dup_string(json ? report_json(report) : report_text(report));
    });
}

gp_status gp_analyze(const gp_rep* rep, const gp_graph* g, int with_bounds, int json,
                     char** out) {
    if (auto st = require(rep && out, "gp_analyze: NULL argument")) return st;
    return guarded([&] {
        auto s = stats(rep->rep);
        std::vector<bound_report> bounds;
        if (with_bounds) {
            bounds.push_back(projection_pathwidth_bound(rep->rep));
            if (g) {
                bounds.push_back(check_edge_count_bound(rep->rep, g->g));
                bounds.push_back(cross_check_pathwidth(rep->rep, g->g));
            }
        }
        *out = dup_string(json ? analysis_json(s, bounds) : analysis_text(s, bounds));
    });
}

gp_status gp_render_svg(const gp_rep* rep, int cell, int labels, char** out) {
    if (auto st = require(rep && out, "gp_render_svg: NULL argument")) return st;
    return guarded([&] {
        render_style style;
        style.cell = cell;
        style.labels = labels != 0;
        *out = dup_string(render_svg(rep->rep, style));
    });
}
