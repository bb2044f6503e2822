#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gridpaths.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_semantic = 1;
constexpr int exit_usage = 2;

struct cli_failure {
    int code;
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cli_failure{exit_usage, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cli_failure{exit_usage, "cannot write " + path};
    out << content;
}

[[noreturn]] void fail(gp_status st) {
    throw cli_failure{st == GP_ERR_PARSE ? exit_usage : exit_semantic, gp_last_error()};
}

struct owned_string {
    char* s = nullptr;
    ~owned_string() { gp_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

using graph_ptr = std::unique_ptr<gp_graph, decltype(&gp_graph_free)>;
using rep_ptr = std::unique_ptr<gp_rep, decltype(&gp_rep_free)>;

graph_ptr load_graph(const std::string& path) {
    gp_graph* g = nullptr;
    if (auto st = gp_graph_parse(slurp(path).c_str(), &g)) fail(st);
    return {g, gp_graph_free};
}

rep_ptr load_rep(const std::string& path, const std::string& mode) {
    gp_rep* r = nullptr;
    if (auto st = gp_rep_parse(slurp(path).c_str(), mode.c_str(), &r)) fail(st);
    return {r, gp_rep_free};
}

int run_construct(const std::string& method, const std::string& graph_file,
                  const std::string& intervals_file, const std::string& decomposition_file,
                  const std::string& drawing_file, const std::string& minor_file,
                  bool open_paths, const std::string& out_file, bool json) {
    auto g = load_graph(graph_file);
    graph_ptr target{nullptr, gp_graph_free};
    gp_rep* raw = nullptr;

    if (method == "complete") {
        if (auto st = gp_construct_complete(g.get(), &raw)) fail(st);
    } else if (method == "pathwidth") {
        if (intervals_file.empty() == decomposition_file.empty())
            throw cli_failure{exit_usage,
                              "pathwidth needs exactly one of --intervals / --decomposition"};
        bool from_pd = !decomposition_file.empty();
        std::string source = slurp(from_pd ? decomposition_file : intervals_file);
        if (auto st = gp_construct_pathwidth(g.get(), source.c_str(), from_pd, &raw)) fail(st);
    } else {  // orthogonal
        if (drawing_file.empty()) throw cli_failure{exit_usage, "orthogonal needs --drawing"};
        std::string drawing = slurp(drawing_file);
        std::string recipe = minor_file.empty() ? "" : slurp(minor_file);
        if (auto st = gp_construct_orthogonal(g.get(), drawing.c_str(),
                                              minor_file.empty() ? nullptr : recipe.c_str(),
                                              open_paths ? 1 : 0, &raw))
            fail(st);
        gp_graph* minor = nullptr;
        if (auto st = gp_apply_minor(g.get(), recipe.c_str(), &minor)) fail(st);
        target = graph_ptr{minor, gp_graph_free};
    }
    rep_ptr rep{raw, gp_rep_free};

    owned_string text;
    text.s = gp_rep_serialize(rep.get());
    if (!out_file.empty()) spit(out_file, text.str());

    int exact = 0;
    owned_string report;
    if (auto st = gp_validate(rep.get(), target ? target.get() : g.get(), json ? 1 : 0, &exact,
                              &report.s))
        fail(st);
    std::cout << report.str();
    return exact ? exit_ok : exit_semantic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-based EPG/VPG representations: construct, validate, analyze, render"};
    app.require_subcommand(1);

    std::string method, graph_file, intervals_file, decomposition_file, drawing_file, minor_file;
    std::string rep_file, out_file, mode = "epg", format = "text";
    bool open_paths = true, bounds = false, labels = true;
    int cell = 24;

    auto* construct = app.add_subcommand("construct", "build a representation of a graph");
    construct->add_option("--method", method, "complete | pathwidth | orthogonal")
        ->required()
        ->check(CLI::IsMember({"complete", "pathwidth", "orthogonal"}));
    construct->add_option("--graph", graph_file, "graph file")->required();
    construct->add_option("--intervals", intervals_file, "interval file (pathwidth)");
    construct->add_option("--decomposition", decomposition_file,
                          "path-decomposition file (pathwidth)");
    construct->add_option("--drawing", drawing_file, "orthogonal drawing file");
    construct->add_option("--minor", minor_file, "minor recipe file (orthogonal)");
    construct->add_flag("--open-paths,!--closed-paths", open_paths,
                        "open the traced paths (orthogonal; default on)");
    construct->add_option("--out", out_file, "representation output file");
    construct->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* validate = app.add_subcommand("validate", "check a representation against a graph");
    validate->add_option("--graph", graph_file, "graph file")->required();
    validate->add_option("--rep", rep_file, "representation file")->required();
    validate->add_option("--mode", mode, "epg | vpg | proper-vpg")
        ->check(CLI::IsMember({"epg", "vpg", "proper-vpg"}));
    validate->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* analyze = app.add_subcommand("analyze", "statistics and bound reports");
    analyze->add_option("--rep", rep_file, "representation file")->required();
    analyze->add_option("--graph", graph_file, "graph file (enables graph-dependent bounds)");
    analyze->add_flag("--bounds", bounds, "include bound reports");
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* render = app.add_subcommand("render", "SVG figure of a representation");
    render->add_option("--rep", rep_file, "representation file")->required();
    render->add_option("-o,--out", out_file, "SVG output file")->required();
    render->add_option("--cell", cell, "pixels per grid unit (>= 4)");
    render->add_flag("--labels,!--no-labels", labels, "draw vertex labels (default on)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostream& out = e.get_exit_code() == 0 ? std::cout : std::cerr;
        CLI::App dummy;
        int code = app.exit(e, out, out);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        bool json = format == "json";
        if (construct->parsed())
            return run_construct(method, graph_file, intervals_file, decomposition_file,
                                 drawing_file, minor_file, open_paths, out_file, json);
        if (validate->parsed()) {
            auto g = load_graph(graph_file);
            auto rep = load_rep(rep_file, mode);
            int exact = 0;
            owned_string report;
            if (auto st = gp_validate(rep.get(), g.get(), json ? 1 : 0, &exact, &report.s))
                fail(st);
            std::cout << report.str();
            return exact ? exit_ok : exit_semantic;
        }
        if (analyze->parsed()) {
            auto rep = load_rep(rep_file, "epg");
            graph_ptr g{nullptr, gp_graph_free};
            if (!graph_file.empty()) g = load_graph(graph_file);
            owned_string out;
            if (auto st = gp_analyze(rep.get(), g.get(), bounds ? 1 : 0, json ? 1 : 0, &out.s))
                fail(st);
            std::cout << out.str();
            return exit_ok;
        }
        // render
        auto rep = load_rep(rep_file, "epg");
        owned_string svg;
        if (auto st = gp_render_svg(rep.get(), cell, labels ? 1 : 0, &svg.s)) fail(st);
        spit(out_file, svg.str());
        return exit_ok;
    } catch (const cli_failure& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_semantic;
    }
}
