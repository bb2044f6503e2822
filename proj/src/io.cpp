#include "io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gridpaths {

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, std::size_t line) {
    std::size_t used = 0;
    int value;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw parse_error(line, "trailing characters in '" + tok + "'");
    return value;
}

// "x,y"
grid_point parse_point(const std::string& tok, std::size_t line) {
    auto comma = tok.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == tok.size())
        throw parse_error(line, "expected 'x,y', got '" + tok + "'");
    return {parse_int(tok.substr(0, comma), line), parse_int(tok.substr(comma + 1), line)};
}

std::string point_str(grid_point p) { return std::to_string(p.x) + "," + std::to_string(p.y); }

// Corner list after a "name... :" prefix; consumes an optional trailing "closed".
grid_path parse_corner_list(const std::vector<std::string>& toks, std::size_t from,
                            std::size_t line) {
    bool closed = false;
    std::size_t end = toks.size();
    if (end > from && toks[end - 1] == "closed") {
        closed = true;
        --end;
    }
    if (end == from) throw parse_error(line, "empty corner list");
    std::vector<grid_point> corners;
    for (std::size_t i = from; i < end; ++i) corners.push_back(parse_point(toks[i], line));
    try {
        return grid_path(std::move(corners), closed);
    } catch (const std::exception& e) {
        throw parse_error(line, e.what());
    }
}

std::string corner_list_str(const grid_path& p) {
    std::string out;
    for (const auto& c : p.corners()) {
        if (!out.empty()) out += ' ';
        out += point_str(c);
    }
    if (p.closed()) out += " closed";
    return out;
}

}  // namespace

graph parse_graph(const std::string& text) {
    auto lines = lines_of(text);
    if (lines.empty()) throw parse_error(1, "missing header line 'n m'");
    auto head = tokens_of(lines[0]);
    if (head.size() != 2) throw parse_error(1, "header must be 'n m'");
    int n = parse_int(head[0], 1), m = parse_int(head[1], 1);
    if (n < 0 || m < 0) throw parse_error(1, "n and m must be non-negative");

    graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    int seen = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() != 2) throw parse_error(i + 1, "edge line must be 'u v'");
        int u = parse_int(toks[0], i + 1), v = parse_int(toks[1], i + 1);
        if (u < 0 || v >= n) throw parse_error(i + 1, "vertex id out of range [0," +
                                                           std::to_string(n) + ")");
        if (u == v) throw parse_error(i + 1, "loops are not allowed");
        if (u > v) throw parse_error(i + 1, "edges must be written u < v");
        if (g.has_edge(u, v)) throw parse_error(i + 1, "duplicate edge");
        g.add_edge(u, v);
        ++seen;
    }
    if (seen != m)
        throw parse_error(lines.size(), "header announces " + std::to_string(m) + " edges, found " +
                                            std::to_string(seen));
    return g;
}

std::string serialize_graph(const graph& g) {
    int n = static_cast<int>(g.vertex_count());
    for (vertex_id v : g.vertices()) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("graph files need dense 0-based ids; found " +
                                        std::to_string(v));
    }
    std::string out = std::to_string(n) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
    return out;
}

interval_representation parse_intervals(const std::string& text) {
    interval_representation ir;
    auto lines = lines_of(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() != 3) throw parse_error(i + 1, "interval line must be 'v l r'");
        int v = parse_int(toks[0], i + 1);
        int l = parse_int(toks[1], i + 1), r = parse_int(toks[2], i + 1);
        if (ir.intervals.count(v)) throw parse_error(i + 1, "duplicate vertex " + std::to_string(v));
        if (l > r) throw parse_error(i + 1, "interval has l > r");
        ir.intervals[v] = {l, r};
    }
    return ir;
}

std::string serialize_intervals(const interval_representation& ir) {
    std::string out;
    for (const auto& [v, iv] : ir.intervals)
        out += std::to_string(v) + " " + std::to_string(iv.first) + " " +
               std::to_string(iv.second) + "\n";
    return out;
}

path_decomposition parse_decomposition(const std::string& text) {
    path_decomposition pd;
    auto lines = lines_of(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        std::set<vertex_id> bag;
        for (const auto& t : toks) {
            if (!bag.insert(parse_int(t, i + 1)).second)
                throw parse_error(i + 1, "duplicate vertex in bag");
        }
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

std::string serialize_decomposition(const path_decomposition& pd) {
    std::string out;
    for (const auto& bag : pd.bags) {
        std::string line;
        for (vertex_id v : bag) {
            if (!line.empty()) line += ' ';
            line += std::to_string(v);
        }
        out += line + "\n";
    }
    return out;
}

grid_representation parse_representation(const std::string& text, rep_mode mode) {
    grid_representation rep;
    rep.mode = mode;
    auto lines = lines_of(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() < 3 || toks[1] != ":")
            throw parse_error(i + 1, "path line must be 'v : x1,y1 ...'");
        int v = parse_int(toks[0], i + 1);
        if (rep.paths.count(v)) throw parse_error(i + 1, "duplicate vertex " + std::to_string(v));
        rep.paths.emplace(v, parse_corner_list(toks, 2, i + 1));
    }
    return rep;
}

std::string serialize_representation(const grid_representation& rep) {
    grid_representation shifted = rep;
    if (!rep.paths.empty()) {
        auto box = compute_bounding_box(rep.all_paths());
        shifted = rep.translated(1 - box.origin.x, 1 - box.origin.y);
    }
    std::string out;
    for (const auto& [v, p] : shifted.paths)
        out += std::to_string(v) + " : " + corner_list_str(p) + "\n";
    return out;
}

orthogonal_drawing parse_drawing(const std::string& text) {
    orthogonal_drawing d;
    auto lines = lines_of(text);
    int section = 0;  // 0 = none yet, 1 = vertices, 2 = edges
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() == 1 && toks[0] == "vertices") {
            section = 1;
            continue;
        }
        if (toks.size() == 1 && toks[0] == "edges") {
            section = 2;
            continue;
        }
        if (section == 1) {
            if (toks.size() != 3) throw parse_error(i + 1, "vertex line must be 'v x y'");
            int v = parse_int(toks[0], i + 1);
            if (d.positions.count(v))
                throw parse_error(i + 1, "duplicate vertex " + std::to_string(v));
            d.positions[v] = {parse_int(toks[1], i + 1), parse_int(toks[2], i + 1)};
        } else if (section == 2) {
            if (toks.size() < 4 || toks[2] != ":")
                throw parse_error(i + 1, "edge line must be 'u v : x1,y1 ...'");
            int u = parse_int(toks[0], i + 1), v = parse_int(toks[1], i + 1);
            if (u == v) throw parse_error(i + 1, "loops are not allowed");
            auto key = ordered_pair(u, v);
            if (d.routes.count(key)) throw parse_error(i + 1, "duplicate edge route");
            d.routes.emplace(key, parse_corner_list(toks, 3, i + 1));
        } else {
            throw parse_error(i + 1, "expected a 'vertices' or 'edges' section header");
        }
    }
    return d;
}

std::string serialize_drawing(const orthogonal_drawing& d) {
    std::string out = "vertices\n";
    for (const auto& [v, p] : d.positions)
        out += std::to_string(v) + " " + std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    out += "edges\n";
    for (const auto& [e, route] : d.routes)
        out += std::to_string(e.first) + " " + std::to_string(e.second) + " : " +
               corner_list_str(route) + "\n";
    return out;
}

minor_recipe parse_recipe(const std::string& text) {
    minor_recipe r;
    auto lines = lines_of(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        const auto& verb = toks[0];
        if (verb == "delete-vertex" && toks.size() == 2) {
            r.deleted_vertices.insert(parse_int(toks[1], i + 1));
        } else if (verb == "delete-edge" && toks.size() == 3) {
            r.deleted_edges.insert(ordered_pair(parse_int(toks[1], i + 1),
                                                parse_int(toks[2], i + 1)));
        } else if (verb == "contract" && toks.size() == 3) {
            r.contracted_edges.push_back(ordered_pair(parse_int(toks[1], i + 1),
                                                      parse_int(toks[2], i + 1)));
        } else {
            throw parse_error(i + 1, "expected 'delete-vertex v', 'delete-edge u v' or "
                                     "'contract u v'");
        }
    }
    return r;
}

std::string serialize_recipe(const minor_recipe& r) {
    std::string out;
    for (vertex_id v : r.deleted_vertices) out += "delete-vertex " + std::to_string(v) + "\n";
    for (const auto& e : r.deleted_edges)
        out += "delete-edge " + std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
    for (const auto& e : r.contracted_edges)
        out += "contract " + std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
    return out;
}

namespace {

std::string pair_list(const std::vector<vertex_pair>& ps) {
    std::string out;
    for (const auto& [u, v] : ps) {
        if (!out.empty()) out += ' ';
        out += "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
    return out.empty() ? "none" : out;
}

nlohmann::json stats_json_obj(const representation_stats& s) {
    return {{"width", s.box.w},
            {"height", s.box.h},
            {"distinct_grid_edges", s.distinct_grid_edges},
            {"multiplicity", s.multiplicity},
            {"monotone_class", s.monotone_class}};
}

nlohmann::json bound_json_obj(const bound_report& b) {
    nlohmann::json j = {{"name", b.name},
                        {"inequality", b.inequality},
                        {"applicable", b.applicable},
                        {"holds", b.holds}};
    if (!b.witness.empty()) j["witness"] = b.witness;
    return j;
}

std::string bound_text(const bound_report& b) {
    std::string out = "bound: " + b.name + "\n";
    if (!b.applicable) return out + "  " + b.inequality + "\n";
    out += "  " + b.inequality + "\n";
    out += std::string("  holds: ") + (b.holds ? "yes" : "no") + "\n";
    if (!b.witness.empty()) out += "  witness: " + b.witness + "\n";
    return out;
}

}  // namespace

std::string stats_text(const representation_stats& s) {
    std::string out;
    out += "width: " + std::to_string(s.box.w) + "\n";
    out += "height: " + std::to_string(s.box.h) + "\n";
    out += "distinct_grid_edges: " + std::to_string(s.distinct_grid_edges) + "\n";
    out += "multiplicity: " + std::to_string(s.multiplicity) + "\n";
    out += "monotone_class: " + s.monotone_class + "\n";
    return out;
}

std::string report_text(const validation_report& report) {
    std::string out;
    out += std::string("exact: ") + (report.exact ? "yes" : "no") + "\n";
    out += "missing_edges: " + pair_list(report.missing) + "\n";
    out += "excess_edges: " + pair_list(report.excess) + "\n";
    if (report.properness) {
        out += std::string("proper: ") + (report.properness->proper ? "yes" : "no") + "\n";
        if (!report.properness->proper)
            out += "properness_violation: " + report.properness->violation + "\n";
    }
    for (const auto& [v, cls] : report.path_class)
        out += "path_class " + std::to_string(v) + ": " + cls + "\n";
    out += stats_text(report.stats);
    return out;
}

std::string report_json(const validation_report& report) {
    nlohmann::json j;
    j["exact"] = report.exact;
    j["missing_edges"] = nlohmann::json::array();
    for (const auto& [u, v] : report.missing) j["missing_edges"].push_back({u, v});
    j["excess_edges"] = nlohmann::json::array();
    for (const auto& [u, v] : report.excess) j["excess_edges"].push_back({u, v});
    if (report.properness) {
        j["proper"] = report.properness->proper;
        if (!report.properness->proper)
            j["properness_violation"] = report.properness->violation;
    }
    j["path_class"] = nlohmann::json::object();
    for (const auto& [v, cls] : report.path_class) j["path_class"][std::to_string(v)] = cls;
    j["stats"] = stats_json_obj(report.stats);
    return j.dump(2) + "\n";
}

std::string analysis_text(const representation_stats& s, const std::vector<bound_report>& bounds) {
    std::string out = stats_text(s);
    for (const auto& b : bounds) out += bound_text(b);
    return out;
}

std::string analysis_json(const representation_stats& s, const std::vector<bound_report>& bounds) {
    nlohmann::json j;
    j["stats"] = stats_json_obj(s);
    j["bounds"] = nlohmann::json::array();
    for (const auto& b : bounds) j["bounds"].push_back(bound_json_obj(b));
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace gridpaths
