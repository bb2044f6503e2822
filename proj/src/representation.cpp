#include "representation.hpp"

#include <algorithm>

namespace gridpaths {

std::string to_string(rep_mode m) {
    switch (m) {
        case rep_mode::vpg: return "vpg";
        case rep_mode::proper_vpg: return "proper-vpg";
        case rep_mode::epg: return "epg";
    }
    return "?";
}

rep_mode rep_mode_from_string(const std::string& s) {
    if (s == "vpg") return rep_mode::vpg;
    if (s == "proper-vpg") return rep_mode::proper_vpg;
    if (s == "epg") return rep_mode::epg;
    throw std::invalid_argument("unknown representation mode '" + s + "'");
}

grid_representation grid_representation::translated(int dx, int dy) const {
    grid_representation out;
    out.mode = mode;
    for (const auto& [v, p] : paths) out.paths.emplace(v, p.translated(dx, dy));
    return out;
}

std::vector<grid_path> grid_representation::all_paths() const {
    std::vector<grid_path> out;
    out.reserve(paths.size());
    for (const auto& [v, p] : paths) out.push_back(p);
    return out;
}

namespace {

// Maximal straight run of a path: a fixed line coordinate and a range along it.
// Single-point paths yield one degenerate horizontal run.
struct segment {
    bool horizontal;
    int line;  // y for horizontal runs, x for vertical ones
    int lo, hi;
};

std::vector<segment> segments_of(const grid_path& p) {
    std::vector<segment> segs;
    const auto& c = p.corners();
    if (c.size() == 1) return {{true, c[0].y, c[0].x, c[0].x}};
    std::size_t n = c.size() - 1 + (p.closed() ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        grid_point a = c[i], b = c[(i + 1) % c.size()];
        if (a.y == b.y)
            segs.push_back({true, a.y, std::min(a.x, b.x), std::max(a.x, b.x)});
        else
            segs.push_back({false, a.x, std::min(a.y, b.y), std::max(a.y, b.y)});
    }
    return segs;
}

bool share_grid_edge(const std::vector<segment>& a, const std::vector<segment>& b) {
    for (const auto& s : a) {
        for (const auto& t : b) {
            if (s.horizontal != t.horizontal || s.line != t.line) continue;
            if (std::min(s.hi, t.hi) - std::max(s.lo, t.lo) >= 1) return true;
        }
    }
    return false;
}

bool share_grid_point(const std::vector<segment>& a, const std::vector<segment>& b) {
    for (const auto& s : a) {
        for (const auto& t : b) {
            if (s.horizontal == t.horizontal) {
                if (s.line == t.line && std::min(s.hi, t.hi) >= std::max(s.lo, t.lo)) return true;
            } else {
                const auto& h = s.horizontal ? s : t;
                const auto& v = s.horizontal ? t : s;
                if (h.lo <= v.line && v.line <= h.hi && v.lo <= h.line && h.line <= v.hi) return true;
            }
        }
    }
    return false;
}

std::string pair_str(vertex_id u, vertex_id v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string point_str(grid_point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

graph induced_graph(const grid_representation& rep, bool edge_semantics) {
    graph g;
    std::map<vertex_id, std::vector<segment>> segs;
    for (const auto& [v, p] : rep.paths) {
        g.add_vertex(v);
        segs.emplace(v, segments_of(p));
    }
    for (auto it = segs.begin(); it != segs.end(); ++it) {
        for (auto jt = std::next(it); jt != segs.end(); ++jt) {
            bool adj = edge_semantics ? share_grid_edge(it->second, jt->second)
                                      : share_grid_point(it->second, jt->second);
            if (adj) g.add_edge(it->first, jt->first);
        }
    }
    return g;
}

}  // namespace

graph induced_graph_epg(const grid_representation& rep) { return induced_graph(rep, true); }

graph induced_graph_vpg(const grid_representation& rep) { return induced_graph(rep, false); }

proper_vpg_certificate is_proper_vpg(const grid_representation& rep) {
    // (a) no grid-edge on two vertex-paths
    std::map<grid_edge, vertex_id> edge_owner;
    for (const auto& [v, p] : rep.paths) {
        for (const auto& e : p.unit_edges()) {
            auto [it, fresh] = edge_owner.emplace(e, v);
            if (!fresh)
                return {false, "grid-edge " + point_str(e.a) + "-" + point_str(e.b) +
                                   " used by vertex-paths of " + std::to_string(it->second) + " and " +
                                   std::to_string(v) + " (condition a)"};
        }
    }

    // (b) every shared grid-point is a rightward/upward crossing of exactly two paths
    std::map<grid_point, std::vector<vertex_id>> visitors;
    std::map<vertex_id, std::set<grid_edge>> edges;
    for (const auto& [v, p] : rep.paths) {
        edges.emplace(v, p.unit_edges());
        for (const auto& pt : p.point_set()) visitors[pt].push_back(v);
    }
    auto uses_right = [&](vertex_id v, grid_point p) {
        return edges.at(v).count(grid_edge{p, {p.x + 1, p.y}}) > 0;
    };
    auto uses_up = [&](vertex_id v, grid_point p) {
        return edges.at(v).count(grid_edge{p, {p.x, p.y + 1}}) > 0;
    };
    for (const auto& [pt, vs] : visitors) {
        if (vs.size() < 2) continue;
        if (vs.size() > 2)
            return {false, "grid-point " + point_str(pt) + " shared by " + std::to_string(vs.size()) +
                               " vertex-paths"};
        vertex_id u = vs[0], v = vs[1];
        bool ok = (uses_right(u, pt) && uses_up(v, pt)) || (uses_right(v, pt) && uses_up(u, pt));
        if (!ok)
            return {false, "grid-point " + point_str(pt) + " shared by " + pair_str(u, v) +
                               " without a rightward/upward crossing (condition b)"};
    }
    return {};
}

validation_report validate(const grid_representation& rep, const graph& g) {
    std::set<vertex_id> rep_verts;
    for (const auto& [v, p] : rep.paths) rep_verts.insert(v);
    if (rep_verts != g.vertices())
        throw std::invalid_argument("validate: representation and graph have different vertex sets");

    validation_report report;
    graph induced = rep.mode == rep_mode::epg ? induced_graph_epg(rep) : induced_graph_vpg(rep);
    for (const auto& e : g.edges())
        if (!induced.has_edge(e.first, e.second)) report.missing.push_back(e);
    for (const auto& e : induced.edges())
        if (!g.has_edge(e.first, e.second)) report.excess.push_back(e);
    for (const auto& [v, p] : rep.paths) report.path_class[v] = monotone_class(p);
    report.stats = stats(rep);
    report.exact = report.missing.empty() && report.excess.empty();
    if (rep.mode == rep_mode::proper_vpg) {
        report.properness = is_proper_vpg(rep);
        report.exact = report.exact && report.properness->proper;
    }
    return report;
}

representation_stats stats(const grid_representation& rep) {
    representation_stats s;
    std::map<grid_edge, std::size_t> usage;
    for (const auto& [v, p] : rep.paths)
        for (const auto& e : p.unit_edges()) ++usage[e];
    s.distinct_grid_edges = usage.size();
    s.multiplicity = 0;
    for (const auto& [e, n] : usage) s.multiplicity = std::max(s.multiplicity, n);

    auto rank = [](const std::string& c) {
        return c == "xy+" ? 3 : c == "xy" ? 2 : c == "x" ? 1 : 0;
    };
    int best = 3;
    for (const auto& [v, p] : rep.paths) best = std::min(best, rank(monotone_class(p)));
    s.monotone_class = best == 3 ? "xy+" : best == 2 ? "xy" : best == 1 ? "x" : "none";

    if (!rep.paths.empty()) s.box = compute_bounding_box(rep.all_paths());
    return s;
}

}  // namespace gridpaths
