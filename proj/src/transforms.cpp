#include "transforms.hpp"

#include <algorithm>
#include <array>

namespace gridpaths {

namespace {

std::string point_str(grid_point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string pair_str(vertex_pair e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void require_same_vertices(const grid_representation& rep, const graph& g_sub) {
    std::set<vertex_id> rv;
    for (const auto& [v, p] : rep.paths) rv.insert(v);
    if (rv != g_sub.vertices())
        throw std::invalid_argument("subgraph and representation have different vertex sets");
}

void require_subgraph(const graph& g_sub, const graph& host) {
    for (const auto& e : g_sub.edges())
        if (!host.has_edge(e.first, e.second))
            throw std::invalid_argument("edge " + pair_str(e) +
                                        " of the subgraph is not represented by the VPG input");
}

std::vector<vertex_pair> schedule(const graph& g_sub, bool reverse) {
    std::vector<vertex_pair> edges(g_sub.edges().begin(), g_sub.edges().end());
    if (reverse) std::reverse(edges.begin(), edges.end());
    return edges;
}

}  // namespace

std::map<vertex_pair, crossing> crossing_assignment(const grid_representation& rep,
                                                    const graph& g_sub) {
    std::map<vertex_id, std::set<grid_point>> pts;
    std::map<vertex_id, std::set<grid_edge>> edges;
    for (const auto& [v, p] : rep.paths) {
        pts.emplace(v, p.point_set());
        edges.emplace(v, p.unit_edges());
    }
    auto uses_right = [&](vertex_id v, grid_point p) {
        return edges.at(v).count(grid_edge{p, {p.x + 1, p.y}}) > 0;
    };
    auto uses_up = [&](vertex_id v, grid_point p) {
        return edges.at(v).count(grid_edge{p, {p.x, p.y + 1}}) > 0;
    };

    std::map<vertex_pair, crossing> out;
    for (const auto& e : g_sub.edges()) {
        auto [u, v] = e;
        std::vector<grid_point> shared;
        std::set_intersection(pts.at(u).begin(), pts.at(u).end(), pts.at(v).begin(),
                              pts.at(v).end(), std::back_inserter(shared));
        if (shared.empty())
            throw std::invalid_argument("paths of edge " + pair_str(e) + " share no grid-point");
        grid_point at = shared.front();  // lexicographically smallest
        if (uses_right(u, at) && uses_up(v, at))
            out[e] = {at, u, v};
        else if (uses_right(v, at) && uses_up(u, at))
            out[e] = {at, v, u};
        else
            throw std::invalid_argument("shared grid-point " + point_str(at) + " of edge " +
                                        pair_str(e) + " is not a rightward/upward crossing");
    }
    return out;
}

grid_representation bump_transform(const grid_representation& rep, const graph& g_sub,
                                   bool reverse_schedule) {
    auto cert = is_proper_vpg(rep);
    if (!cert.proper) throw std::invalid_argument("bump_transform: input not proper: " + cert.violation);
    require_same_vertices(rep, g_sub);
    require_subgraph(g_sub, induced_graph_vpg(rep));

    auto crossings = crossing_assignment(rep, g_sub);
    bool input_x_monotone = true;
    for (const auto& [v, p] : rep.paths) input_x_monotone = input_x_monotone && is_x_monotone(p);

    // Double the resolution, then splice a bump into the rightward path at each
    // chosen crossing.
    std::map<vertex_id, std::vector<grid_point>> seq;
    for (const auto& [v, p] : rep.paths) {
        std::vector<grid_point> corners = p.corners();
        for (auto& c : corners) c = {2 * c.x, 2 * c.y};
        seq[v] = grid_path(corners).points();
    }
    for (const auto& e : schedule(g_sub, reverse_schedule)) {
        const crossing& c = crossings.at(e);
        grid_point p{2 * c.at.x, 2 * c.at.y};
        grid_point pr{p.x + 1, p.y};
        auto& pts = seq.at(c.rightward);
        bool done = false;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i] == p && pts[i + 1] == pr) {
                pts.insert(pts.begin() + static_cast<long>(i) + 1,
                           {{p.x, p.y + 1}, {p.x + 1, p.y + 1}});
                done = true;
                break;
            }
            if (pts[i] == pr && pts[i + 1] == p) {
                pts.insert(pts.begin() + static_cast<long>(i) + 1,
                           {{p.x + 1, p.y + 1}, {p.x, p.y + 1}});
                done = true;
                break;
            }
        }
        if (!done)
            throw std::logic_error("bump_transform: rightward edge missing at " + point_str(p));
    }

    grid_representation out;
    out.mode = rep_mode::epg;
    for (const auto& [v, pts] : seq) out.paths.emplace(v, grid_path::from_points(pts));

    // The guarantees are cheap to re-verify, so check them on every run.
    auto report = validate(out, g_sub);
    if (!report.exact) throw std::logic_error("bump_transform: output is not exact");
    auto in_box = compute_bounding_box(rep.all_paths());
    auto out_box = compute_bounding_box(out.all_paths());
    if (out_box.w > 2 * in_box.w || out_box.h > 2 * in_box.h)
        throw std::logic_error("bump_transform: output exceeds the 2w x 2h bound");
    if (input_x_monotone) {
        for (const auto& [v, p] : out.paths)
            if (!is_x_monotone(p)) throw std::logic_error("bump_transform: lost x-monotonicity");
    }
    return out;
}

namespace {

std::vector<grid_point> skew_points(const grid_path& p) {
    auto pts = p.points();
    auto map = [](grid_point q) { return grid_point{2 * q.x + q.y, 2 * q.y}; };
    std::vector<grid_point> out{map(pts[0])};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        grid_point cur = out.back();
        int dx = pts[i + 1].x - pts[i].x;
        int dy = pts[i + 1].y - pts[i].y;
        if (dy == 0) {
            out.push_back({cur.x + dx, cur.y});
            out.push_back({cur.x + 2 * dx, cur.y});
        } else if (dy == 1) {
            out.push_back({cur.x, cur.y + 1});
            out.push_back({cur.x + 1, cur.y + 1});
            out.push_back({cur.x + 1, cur.y + 2});
        } else {
            out.push_back({cur.x, cur.y - 1});
            out.push_back({cur.x - 1, cur.y - 1});
            out.push_back({cur.x - 1, cur.y - 2});
        }
    }
    return out;
}

}  // namespace

grid_representation skew(const grid_representation& rep) {
    auto cert = is_proper_vpg(rep);
    if (!cert.proper) throw std::invalid_argument("skew: input not proper: " + cert.violation);
    for (const auto& [v, p] : rep.paths)
        if (!is_xy_plus_monotone(p))
            throw std::invalid_argument("skew: path of vertex " + std::to_string(v) +
                                        " is not xy+-monotone");

    grid_representation out;
    out.mode = rep_mode::proper_vpg;
    for (const auto& [v, p] : rep.paths) out.paths.emplace(v, grid_path::from_points(skew_points(p)));
    return out;
}

grid_representation xyplus_transform(const grid_representation& rep, const graph& g_sub,
                                     bool reverse_schedule) {
    require_same_vertices(rep, g_sub);
    require_subgraph(g_sub, induced_graph_vpg(rep));
    auto crossings = crossing_assignment(rep, g_sub);
    grid_representation skewed = skew(rep);  // checks properness and monotonicity

    std::map<vertex_id, std::vector<grid_point>> seq;
    for (const auto& [v, p] : skewed.paths) seq[v] = p.points();

    // Reroute the upward path's zig-zag at each crossing to run along the
    // horizontal grid-edge first.
    for (const auto& e : schedule(g_sub, reverse_schedule)) {
        const crossing& c = crossings.at(e);
        grid_point base{2 * c.at.x + c.at.y, 2 * c.at.y};
        grid_point mid{base.x, base.y + 1};
        grid_point top{base.x + 1, base.y + 1};
        auto& pts = seq.at(c.upward);
        bool done = false;
        for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
            if ((pts[i] == base && pts[i + 1] == mid && pts[i + 2] == top) ||
                (pts[i] == top && pts[i + 1] == mid && pts[i + 2] == base)) {
                pts[i + 1] = {base.x + 1, base.y};
                done = true;
                break;
            }
        }
        if (!done)
            throw std::logic_error("xyplus_transform: zig-zag missing at " + point_str(base));
    }

    grid_representation out;
    out.mode = rep_mode::epg;
    for (const auto& [v, pts] : seq) out.paths.emplace(v, grid_path::from_points(pts));

    auto report = validate(out, g_sub);
    if (!report.exact) throw std::logic_error("xyplus_transform: output is not exact");
    auto in_box = compute_bounding_box(rep.all_paths());
    auto out_box = compute_bounding_box(out.all_paths());
    if (out_box.w > 2 * in_box.w + in_box.h || out_box.h > 2 * in_box.h)
        throw std::logic_error("xyplus_transform: output exceeds the (2w+h) x 2h bound");
    for (const auto& [v, p] : out.paths)
        if (!is_xy_plus_monotone(p)) throw std::logic_error("xyplus_transform: lost xy+-monotonicity");
    return out;
}

void check_drawing(const orthogonal_drawing& d, const graph& g) {
    if (g.max_degree() > 4) throw std::invalid_argument("drawing: graph has a vertex of degree > 4");
    std::set<grid_point> positions;
    for (vertex_id v : g.vertices()) {
        auto it = d.positions.find(v);
        if (it == d.positions.end())
            throw std::invalid_argument("drawing: vertex " + std::to_string(v) + " has no position");
        if (!positions.insert(it->second).second)
            throw std::invalid_argument("drawing: two vertices at " + point_str(it->second));
    }
    if (d.routes.size() != g.edge_count())
        throw std::invalid_argument("drawing: route count differs from edge count");

    std::map<grid_edge, vertex_pair> edge_use;
    for (const auto& [e, route] : d.routes) {
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("drawing: route for non-edge " + pair_str(e));
        if (route.closed()) throw std::invalid_argument("drawing: route " + pair_str(e) + " is closed");
        if (route.corners().front() != d.positions.at(e.first) ||
            route.corners().back() != d.positions.at(e.second))
            throw std::invalid_argument("drawing: route " + pair_str(e) +
                                        " does not connect its endpoints");
        for (const auto& ge : route.unit_edges()) {
            auto [it, fresh] = edge_use.emplace(ge, e);
            if (!fresh)
                throw std::invalid_argument("drawing: routes " + pair_str(it->second) + " and " +
                                            pair_str(e) + " share a grid-edge");
        }
        auto pts = route.points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            bool at_end = i == 0 || i + 1 == pts.size();
            if (positions.count(pts[i]) && !at_end)
                throw std::invalid_argument("drawing: route " + pair_str(e) +
                                            " passes through a vertex position at " +
                                            point_str(pts[i]));
        }
    }

    // Route intersections must be true crossings.
    auto incident_dirs = [&](const std::set<grid_edge>& edges, grid_point p) {
        bool h = edges.count(grid_edge{p, {p.x + 1, p.y}}) || edges.count(grid_edge{p, {p.x - 1, p.y}});
        bool v = edges.count(grid_edge{p, {p.x, p.y + 1}}) || edges.count(grid_edge{p, {p.x, p.y - 1}});
        return std::pair{h, v};
    };
    for (auto it = d.routes.begin(); it != d.routes.end(); ++it) {
        for (auto jt = std::next(it); jt != d.routes.end(); ++jt) {
            auto pa = it->second.point_set();
            auto pb = jt->second.point_set();
            auto ea = it->second.unit_edges();
            auto eb = jt->second.unit_edges();
            for (const auto& p : pa) {
                if (!pb.count(p)) continue;
                if (positions.count(p)) continue;  // common endpoint vertex
                auto [ah, av] = incident_dirs(ea, p);
                auto [bh, bv] = incident_dirs(eb, p);
                bool crossing = (ah && !av && bv && !bh) || (av && !ah && bh && !bv);
                if (!crossing)
                    throw std::invalid_argument("drawing: routes " + pair_str(it->first) + " and " +
                                                pair_str(jt->first) + " touch at " + point_str(p) +
                                                " without a true crossing");
            }
        }
    }
}

namespace {

enum class side { right, top, left, bottom };

side leave_side(grid_point from, grid_point to) {
    if (to.x > from.x) return side::right;
    if (to.x < from.x) return side::left;
    if (to.y > from.y) return side::top;
    return side::bottom;
}

// Square of vertex at original position (x, y) spans [2x-1, 2x] x [2y-1, 2y].
grid_edge square_side(grid_point pos, side s) {
    int x = 2 * pos.x, y = 2 * pos.y;
    switch (s) {
        case side::right: return grid_edge{{x, y - 1}, {x, y}};
        case side::left: return grid_edge{{x - 1, y - 1}, {x - 1, y}};
        case side::top: return grid_edge{{x - 1, y}, {x, y}};
        case side::bottom: return grid_edge{{x - 1, y - 1}, {x, y - 1}};
    }
    throw std::logic_error("unreachable");
}

std::array<grid_edge, 4> square_boundary(grid_point pos) {
    return {square_side(pos, side::right), square_side(pos, side::top),
            square_side(pos, side::left), square_side(pos, side::bottom)};
}

grid_point p1_endpoint(grid_point pos, side s) {
    int x = 2 * pos.x, y = 2 * pos.y;
    switch (s) {
        case side::right: return {x, y - 1};
        case side::top: return {x - 1, y};
        case side::left: return {x - 1, y - 1};
        case side::bottom: return {x - 1, y - 1};
    }
    throw std::logic_error("unreachable");
}

grid_point p2_endpoint(grid_point pos, side s) {
    int x = 2 * pos.x, y = 2 * pos.y;
    switch (s) {
        case side::right: return {x, y};
        case side::top: return {x, y};
        case side::left: return {x - 1, y};
        case side::bottom: return {x, y - 1};
    }
    throw std::logic_error("unreachable");
}

std::set<grid_edge> polyline_edges(const std::vector<grid_point>& corners) {
    if (corners.size() < 2) return {};
    return grid_path(corners).unit_edges();
}

graph induced_subgraph(const graph& g, const std::set<vertex_id>& verts) {
    graph out;
    for (vertex_id v : verts) out.add_vertex(v);
    for (const auto& [u, v] : g.edges())
        if (verts.count(u) && verts.count(v)) out.add_edge(u, v);
    return out;
}

// Deterministic Euler trail over a set of unit grid-edges. Closed when all
// point degrees are even, otherwise the trail runs between the two odd points.
grid_path trail_from_edges(const std::set<grid_edge>& edges) {
    if (edges.empty()) throw std::logic_error("trail over an empty edge set");
    std::map<grid_point, std::vector<grid_point>> adj;
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<grid_point> odd;
    for (auto& [p, nb] : adj) {
        std::sort(nb.begin(), nb.end());
        if (nb.size() % 2 == 1) odd.push_back(p);
    }
    if (odd.size() != 0 && odd.size() != 2)
        throw std::logic_error("edge set is not a single trail");
    bool closed = odd.empty();
    grid_point start = closed ? adj.begin()->first : odd.front();

    std::map<grid_point, std::size_t> ptr;
    std::set<grid_edge> used;
    std::vector<grid_point> stack{start}, walk;
    while (!stack.empty()) {
        grid_point p = stack.back();
        auto& nb = adj[p];
        std::size_t& i = ptr[p];
        while (i < nb.size() && used.count(grid_edge{p, nb[i]})) ++i;
        if (i < nb.size()) {
            used.insert(grid_edge{p, nb[i]});
            stack.push_back(nb[i]);
        } else {
            walk.push_back(p);
            stack.pop_back();
        }
    }
    if (used.size() != edges.size()) throw std::logic_error("vertex-path edge set is disconnected");
    std::reverse(walk.begin(), walk.end());
    return grid_path::from_points(walk, closed);
}

}  // namespace

grid_representation orth_to_epg(const orthogonal_drawing& d, const graph& g,
                                const minor_recipe& r, bool open_paths) {
    graph minor = apply_minor(g, r);  // also validates the recipe
    check_drawing(d, g);

    // (1) drop what the minor does not need
    graph g1 = g;
    for (vertex_id v : r.deleted_vertices) g1.remove_vertex(v);
    for (auto [u, v] : r.deleted_edges) g1.remove_edge(u, v);

    // (4, part one) orient so that degree-4 vertices have outgoing edges
    orientation orient;
    for (const auto& comp : g1.connected_components()) {
        auto sub = induced_subgraph(g1, comp);
        if (sub.edge_count() == 0) continue;
        auto o = orient_with_out_edges(sub);
        orient.direction.insert(o.direction.begin(), o.direction.end());
    }

    // (2) double the grid: each vertex becomes a unit square
    std::map<vertex_id, std::set<grid_edge>> paths;
    for (vertex_id v : g1.vertices()) {
        auto sq = square_boundary(d.positions.at(v));
        paths[v] = {sq.begin(), sq.end()};
    }

    // (3)+(4) duplicate each route and absorb both copies into the tail's path
    for (const auto& [e, dir] : orient.direction) {
        auto [tail, head] = dir;
        std::vector<grid_point> q = d.routes.at(e).corners();
        if (q.front() != d.positions.at(tail)) std::reverse(q.begin(), q.end());

        side tail_side = leave_side(q[0], q[1]);
        side head_side = leave_side(q[q.size() - 1], q[q.size() - 2]);

        std::vector<grid_point> p1, p2;
        p1.push_back(p1_endpoint(d.positions.at(tail), tail_side));
        p2.push_back(p2_endpoint(d.positions.at(tail), tail_side));
        for (std::size_t i = 1; i + 1 < q.size(); ++i) {
            p1.push_back({2 * q[i].x - 1, 2 * q[i].y - 1});
            p2.push_back({2 * q[i].x, 2 * q[i].y});
        }
        p1.push_back(p1_endpoint(d.positions.at(head), head_side));
        p2.push_back(p2_endpoint(d.positions.at(head), head_side));

        auto& path = paths.at(tail);
        path.erase(square_side(d.positions.at(tail), tail_side));
        for (const auto& ge : polyline_edges(p1)) path.insert(ge);
        for (const auto& ge : polyline_edges(p2)) path.insert(ge);
        path.insert(square_side(d.positions.at(head), head_side));
    }

    // (5) contractions: remove the shared grid-edges and merge the closed paths
    graph current = g1;
    for (auto e : r.contracted_edges) {
        auto [a, b] = e;
        if (!current.has_edge(a, b))
            throw std::invalid_argument("contract " + pair_str(e) + ": no such edge");
        std::set<grid_edge> shared;
        std::set_intersection(paths.at(a).begin(), paths.at(a).end(), paths.at(b).begin(),
                              paths.at(b).end(), std::inserter(shared, shared.end()));
        if (shared.empty()) throw std::logic_error("contracted paths share no grid-edge");
        std::set<grid_edge> merged;
        std::set_union(paths.at(a).begin(), paths.at(a).end(), paths.at(b).begin(),
                       paths.at(b).end(), std::inserter(merged, merged.end()));
        for (const auto& ge : shared) merged.erase(ge);
        auto it = r.name_map.find(ordered_pair(a, b));
        vertex_id id = it != r.name_map.end() ? it->second : current.fresh_id();
        contract_edge(current, a, b, id);
        paths.erase(a);
        paths.erase(b);
        paths.emplace(id, std::move(merged));
    }

    // (6) open the closed paths by dropping one unshared grid-edge each
    if (open_paths) {
        std::map<grid_edge, std::size_t> usage;
        for (const auto& [v, es] : paths)
            for (const auto& ge : es) ++usage[ge];
        for (auto& [v, es] : paths) {
            auto it = std::find_if(es.begin(), es.end(),
                                   [&](const grid_edge& ge) { return usage.at(ge) == 1; });
            if (it == es.end())
                throw std::logic_error("no unshared grid-edge on the path of vertex " +
                                       std::to_string(v));
            es.erase(it);
        }
    }

    grid_representation out;
    out.mode = rep_mode::epg;
    for (const auto& [v, es] : paths) out.paths.emplace(v, trail_from_edges(es));
    for (vertex_id v : minor.vertices()) {
        if (!out.paths.count(v)) throw std::logic_error("missing vertex-path after contraction");
    }

    auto report = validate(out, minor);
    if (!report.exact) throw std::logic_error("orth_to_epg: output is not exact");
    std::vector<grid_path> drawing_paths;
    for (const auto& [e, route] : d.routes) drawing_paths.push_back(route);
    for (const auto& [v, pos] : d.positions) drawing_paths.push_back(grid_path({pos}));
    auto in_box = compute_bounding_box(drawing_paths);
    auto out_box = compute_bounding_box(out.all_paths());
    if (out_box.w > 2 * in_box.w || out_box.h > 2 * in_box.h)
        throw std::logic_error("orth_to_epg: output exceeds the 2w x 2h bound");
    for (const auto& [v, p] : out.paths) {
        if (open_paths == p.closed()) throw std::logic_error("orth_to_epg: wrong path openness");
    }
    return out;
}

}  // namespace gridpaths
