#include "constructions.hpp"

#include <algorithm>

#include "transforms.hpp"

namespace gridpaths {

grid_representation complete_vpg(std::size_t n) {
    if (n == 0) throw std::invalid_argument("complete_vpg: n must be at least 1");
    grid_representation rep;
    rep.mode = rep_mode::proper_vpg;
    int nn = static_cast<int>(n);
    for (int i = 1; i <= nn; ++i) {
        // Gamma of vertex i: corner at (i-1, i), arms to y = 1 and x = n.
        // Vertex 1 drops the grid-edge (0,1)-(1,1) to save a column.
        std::vector<grid_point> corners;
        if (i == 1) {
            corners = nn == 1 ? std::vector<grid_point>{{1, 1}}
                              : std::vector<grid_point>{{1, 1}, {nn, 1}};
        } else {
            corners = {{i - 1, 1}, {i - 1, i}, {nn, i}};
        }
        rep.paths.emplace(i, grid_path(std::move(corners)));
    }
    return rep;
}

grid_representation epg_any_graph(const graph& g) {
    if (g.vertex_count() == 0) return {.paths = {}, .mode = rep_mode::epg};
    std::size_t n = g.vertex_count();
    grid_representation base = complete_vpg(n);

    // complete_vpg uses ids 1..n; move to g's ids in sorted order.
    grid_representation relabeled;
    relabeled.mode = rep_mode::proper_vpg;
    int slot = 1;
    for (vertex_id v : g.vertices()) relabeled.paths.emplace(v, base.paths.at(slot++));
    return xyplus_transform(relabeled, g);
}

farthest_path_result farthest_path(const interval_representation& ir) {
    if (ir.intervals.empty()) throw std::invalid_argument("farthest_path: empty input");
    if (!induced_interval_graph(ir).is_connected())
        throw std::invalid_argument("farthest_path: interval graph is disconnected");

    auto argmin_left = [&] {
        vertex_id best = ir.intervals.begin()->first;
        for (const auto& [v, iv] : ir.intervals)
            if (iv.first < ir.left(best)) best = v;
        return best;
    };

    farthest_path_result res;
    vertex_id cur = argmin_left();
    res.order.push_back(cur);
    while (true) {
        std::vector<vertex_id> cands;
        for (const auto& [v, iv] : ir.intervals) {
            if (ir.left(cur) < iv.first && iv.first < ir.right(cur) && ir.right(cur) < iv.second)
                cands.push_back(v);
        }
        res.candidates.push_back(cands);
        if (cands.empty()) break;
        vertex_id next = cands.front();
        for (vertex_id v : cands)
            if (ir.right(v) > ir.right(next)) next = v;
        res.order.push_back(next);
        cur = next;
    }

    // The chain is an induced path from the leftmost to the rightmost interval.
    const auto& a = res.order;
    for (std::size_t i = 0; i + 2 < a.size(); ++i) {
        if (ir.right(a[i]) >= ir.left(a[i + 2]))
            throw std::logic_error("farthest_path: chain is not an induced path");
    }
    int max_r = ir.right(a.back());
    for (const auto& [v, iv] : ir.intervals) {
        if (iv.first < ir.left(a.front()) || iv.second > max_r)
            throw std::logic_error("farthest_path: chain does not span the component");
    }
    return res;
}

namespace {

// One connected component, endpoints distinct. Builds corner lists around the
// x-axis; the caller checks the global conditions.
std::map<vertex_id, grid_path> build_component(const interval_representation& comp) {
    int k = static_cast<int>(clique_number(comp)) - 1;
    if (k == 0) {
        if (comp.size() != 1)
            throw std::logic_error("connected 1-colourable interval graph with several vertices");
        auto [v, iv] = *comp.intervals.begin();
        return {{v, grid_path({{2 * iv.first, -1}, {2 * iv.second, -1}, {2 * iv.second, 1}})}};
    }

    auto chain = farthest_path(comp);
    interval_representation rest = comp;
    for (vertex_id v : chain.order) rest.intervals.erase(v);

    std::map<vertex_id, grid_path> paths;
    for (const auto& part : components(rest)) {
        for (auto& [v, p] : build_component(part)) paths.emplace(v, std::move(p));
    }

    // Insert two rows above and below the x-axis; vertical segments crossing
    // the axis stretch.
    for (auto& [v, p] : paths) {
        std::vector<grid_point> corners = p.corners();
        for (auto& c : corners) c.y += c.y >= 1 ? 2 : -2;
        p = grid_path(std::move(corners));
    }

    const auto& a = chain.order;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int l = 2 * comp.left(a[i]), r = 2 * comp.right(a[i]);
        int y = (i % 2 == 0) ? 1 : 2;  // Y = 1 for odd 1-based positions
        std::vector<grid_point> corners{{l, -2 * k - 2}, {l, -y}, {r, -y}, {r, y}};
        if (i + 1 < a.size()) corners.push_back({2 * comp.right(a[i + 1]) + 1, y});
        paths.emplace(a[i], grid_path(std::move(corners)));
    }
    return paths;
}

bool has_horizontal_anchor(const grid_path& p, int lo, int hi) {
    const auto& c = p.corners();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i].y != c[i + 1].y || c[i].y >= 0) continue;
        if (std::min(c[i].x, c[i + 1].x) == lo && std::max(c[i].x, c[i + 1].x) == hi) return true;
    }
    return false;
}

bool has_vertical_through(const grid_path& p, int x) {
    const auto& c = p.corners();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i].x != c[i + 1].x || c[i].x != x) continue;
        if (std::min(c[i].y, c[i + 1].y) <= -1 && std::max(c[i].y, c[i + 1].y) >= 1) return true;
    }
    return false;
}

}  // namespace

pathwidth_vpg_result pathwidth_vpg(const interval_representation& ir) {
    if (ir.intervals.empty()) throw std::invalid_argument("pathwidth_vpg: empty input");
    if (!ir.is_normalized()) throw std::invalid_argument("pathwidth_vpg: input is not normalized");

    pathwidth_vpg_result res;
    res.k = static_cast<int>(clique_number(ir)) - 1;
    res.representation.mode = rep_mode::proper_vpg;
    for (const auto& part : components(ir)) {
        for (auto& [v, p] : build_component(part)) res.representation.paths.emplace(v, std::move(p));
    }
    int min_l = ir.intervals.begin()->second.first, max_r = 0;
    for (const auto& [v, iv] : ir.intervals) {
        res.anchor_x[v] = {2 * iv.first, 2 * iv.second};
        min_l = std::min(min_l, iv.first);
        max_r = std::max(max_r, iv.second);
    }

    // Conditions (1)-(3), properness and supergraph containment are re-checked
    // on every run.
    auto box = compute_bounding_box(res.representation.all_paths());
    if (box.origin.x < 2 * min_l || box.origin.x + box.w - 1 > 2 * max_r + 1 ||
        box.origin.y < -2 * res.k - 2 || box.origin.y + box.h - 1 > 2 * res.k + 1)
        throw std::logic_error("pathwidth_vpg: box condition violated");
    for (const auto& [v, p] : res.representation.paths) {
        auto [lo, hi] = res.anchor_x.at(v);
        if (!has_horizontal_anchor(p, lo, hi))
            throw std::logic_error("pathwidth_vpg: anchor segment missing for vertex " +
                                   std::to_string(v));
        if (!has_vertical_through(p, hi))
            throw std::logic_error("pathwidth_vpg: vertical segment missing for vertex " +
                                   std::to_string(v));
        if (!is_xy_plus_monotone(p))
            throw std::logic_error("pathwidth_vpg: path of vertex " + std::to_string(v) +
                                   " is not xy+-monotone");
    }
    auto cert = is_proper_vpg(res.representation);
    if (!cert.proper) throw std::logic_error("pathwidth_vpg: output not proper: " + cert.violation);
    graph induced = induced_graph_vpg(res.representation);
    graph target = induced_interval_graph(ir);
    for (const auto& e : target.edges()) {
        if (!induced.has_edge(e.first, e.second))
            throw std::logic_error("pathwidth_vpg: interval edge not represented");
    }
    return res;
}

grid_representation pathwidth_epg(const graph& g, const interval_representation& ir,
                                  const std::map<vertex_id, vertex_id>& mapping) {
    std::map<vertex_id, vertex_id> map = mapping;
    if (map.empty()) {
        for (vertex_id v : g.vertices()) map[v] = v;
    }
    std::set<vertex_id> targets;
    for (const auto& [gv, hv] : map) {
        if (!ir.intervals.count(hv))
            throw std::invalid_argument("mapping target " + std::to_string(hv) +
                                        " has no interval");
        targets.insert(hv);
    }
    if (map.size() != g.vertex_count() || targets.size() != ir.size())
        throw std::invalid_argument("mapping is not a bijection onto the intervals");
    graph h = induced_interval_graph(ir);
    for (const auto& e : g.edges()) {
        if (!h.has_edge(map.at(e.first), map.at(e.second)))
            throw std::invalid_argument("graph edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) +
                                        ") is not an edge of the interval supergraph");
    }

    auto res = pathwidth_vpg(ir);
    auto box = compute_bounding_box(res.representation.all_paths());
    grid_representation shifted =
        res.representation.translated(1 - box.origin.x, 1 - box.origin.y);

    grid_representation relabeled;
    relabeled.mode = rep_mode::proper_vpg;
    for (const auto& [gv, hv] : map) relabeled.paths.emplace(gv, shifted.paths.at(hv));

    grid_representation out = xyplus_transform(relabeled, g);
    auto out_box = compute_bounding_box(out.all_paths());
    // VPG box: 2N columns for N = max normalized endpoint = 2|V(H)|, 4k+4
    // rows; the skew turns that into (2*2N + 4k+4) x (8k+8).
    int en = 2 * static_cast<int>(ir.size()), k = res.k;
    if (out_box.h > 8 * k + 8 || out_box.w > 4 * en + 4 * k + 4)
        throw std::logic_error("pathwidth_epg: output exceeds the height/width bound");
    return out.translated(1 - out_box.origin.x, 1 - out_box.origin.y);
}

}  // namespace gridpaths
