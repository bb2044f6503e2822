#include "bounds.hpp"

#include <algorithm>

namespace gridpaths {

bound_report check_edge_count_bound(const grid_representation& rep, const graph& g) {
    bound_report report;
    report.name = "triangle-free edge count";
    if (rep.mode != rep_mode::epg || !validate(rep, g).exact) {
        report.applicable = false;
        report.inequality = "not applicable: representation is not an exact EPG of the graph";
        return report;
    }
    if (!triangle_free(g)) {
        report.applicable = false;
        report.inequality = "not applicable: graph has a triangle";
        return report;
    }
    auto s = stats(rep);
    report.inequality = "distinct_grid_edges = " + std::to_string(s.distinct_grid_edges) +
                        " >= m = " + std::to_string(g.edge_count());
    report.holds = s.distinct_grid_edges >= g.edge_count();
    if (!report.holds)
        report.witness = "only " + std::to_string(s.distinct_grid_edges) + " grid-edges for " +
                         std::to_string(g.edge_count()) + " graph edges";
    return report;
}

namespace {

interval_representation x_projection(const grid_representation& rep) {
    interval_representation ir;
    for (const auto& [v, p] : rep.paths) {
        int lo = p.corners()[0].x, hi = lo;
        for (const auto& c : p.corners()) {
            lo = std::min(lo, c.x);
            hi = std::max(hi, c.x);
        }
        ir.intervals[v] = {lo, hi};
    }
    return ir;
}

// Closed-interval clique number that tolerates ties and degenerate intervals
// (the normalized sweep requires l < r).
std::size_t projected_clique(const interval_representation& ir) {
    std::size_t best = 0;
    for (const auto& [v, iv] : ir.intervals) {
        std::size_t at = 0;
        for (const auto& [w, jw] : ir.intervals)
            if (jw.first <= iv.first && iv.first <= jw.second) ++at;
        best = std::max(best, at);
    }
    return best;
}

}  // namespace

bound_report projection_pathwidth_bound(const grid_representation& rep) {
    bound_report report;
    report.name = "projection pathwidth";
    if (rep.paths.empty()) {
        report.inequality = "0 <= 0 (empty representation)";
        return report;
    }
    auto s = stats(rep);
    std::size_t h = static_cast<std::size_t>(s.box.h);
    std::size_t c = std::max<std::size_t>(s.multiplicity, 1);
    std::size_t omega = projected_clique(x_projection(rep));
    std::size_t bound = c * (3 * h - 1);
    report.inequality = "omega(projection) = " + std::to_string(omega) +
                        " <= c(3h-1) = " + std::to_string(bound) + "  (c = " + std::to_string(c) +
                        ", h = " + std::to_string(h) + "), hence pw <= " + std::to_string(bound - 1);
    report.holds = omega <= bound;
    if (!report.holds) report.witness = "projection clique exceeds the column capacity";
    return report;
}

pathwidth_result brute_force_pathwidth(const graph& g) {
    std::size_t n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("brute_force_pathwidth: limited to n <= 12");
    std::vector<vertex_id> verts(g.vertices().begin(), g.vertices().end());
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= 1u << j;

    // Vertex separation number: f(S) = min over last-added v of
    // max(f(S \ v), boundary(S)), where boundary(S) counts vertices of S with a
    // neighbour outside S. Equals pathwidth.
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint8_t> f(full + 1, 0), pick(full + 1, 0);
    auto boundary = [&](std::uint32_t s) {
        std::size_t b = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i & 1) && (adj[i] & ~s)) ++b;
        return b;
    };
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::size_t cost = boundary(s);
        std::size_t best = n + 1;
        std::uint8_t best_v = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(s >> i & 1)) continue;
            std::size_t cand = std::max<std::size_t>(f[s ^ (1u << i)], cost);
            if (cand < best) {
                best = cand;
                best_v = static_cast<std::uint8_t>(i);
            }
        }
        f[s] = static_cast<std::uint8_t>(best);
        pick[s] = best_v;
    }

    pathwidth_result res;
    res.k = n == 0 ? 0 : f[full];
    std::uint32_t s = full;
    while (s) {
        res.ordering.push_back(verts[pick[s]]);
        s ^= 1u << pick[s];
    }
    std::reverse(res.ordering.begin(), res.ordering.end());
    return res;
}

bound_report cross_check_pathwidth(const grid_representation& rep, const graph& g) {
    bound_report report;
    report.name = "pathwidth cross-check";
    if (g.vertex_count() > 12) {
        report.applicable = false;
        report.inequality = "not applicable: n > 12";
        return report;
    }
    if (rep.mode != rep_mode::epg || !validate(rep, g).exact) {
        report.applicable = false;
        report.inequality = "not applicable: representation is not an exact EPG of the graph";
        return report;
    }
    auto s = stats(rep);
    std::size_t h = static_cast<std::size_t>(s.box.h);
    std::size_t c = std::max<std::size_t>(s.multiplicity, 1);
    std::size_t pw = brute_force_pathwidth(g).k;
    std::size_t bound = c * (3 * h - 1) - 1;
    report.inequality = "pw(G) = " + std::to_string(pw) + " <= c(3h-1)-1 = " + std::to_string(bound) +
                        "  (c = " + std::to_string(c) + ", h = " + std::to_string(h) + ")";
    report.holds = pw <= bound;
    if (!report.holds) report.witness = "exact pathwidth exceeds the projection bound";
    return report;
}

}  // namespace gridpaths
