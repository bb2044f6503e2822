#include "intervals.hpp"

#include <algorithm>
#include <tuple>

namespace gridpaths {

bool interval_representation::is_normalized() const {
    int bound = 2 * static_cast<int>(intervals.size());
    std::set<int> seen;
    for (const auto& [v, iv] : intervals) {
        if (iv.first >= iv.second) return false;
        if (iv.first < 1 || iv.second > bound) return false;
        if (!seen.insert(iv.first).second || !seen.insert(iv.second).second) return false;
    }
    return true;
}

std::size_t path_decomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return w == 0 ? 0 : w - 1;
}

interval_representation normalize(const interval_representation& ir) {
    // Ties break (value, left-before-right, vertex id): touching closed
    // intervals stay intersecting after the remap.
    std::vector<std::tuple<int, bool, vertex_id>> endpoints;
    for (const auto& [v, iv] : ir.intervals) {
        if (iv.first >= iv.second)
            throw std::invalid_argument("interval of vertex " + std::to_string(v) +
                                        " has l >= r");
        endpoints.emplace_back(iv.first, false, v);
        endpoints.emplace_back(iv.second, true, v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    interval_representation out;
    int rank = 0;
    for (const auto& [value, is_right, v] : endpoints) {
        ++rank;
        auto& iv = out.intervals[v];
        if (is_right)
            iv.second = rank;
        else
            iv.first = rank;
    }
    return out;
}

graph induced_interval_graph(const interval_representation& ir) {
    graph g;
    for (const auto& [v, iv] : ir.intervals) g.add_vertex(v);
    for (auto it = ir.intervals.begin(); it != ir.intervals.end(); ++it) {
        for (auto jt = std::next(it); jt != ir.intervals.end(); ++jt) {
            if (it->second.first <= jt->second.second && jt->second.first <= it->second.second)
                g.add_edge(it->first, jt->first);
        }
    }
    return g;
}

std::size_t clique_number(const interval_representation& ir) {
    // At a tied value, open before close keeps touching closed intervals counted
    // together.
    std::vector<std::pair<int, int>> events;  // (value, +1 open / -1 close), opens first
    for (const auto& [v, iv] : ir.intervals) {
        events.emplace_back(iv.first, -1);  // -1 sorts before +1; it means "open"
        events.emplace_back(iv.second, +1);
    }
    std::sort(events.begin(), events.end());
    std::size_t active = 0, best = 0;
    for (const auto& [value, kind] : events) {
        if (kind == -1) {
            ++active;
            best = std::max(best, active);
        } else {
            --active;
        }
    }
    return best;
}

std::map<vertex_id, int> greedy_colour(const interval_representation& ir) {
    std::vector<vertex_id> order;
    for (const auto& [v, iv] : ir.intervals) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](vertex_id a, vertex_id b) { return ir.left(a) < ir.left(b); });

    std::map<vertex_id, int> colour;
    for (vertex_id v : order) {
        std::set<int> taken;
        for (const auto& [w, c] : colour) {
            if (ir.left(v) <= ir.right(w) && ir.left(w) <= ir.right(v)) taken.insert(c);
        }
        int c = 0;
        while (taken.count(c)) ++c;
        colour[v] = c;
    }
    return colour;
}

std::vector<interval_representation> components(const interval_representation& ir) {
    graph g = induced_interval_graph(ir);
    std::vector<interval_representation> out;
    for (const auto& comp : g.connected_components()) {
        interval_representation part;
        for (vertex_id v : comp) part.intervals[v] = ir.intervals.at(v);
        out.push_back(std::move(part));
    }
    // Deterministic order: by leftmost endpoint.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int la = a.intervals.begin()->second.first, lb = b.intervals.begin()->second.first;
        for (const auto& [v, iv] : a.intervals) la = std::min(la, iv.first);
        for (const auto& [v, iv] : b.intervals) lb = std::min(lb, iv.first);
        return la < lb;
    });
    return out;
}

interval_representation decomposition_to_intervals(const path_decomposition& pd) {
    std::map<vertex_id, std::pair<int, int>> span;  // first/last bag index
    for (std::size_t i = 0; i < pd.bags.size(); ++i) {
        for (vertex_id v : pd.bags[i]) {
            auto it = span.find(v);
            if (it == span.end())
                span[v] = {static_cast<int>(i), static_cast<int>(i)};
            else
                it->second.second = static_cast<int>(i);
        }
    }
    for (const auto& [v, s] : span) {
        for (int i = s.first; i <= s.second; ++i) {
            if (!pd.bags[static_cast<std::size_t>(i)].count(v))
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " occurs in non-contiguous bags");
        }
    }
    // I(v) = [first, last + 1/2], doubled to stay integral, then normalized.
    interval_representation raw;
    for (const auto& [v, s] : span) raw.intervals[v] = {2 * s.first, 2 * s.second + 1};
    return normalize(raw);
}

}  // namespace gridpaths
