#include "svg.hpp"

#include <algorithm>

namespace gridpaths {

namespace {

const char* const palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                               "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr std::size_t palette_size = sizeof(palette) / sizeof(palette[0]);

// Offset indices by first-fit over the grid-edge conflict graph, in vertex id
// order, so overlapping strokes never coincide.
std::map<vertex_id, int> offset_indices(const grid_representation& rep) {
    std::map<vertex_id, std::set<grid_edge>> edges;
    for (const auto& [v, p] : rep.paths) edges.emplace(v, p.unit_edges());
    std::map<vertex_id, int> idx;
    for (const auto& [v, ev] : edges) {
        std::set<int> taken;
        for (const auto& [w, ew] : edges) {
            if (w >= v || !idx.count(w)) continue;
            bool conflict = std::any_of(ev.begin(), ev.end(),
                                        [&](const grid_edge& e) { return ew.count(e) > 0; });
            if (conflict) taken.insert(idx.at(w));
        }
        int k = 0;
        while (taken.count(k)) ++k;
        idx[v] = k;
    }
    return idx;
}

}  // namespace

std::string render_svg(const grid_representation& rep, const render_style& style) {
    if (style.cell < 4) throw std::invalid_argument("render_svg: cell size must be >= 4");
    std::size_t c = rep.paths.empty() ? 0 : stats(rep).multiplicity;
    int max_offset = style.cell / (static_cast<int>(c) + 2);
    int off_px = std::clamp(style.offset, 0, std::max(max_offset, 0));

    if (rep.paths.empty()) {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"></svg>\n";
    }

    auto box = compute_bounding_box(rep.all_paths());
    int xmin = box.origin.x, ymin = box.origin.y;
    int width = (box.w + 1) * style.cell, height = (box.h + 1) * style.cell;
    auto px = [&](int x) { return (x - xmin + 1) * style.cell; };
    auto py = [&](int y) { return (ymin + box.h - y) * style.cell; };  // y axis points up

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    if (style.grid_dots) {
        for (int y = ymin; y < ymin + box.h; ++y)
            for (int x = xmin; x < xmin + box.w; ++x)
                out += "<circle cx=\"" + std::to_string(px(x)) + "\" cy=\"" +
                       std::to_string(py(y)) + "\" r=\"1\" fill=\"#c0c0c0\"/>\n";
    }

    auto offsets = offset_indices(rep);
    std::size_t rank = 0;
    for (const auto& [v, p] : rep.paths) {
        int d = offsets.at(v) * off_px;
        std::string pts;
        for (const auto& q : p.points()) {
            if (!pts.empty()) pts += ' ';
            pts += std::to_string(px(q.x) + d) + "," + std::to_string(py(q.y) - d);
        }
        const char* colour = palette[rank++ % palette_size];
        out += std::string("<polyline points=\"") + pts + "\" fill=\"none\" stroke=\"" + colour +
               "\" stroke-width=\"2\"/>\n";
        if (style.labels) {
            grid_point head = p.corners().front();
            out += "<text x=\"" + std::to_string(px(head.x) + d + 3) + "\" y=\"" +
                   std::to_string(py(head.y) - d - 3) + "\" font-size=\"10\" fill=\"" + colour +
                   "\">" + std::to_string(v) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace gridpaths
