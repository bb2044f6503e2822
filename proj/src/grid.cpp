#include "grid.hpp"

#include <algorithm>

namespace gridpaths {

namespace {

std::string point_str(grid_point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

int sgn(int d) { return d > 0 ? 1 : d < 0 ? -1 : 0; }

void append_segment(std::vector<grid_point>& pts, grid_point from, grid_point to) {
    int dx = sgn(to.x - from.x);
    int dy = sgn(to.y - from.y);
    grid_point cur = from;
    while (cur != to) {
        cur = {cur.x + dx, cur.y + dy};
        pts.push_back(cur);
    }
}

}  // namespace

grid_edge::grid_edge(grid_point p, grid_point q) {
    if (std::abs(p.x - q.x) + std::abs(p.y - q.y) != 1)
        throw std::invalid_argument("grid-edge endpoints " + point_str(p) + " " + point_str(q) +
                                    " are not at distance 1");
    a = std::min(p, q);
    b = std::max(p, q);
}

grid_path::grid_path(std::vector<grid_point> corners, bool closed)
    : corners_(std::move(corners)), closed_(closed) {
    if (corners_.empty()) throw std::invalid_argument("grid-path needs at least one grid-point");
    std::size_t segs = corners_.size() - 1 + (closed_ ? 1 : 0);
    for (std::size_t i = 0; i < segs; ++i) {
        grid_point p = corners_[i];
        grid_point q = corners_[(i + 1) % corners_.size()];
        if (p == q) throw std::invalid_argument("zero-length segment at corner " + point_str(p));
        if (p.x != q.x && p.y != q.y)
            throw std::invalid_argument("segment " + point_str(p) + "-" + point_str(q) +
                                        " is not axis-aligned");
    }
    if (closed_ && corners_.size() < 4)
        throw std::invalid_argument("closed grid-path needs at least four corners");
    // Trail invariant: expanding to unit steps repeats no grid-edge.
    auto pts = points();
    std::set<grid_edge> seen;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        grid_edge e{pts[i], pts[i + 1]};
        if (!seen.insert(e).second)
            throw std::invalid_argument("repeated grid-edge " + point_str(e.a) + "-" + point_str(e.b));
    }
}

grid_path grid_path::from_points(const std::vector<grid_point>& pts, bool closed) {
    if (pts.empty()) throw std::invalid_argument("grid-path needs at least one grid-point");
    std::vector<grid_point> seq = pts;
    if (closed) {
        if (seq.front() != seq.back())
            throw std::invalid_argument("closed point sequence must end at its start");
        seq.pop_back();
    }
    std::vector<grid_point> corners;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0 && i + 1 < seq.size()) {
            grid_point a = seq[i - 1], b = seq[i], c = seq[i + 1];
            if ((a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y)) continue;
        }
        corners.push_back(seq[i]);
    }
    if (closed && corners.size() >= 3) {
        // Merge collinear runs across the wrap point as well.
        auto collinear = [](grid_point a, grid_point b, grid_point c) {
            return (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y);
        };
        if (collinear(corners[corners.size() - 2], corners.back(), corners.front()))
            corners.pop_back();
        if (corners.size() >= 3 && collinear(corners.back(), corners.front(), corners[1]))
            corners.erase(corners.begin());
    }
    return grid_path(std::move(corners), closed);
}

std::vector<grid_point> grid_path::points() const {
    std::vector<grid_point> pts{corners_.front()};
    for (std::size_t i = 1; i < corners_.size(); ++i) append_segment(pts, corners_[i - 1], corners_[i]);
    if (closed_) append_segment(pts, corners_.back(), corners_.front());
    return pts;
}

std::set<grid_point> grid_path::point_set() const {
    auto pts = points();
    return {pts.begin(), pts.end()};
}

std::set<grid_edge> grid_path::unit_edges() const {
    auto pts = points();
    std::set<grid_edge> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.insert(grid_edge{pts[i], pts[i + 1]});
    return out;
}

grid_path grid_path::translated(int dx, int dy) const {
    std::vector<grid_point> corners = corners_;
    for (auto& p : corners) p = {p.x + dx, p.y + dy};
    return grid_path(std::move(corners), closed_);
}

grid_path grid_path::reversed() const {
    std::vector<grid_point> corners(corners_.rbegin(), corners_.rend());
    return grid_path(std::move(corners), closed_);
}

bool grid_path::uses_edge(const grid_edge& e) const { return unit_edges().count(e) > 0; }

namespace {

// dx and dy deltas over the unit-step sequence, each either all >= 0 or all <= 0
// in some common traversal direction.
struct delta_signs {
    bool x_up = true, x_down = true, y_up = true, y_down = true;
};

delta_signs scan(const grid_path& p) {
    if (p.closed()) throw std::invalid_argument("monotone classification is undefined for closed paths");
    delta_signs s;
    auto pts = p.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        int dx = pts[i + 1].x - pts[i].x;
        int dy = pts[i + 1].y - pts[i].y;
        if (dx > 0) s.x_down = false;
        if (dx < 0) s.x_up = false;
        if (dy > 0) s.y_down = false;
        if (dy < 0) s.y_up = false;
    }
    return s;
}

}  // namespace

bool is_x_monotone(const grid_path& p) {
    auto s = scan(p);
    return s.x_up || s.x_down;
}

bool is_xy_monotone(const grid_path& p) {
    auto s = scan(p);
    return (s.x_up || s.x_down) && (s.y_up || s.y_down);
}

bool is_xy_plus_monotone(const grid_path& p) {
    auto s = scan(p);
    return (s.x_up && s.y_up) || (s.x_down && s.y_down);
}

bounding_box compute_bounding_box(const std::vector<grid_path>& paths) {
    if (paths.empty()) throw std::invalid_argument("bounding box of an empty collection");
    int xmin = paths[0].corners()[0].x, xmax = xmin;
    int ymin = paths[0].corners()[0].y, ymax = ymin;
    for (const auto& p : paths) {
        for (const auto& c : p.corners()) {
            xmin = std::min(xmin, c.x);
            xmax = std::max(xmax, c.x);
            ymin = std::min(ymin, c.y);
            ymax = std::max(ymax, c.y);
        }
    }
    return {xmax - xmin + 1, ymax - ymin + 1, {xmin, ymin}};
}

std::string monotone_class(const grid_path& p) {
    if (p.closed()) return "none";
    if (is_xy_plus_monotone(p)) return "xy+";
    if (is_xy_monotone(p)) return "xy";
    if (is_x_monotone(p)) return "x";
    return "none";
}

}  // namespace gridpaths
