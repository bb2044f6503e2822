#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridpaths {

struct grid_point {
    int x = 0;
    int y = 0;
    auto operator<=>(const grid_point&) const = default;
};

/// Unit grid-edge between two lattice points at distance 1. Stored normalized
/// (smaller endpoint first).
struct grid_edge {
    grid_point a, b;

    grid_edge(grid_point p, grid_point q);
    auto operator<=>(const grid_edge&) const = default;

    bool horizontal() const { return a.y == b.y; }
};

/// Axis-aligned lattice trail given by its corner points. Grid-points may
/// repeat, grid-edges may not.
class grid_path {
public:
    explicit grid_path(std::vector<grid_point> corners, bool closed = false);

    /// Builds a path from a full unit-step point sequence, merging collinear
    /// runs into corners. For closed paths the sequence must end where it starts.
    static grid_path from_points(const std::vector<grid_point>& pts, bool closed = false);

    const std::vector<grid_point>& corners() const { return corners_; }
    bool closed() const { return closed_; }

    /// Full unit-step point sequence. Closed paths end at their start point.
    std::vector<grid_point> points() const;
    std::set<grid_point> point_set() const;
    std::set<grid_edge> unit_edges() const;

    grid_path translated(int dx, int dy) const;
    grid_path reversed() const;

    bool uses_edge(const grid_edge& e) const;

    bool operator==(const grid_path&) const = default;

private:
    std::vector<grid_point> corners_;
    bool closed_ = false;
};

/// Grid span in columns/rows: a w x h box covers w grid-points per row.
struct bounding_box {
    int w = 1;
    int h = 1;
    grid_point origin;

    bool operator==(const bounding_box&) const = default;
};

bool is_x_monotone(const grid_path& p);
bool is_xy_monotone(const grid_path& p);
bool is_xy_plus_monotone(const grid_path& p);

bounding_box compute_bounding_box(const std::vector<grid_path>& paths);

/// Strongest class first: "xy+" > "xy" > "x" > "none". Closed paths are "none".
std::string monotone_class(const grid_path& p);

}  // namespace gridpaths
