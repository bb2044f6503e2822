#pragma once

#include <string>

#include "representation.hpp"

namespace gridpaths {

struct render_style {
    int cell = 24;         // pixels per grid unit, >= 4
    int offset = 3;        // parallel-stroke offset in pixels, < cell / (c + 1)
    bool labels = true;
    bool grid_dots = true;
};

/// Deterministic SVG document: one coloured polyline per vertex-path, with
/// paths that share a grid-edge drawn side-by-side at a small diagonal offset.
/// Identical inputs give identical bytes.
std::string render_svg(const grid_representation& rep, const render_style& style = {});

}  // namespace gridpaths
