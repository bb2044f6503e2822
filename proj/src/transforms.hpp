#pragma once

#include "graph.hpp"
#include "representation.hpp"

namespace gridpaths {

/// Per graph-edge: the chosen shared grid-point of the two vertex-paths and
/// which path plays the rightward role (the other plays the upward role).
struct crossing {
    grid_point at;
    vertex_id rightward;
    vertex_id upward;
};

/// Picks for every edge of g_sub the lexicographically smallest shared
/// grid-point of the two vertex-paths, with roles read off the proper crossing.
std::map<vertex_pair, crossing> crossing_assignment(const grid_representation& rep,
                                                    const graph& g_sub);

/// Proper VPG -> EPG by doubling coordinates and adding a bump per edge of
/// g_sub at the chosen crossing. Output fits a 2w x 2h box and preserves
/// x-monotonicity. reverse_schedule applies the per-edge bumps in the
/// opposite order (the result must not depend on it).
grid_representation bump_transform(const grid_representation& rep, const graph& g_sub,
                                   bool reverse_schedule = false);

/// The coordinate map (i,j) -> (2i+j, 2j): horizontal unit steps become
/// length-2 runs, vertical unit steps become zig-zags. Preserves properness,
/// xy+-monotonicity and the induced VPG graph.
grid_representation skew(const grid_representation& rep);

/// Proper xy+ VPG -> xy+ EPG: skew, then reroute the upward path's zig-zag at
/// each chosen crossing to share a horizontal grid-edge. Fits (2w+h) x 2h.
grid_representation xyplus_transform(const grid_representation& rep, const graph& g_sub,
                                     bool reverse_schedule = false);

/// Lattice embedding of a 4-graph: vertex grid-points plus one grid-path per
/// edge. Route intersections must be true horizontal/vertical crossings.
struct orthogonal_drawing {
    std::map<vertex_id, grid_point> positions;
    std::map<vertex_pair, grid_path> routes;
};

/// Throws if d is not a valid orthogonal drawing of g.
void check_drawing(const orthogonal_drawing& d, const graph& g);

/// Orthogonal drawing of g -> EPG representation of apply_minor(g, r) in a
/// doubled grid, by tracing the duplicated edge routes around vertex squares.
grid_representation orth_to_epg(const orthogonal_drawing& d, const graph& g,
                                const minor_recipe& r, bool open_paths = true);

}  // namespace gridpaths
