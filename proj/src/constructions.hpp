#pragma once

#include "intervals.hpp"
#include "representation.hpp"

namespace gridpaths {

/// Greedy chain of farthest-reaching intervals, from the leftmost interval to
/// the rightmost. Candidate sets are kept for inspection.
struct farthest_path_result {
    std::vector<vertex_id> order;                 // a_1 ... a_p
    std::vector<std::vector<vertex_id>> candidates;  // A_i per step (A_p is empty)
};

/// Proper xy+ VPG of a supergraph of the interval graph, built by peeling
/// farthest paths. k is the recursion depth (clique number - 1); the anchors
/// record each vertex's horizontal segment x-range [2l(v), 2r(v)].
struct pathwidth_vpg_result {
    grid_representation representation;
    int k = 0;
    std::map<vertex_id, std::pair<int, int>> anchor_x;
};

/// Gamma-shaped proper VPG of K_n in an n x n box, every path xy+-monotone.
grid_representation complete_vpg(std::size_t n);

/// xy+ EPG of an arbitrary graph inside a 3n x 2n box.
grid_representation epg_any_graph(const graph& g);

farthest_path_result farthest_path(const interval_representation& ir);

pathwidth_vpg_result pathwidth_vpg(const interval_representation& ir);

/// xy+ EPG of g through the interval supergraph given by ir, with height at
/// most 8k+8 and width at most 4n+4k+4 for k = clique_number(ir) - 1.
/// mapping takes g's vertex ids to ir's (empty = identity).
grid_representation pathwidth_epg(const graph& g, const interval_representation& ir,
                                  const std::map<vertex_id, vertex_id>& mapping = {});

}  // namespace gridpaths
