#pragma once

#include "intervals.hpp"
#include "representation.hpp"

namespace gridpaths {

struct bound_report {
    std::string name;
    std::string inequality;  // with substituted numbers
    bool applicable = true;
    bool holds = true;
    std::string witness;  // violating structure, if any
};

/// Triangle-free lower bound: a validated EPG representation uses at least m
/// distinct grid-edges.
bound_report check_edge_count_bound(const grid_representation& rep, const graph& g);

/// Projection bound: the clique number of the x-projection interval graph is
/// at most c(3h-1), certifying pw <= c(3h-1)-1.
bound_report projection_pathwidth_bound(const grid_representation& rep);

/// Exact pathwidth by the vertex-separation subset DP, n <= 12.
struct pathwidth_result {
    std::size_t k = 0;
    std::vector<vertex_id> ordering;  // one optimal vertex ordering
};
pathwidth_result brute_force_pathwidth(const graph& g);

/// Exact pathwidth against the projection bound with the representation's
/// measured c and h.
bound_report cross_check_pathwidth(const grid_representation& rep, const graph& g);

}  // namespace gridpaths
