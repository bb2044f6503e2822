#pragma once

#include <map>
#include <vector>

#include "graph.hpp"

namespace gridpaths {

/// Closed integer interval per vertex. After normalization all 2n endpoints
/// are distinct values in {1,...,2n}.
struct interval_representation {
    std::map<vertex_id, std::pair<int, int>> intervals;  // v -> (l, r)

    int left(vertex_id v) const { return intervals.at(v).first; }
    int right(vertex_id v) const { return intervals.at(v).second; }
    std::size_t size() const { return intervals.size(); }

    bool is_normalized() const;  // distinct endpoints, l < r everywhere
};

/// Ordered bags; every vertex occupies a contiguous run of bags.
struct path_decomposition {
    std::vector<std::set<vertex_id>> bags;

    std::size_t width() const;
};

interval_representation normalize(const interval_representation& ir);

graph induced_interval_graph(const interval_representation& ir);

/// Maximum number of intervals over any point, by endpoint sweep.
std::size_t clique_number(const interval_representation& ir);

/// Left-to-right first-fit colouring; uses exactly clique_number colours.
std::map<vertex_id, int> greedy_colour(const interval_representation& ir);

/// Splits by connectivity of the induced graph; components keep their
/// normalized coordinates, so their x-ranges are pairwise disjoint.
std::vector<interval_representation> components(const interval_representation& ir);

interval_representation decomposition_to_intervals(const path_decomposition& pd);

}  // namespace gridpaths
