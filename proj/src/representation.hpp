#pragma once

#include <map>
#include <optional>
#include <string>

#include "graph.hpp"
#include "grid.hpp"

namespace gridpaths {

enum class rep_mode { vpg, proper_vpg, epg };

std::string to_string(rep_mode m);
rep_mode rep_mode_from_string(const std::string& s);

/// One vertex-path per vertex plus the intended adjacency semantics.
struct grid_representation {
    std::map<vertex_id, grid_path> paths;
    rep_mode mode = rep_mode::epg;

    grid_representation translated(int dx, int dy) const;
    std::vector<grid_path> all_paths() const;
};

struct representation_stats {
    bounding_box box;
    std::size_t distinct_grid_edges = 0;
    std::size_t multiplicity = 0;       // max vertex-paths sharing one grid-edge
    std::string monotone_class = "xy+"; // strongest class all paths satisfy
};

struct proper_vpg_certificate {
    bool proper = true;
    std::string violation;  // first witnessing pair / edge / point
};

struct validation_report {
    bool exact = false;
    std::vector<vertex_pair> missing;  // in g, not induced
    std::vector<vertex_pair> excess;   // induced, not in g
    std::map<vertex_id, std::string> path_class;
    representation_stats stats;
    std::optional<proper_vpg_certificate> properness;  // checked for proper-VPG mode
};

/// Edge (v,w) iff the two vertex-paths share a grid-edge. Computed from
/// corner-list segment overlaps.
graph induced_graph_epg(const grid_representation& rep);

/// Edge (v,w) iff the two vertex-paths share a grid-point.
graph induced_graph_vpg(const grid_representation& rep);

proper_vpg_certificate is_proper_vpg(const grid_representation& rep);

validation_report validate(const grid_representation& rep, const graph& g);

representation_stats stats(const grid_representation& rep);

}  // namespace gridpaths
