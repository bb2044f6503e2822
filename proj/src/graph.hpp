#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridpaths {

using vertex_id = int;
using vertex_pair = std::pair<vertex_id, vertex_id>;

inline vertex_pair ordered_pair(vertex_id u, vertex_id v) {
    return u < v ? vertex_pair{u, v} : vertex_pair{v, u};
}

/// Simple undirected graph. No self-loops, no parallel edges.
class graph {
public:
    graph() = default;
    graph(std::vector<vertex_id> vertices, std::vector<vertex_pair> edges);

    void add_vertex(vertex_id v);
    void add_edge(vertex_id u, vertex_id v);
    void remove_vertex(vertex_id v);
    void remove_edge(vertex_id u, vertex_id v);

    bool has_vertex(vertex_id v) const { return verts_.count(v) > 0; }
    bool has_edge(vertex_id u, vertex_id v) const { return edges_.count(ordered_pair(u, v)) > 0; }

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::set<vertex_id>& vertices() const { return verts_; }
    const std::set<vertex_pair>& edges() const { return edges_; }

    std::vector<vertex_id> neighbors(vertex_id v) const;
    std::size_t degree(vertex_id v) const;
    std::size_t max_degree() const;

    vertex_id fresh_id() const;

    bool is_connected() const;
    std::vector<std::set<vertex_id>> connected_components() const;

    bool operator==(const graph&) const = default;

private:
    std::set<vertex_id> verts_;
    std::set<vertex_pair> edges_;
};

/// Vertex/edge deletions followed by a sequence of edge contractions.
struct minor_recipe {
    std::set<vertex_id> deleted_vertices;
    std::set<vertex_pair> deleted_edges;
    std::vector<vertex_pair> contracted_edges;
    std::map<vertex_pair, vertex_id> name_map;  // optional ids for contraction vertices
};

/// One (tail, head) direction per edge of some graph.
struct orientation {
    std::map<vertex_pair, vertex_pair> direction;  // key: ordered pair, value: (tail, head)

    vertex_id tail(vertex_id u, vertex_id v) const { return direction.at(ordered_pair(u, v)).first; }
    vertex_id head(vertex_id u, vertex_id v) const { return direction.at(ordered_pair(u, v)).second; }
};

bool triangle_free(const graph& g);

/// Replaces every edge by a length-2 path through a fresh vertex.
graph subdivide_all_edges(const graph& g);

/// Splits vertices of degree >= 5 until maximum degree <= 4.
/// Returns the split graph and a map from every vertex of the result to the
/// original vertex it arose from.
std::pair<graph, std::map<vertex_id, vertex_id>> split_to_4graph(const graph& g);

/// Orients a connected graph of maximum degree <= 4 so that every vertex of
/// degree 4 has at least one outgoing edge.
orientation orient_with_out_edges(const graph& g);

/// Contracts edge (a, b) of g into new_id in place.
void contract_edge(graph& g, vertex_id a, vertex_id b, vertex_id new_id);

graph apply_minor(const graph& g, const minor_recipe& r);

/// Fresh ids used by apply_minor for the contractions of r, in order.
std::vector<vertex_id> contraction_ids(const graph& g, const minor_recipe& r);

bool is_bipartite(const graph& g);

}  // namespace gridpaths
