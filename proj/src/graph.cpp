#include "graph.hpp"

#include <algorithm>
#include <deque>

namespace gridpaths {

graph::graph(std::vector<vertex_id> vertices, std::vector<vertex_pair> edges) {
    for (vertex_id v : vertices) add_vertex(v);
    for (auto [u, v] : edges) add_edge(u, v);
}

void graph::add_vertex(vertex_id v) {
    if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
    verts_.insert(v);
}

void graph::add_edge(vertex_id u, vertex_id v) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
        throw std::invalid_argument("edge endpoint is not a listed vertex");
    edges_.insert(ordered_pair(u, v));
}

void graph::remove_vertex(vertex_id v) {
    verts_.erase(v);
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first == v || it->second == v)
            it = edges_.erase(it);
        else
            ++it;
    }
}

void graph::remove_edge(vertex_id u, vertex_id v) { edges_.erase(ordered_pair(u, v)); }

std::vector<vertex_id> graph::neighbors(vertex_id v) const {
    std::vector<vertex_id> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t graph::degree(vertex_id v) const { return neighbors(v).size(); }

std::size_t graph::max_degree() const {
    std::size_t d = 0;
    for (vertex_id v : verts_) d = std::max(d, degree(v));
    return d;
}

vertex_id graph::fresh_id() const { return verts_.empty() ? 0 : *verts_.rbegin() + 1; }

std::vector<std::set<vertex_id>> graph::connected_components() const {
    std::vector<std::set<vertex_id>> comps;
    std::set<vertex_id> seen;
    for (vertex_id s : verts_) {
        if (seen.count(s)) continue;
        std::set<vertex_id> comp;
        std::deque<vertex_id> queue{s};
        seen.insert(s);
        while (!queue.empty()) {
            vertex_id v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (vertex_id w : neighbors(v)) {
                if (seen.insert(w).second) queue.push_back(w);
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool graph::is_connected() const { return connected_components().size() <= 1; }

bool triangle_free(const graph& g) {
    for (const auto& [u, v] : g.edges()) {
        auto nu = g.neighbors(u);
        for (vertex_id w : g.neighbors(v)) {
            if (w != u && std::binary_search(nu.begin(), nu.end(), w)) return false;
        }
    }
    return true;
}

graph subdivide_all_edges(const graph& g) {
    graph out;
    for (vertex_id v : g.vertices()) out.add_vertex(v);
    vertex_id next = g.fresh_id();
    for (const auto& [u, v] : g.edges()) {
        vertex_id mid = next++;
        out.add_vertex(mid);
        out.add_edge(u, mid);
        out.add_edge(mid, v);
    }
    return out;
}

std::pair<graph, std::map<vertex_id, vertex_id>> split_to_4graph(const graph& g) {
    graph out = g;
    std::map<vertex_id, vertex_id> origin;
    for (vertex_id v : g.vertices()) origin[v] = v;

    // Process ascending; fresh vertices get degree exactly 4 and never need
    // splitting themselves.
    std::deque<vertex_id> pending(g.vertices().begin(), g.vertices().end());
    while (!pending.empty()) {
        vertex_id v = pending.front();
        while (out.degree(v) >= 5) {
            auto nbrs = out.neighbors(v);
            vertex_id split = out.fresh_id();
            out.add_vertex(split);
            origin[split] = origin[v];
            for (int i = 0; i < 3; ++i) {
                out.remove_edge(v, nbrs[i]);
                out.add_edge(split, nbrs[i]);
            }
            out.add_edge(v, split);
        }
        pending.pop_front();
    }
    return {out, origin};
}

namespace {

// Deterministic Eulerian circuit on a connected graph with all even degrees.
std::vector<vertex_id> eulerian_circuit(const graph& g) {
    std::map<vertex_id, std::vector<vertex_id>> adj;
    std::map<vertex_id, std::size_t> ptr;
    for (vertex_id v : g.vertices()) adj[v] = g.neighbors(v);
    std::set<vertex_pair> used;

    std::vector<vertex_id> stack{*g.vertices().begin()};
    std::vector<vertex_id> circuit;
    while (!stack.empty()) {
        vertex_id v = stack.back();
        auto& nb = adj[v];
        std::size_t& p = ptr[v];
        while (p < nb.size() && used.count(ordered_pair(v, nb[p]))) ++p;
        if (p < nb.size()) {
            used.insert(ordered_pair(v, nb[p]));
            stack.push_back(nb[p]);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

}  // namespace

orientation orient_with_out_edges(const graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("orient_with_out_edges: graph is disconnected");
    if (g.max_degree() > 4) throw std::invalid_argument("orient_with_out_edges: maximum degree exceeds 4");

    orientation o;
    bool all_four = !g.vertices().empty();
    vertex_id root = *g.vertices().begin();
    for (vertex_id v : g.vertices()) {
        if (g.degree(v) != 4) {
            all_four = false;
            root = v;
            break;
        }
    }

    if (all_four) {
        auto circuit = eulerian_circuit(g);
        for (std::size_t i = 0; i + 1 < circuit.size(); ++i) {
            o.direction[ordered_pair(circuit[i], circuit[i + 1])] = {circuit[i], circuit[i + 1]};
        }
        return o;
    }

    // BFS spanning tree rooted at a vertex of degree <= 3, edges toward the root.
    std::map<vertex_id, vertex_id> parent;
    std::deque<vertex_id> queue{root};
    std::set<vertex_id> seen{root};
    while (!queue.empty()) {
        vertex_id v = queue.front();
        queue.pop_front();
        for (vertex_id w : g.neighbors(v)) {
            if (seen.insert(w).second) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (parent.count(u) && parent.at(u) == v)
            o.direction[{u, v}] = {u, v};
        else if (parent.count(v) && parent.at(v) == u)
            o.direction[{u, v}] = {v, u};
        else
            o.direction[{u, v}] = {u, v};  // non-tree edge: tail = lower id
    }
    return o;
}

void contract_edge(graph& g, vertex_id a, vertex_id b, vertex_id new_id) {
    if (!g.has_edge(a, b))
        throw std::invalid_argument("contract: (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") is not an edge");
    if (g.has_vertex(new_id))
        throw std::invalid_argument("contract: id " + std::to_string(new_id) + " already in use");
    std::set<vertex_id> nbrs;
    for (vertex_id w : g.neighbors(a)) nbrs.insert(w);
    for (vertex_id w : g.neighbors(b)) nbrs.insert(w);
    nbrs.erase(a);
    nbrs.erase(b);
    g.remove_vertex(a);
    g.remove_vertex(b);
    g.add_vertex(new_id);
    for (vertex_id w : nbrs) g.add_edge(new_id, w);
}

graph apply_minor(const graph& g, const minor_recipe& r) {
    graph out = g;
    for (vertex_id v : r.deleted_vertices) {
        if (!out.has_vertex(v))
            throw std::invalid_argument("delete-vertex " + std::to_string(v) + ": no such vertex");
        out.remove_vertex(v);
    }
    for (auto [u, v] : r.deleted_edges) {
        if (!out.has_edge(u, v))
            throw std::invalid_argument("delete-edge " + std::to_string(u) + " " + std::to_string(v) +
                                        ": no such edge");
        out.remove_edge(u, v);
    }
    for (auto e : r.contracted_edges) {
        auto it = r.name_map.find(ordered_pair(e.first, e.second));
        vertex_id id = it != r.name_map.end() ? it->second : out.fresh_id();
        contract_edge(out, e.first, e.second, id);
    }
    return out;
}

std::vector<vertex_id> contraction_ids(const graph& g, const minor_recipe& r) {
    graph out = g;
    for (vertex_id v : r.deleted_vertices) out.remove_vertex(v);
    for (auto [u, v] : r.deleted_edges) out.remove_edge(u, v);
    std::vector<vertex_id> ids;
    for (auto e : r.contracted_edges) {
        auto it = r.name_map.find(ordered_pair(e.first, e.second));
        vertex_id id = it != r.name_map.end() ? it->second : out.fresh_id();
        contract_edge(out, e.first, e.second, id);
        ids.push_back(id);
    }
    return ids;
}

bool is_bipartite(const graph& g) {
    std::map<vertex_id, int> colour;
    for (vertex_id s : g.vertices()) {
        if (colour.count(s)) continue;
        colour[s] = 0;
        std::deque<vertex_id> queue{s};
        while (!queue.empty()) {
            vertex_id v = queue.front();
            queue.pop_front();
            for (vertex_id w : g.neighbors(v)) {
                auto it = colour.find(w);
                if (it == colour.end()) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (it->second == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace gridpaths
