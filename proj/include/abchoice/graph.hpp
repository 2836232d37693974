#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace abchoice {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on the dense vertex set {0, ..., n-1}.
///
/// Self-loops are rejected; re-adding an existing edge is a no-op. Neighbour
/// lists are kept sorted so iteration order (and everything derived from it)
/// is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int add_vertex();
    /// Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v);

    int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t num_edges() const noexcept { return num_edges_; }
    bool empty() const noexcept { return adj_.empty(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Neighbourhood bitmask; only valid while num_vertices() <= 64.
    std::uint64_t neighbor_mask(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t num_edges_ = 0;
};

/// Directed simple graph (no self-loops, no parallel arcs; antiparallel
/// pairs u->v, v->u are allowed).
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Edge> arcs);

    bool add_arc(Vertex from, Vertex to);

    int num_vertices() const noexcept { return static_cast<int>(out_.size()); }
    std::size_t num_arcs() const noexcept { return num_arcs_; }

    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int max_out_degree() const;
    bool has_arc(Vertex from, Vertex to) const;

    std::vector<Edge> arcs() const;

    /// Underlying undirected graph (antiparallel arcs collapse to one edge).
    Graph underlying() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t num_arcs_ = 0;
};

/// An induced subgraph together with the map back to the parent's ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

struct InducedSubdigraph {
    Digraph digraph;
    std::vector<Vertex> to_parent;
};

/// `vertices` need not be sorted; the subgraph keeps the given order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);

// Small constructors used throughout tests, gadgets and the CLI.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_complete_multipartite(std::span<const int> class_sizes);
Graph make_petersen();
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
Digraph make_directed_cycle(int n);

} // namespace abchoice
