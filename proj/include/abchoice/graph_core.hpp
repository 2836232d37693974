#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abchoice/graph.hpp"

namespace abchoice {

/// Result of stripping degree-1 vertices one at a time.
struct CorePeeling {
    InducedSubgraph core;
    /// Removed vertices in deletion order, each with the single neighbour it
    /// still had when it was deleted.
    std::vector<std::pair<Vertex, Vertex>> removed;
};

CorePeeling peel_core(const Graph& g);
InducedSubgraph core(const Graph& g);

struct CoreClass {
    enum class Tag { K1, EvenCycle, Theta22Even, Other };
    Tag tag = Tag::Other;
    /// EvenCycle(m) is C_{2m+2}; Theta22Even(m) is Theta_{2,2,2m}.
    int m = 0;

    friend bool operator==(const CoreClass&, const CoreClass&) = default;
};

std::string to_string(const CoreClass& c);

/// Throws DisconnectedInput when g has two or more components.
CoreClass classify_core(const Graph& g);

struct LineGraph {
    Graph graph;
    /// Vertex i of the line graph is edge edges[i] of the source.
    std::vector<Edge> edges;
};

LineGraph line_graph(const Graph& g);

/// Perfect elimination ordering by repeated removal of the smallest-id
/// simplicial vertex, or nullopt if g is not chordal.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);
bool is_triangulated(const Graph& g);

struct SccResult {
    /// Component index per vertex. Components are numbered in topological
    /// order of the condensation (every arc goes from a lower to a higher or
    /// equal index).
    std::vector<int> component;
    std::vector<std::vector<Vertex>> members;
    Digraph condensation;
};

SccResult scc(const Digraph& d);

/// A simple directed cycle of odd length, listed v0 -> v1 -> ... -> v0
/// (first vertex not repeated), or nullopt.
std::optional<std::vector<Vertex>> odd_directed_cycle(const Digraph& d);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertex sets of the biconnected components (blocks). Isolated vertices
/// form singleton blocks.
std::vector<std::vector<Vertex>> blocks(const Graph& g);
bool is_biconnected(const Graph& g);

/// 0/1 side per vertex, or nullopt if g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);

int clique_number(const Graph& g);

/// BFS distance from a vertex set; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, const std::vector<Vertex>& sources);

/// An induced subgraph that is a chordless even cycle or an even cycle with
/// exactly one chord. Requires g 2-connected, not complete and not an odd
/// cycle (NotApplicable otherwise). Vertex order of the result follows the
/// cycle.
InducedSubgraph find_even_cycle_or_theta(const Graph& g);

} // namespace abchoice
