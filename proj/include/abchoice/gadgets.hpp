#pragma once

#include <string>
#include <vector>

#include "abchoice/graph.hpp"

namespace abchoice {

/// Theta graph: u = 0, v = 1, then the interiors of the three paths in order.
/// Throws NotSimple when two of the lengths equal 1.
Graph gen_theta(int a, int b, int c);

/// |V(g)| disjoint copies of g (copy i holds ids i*n .. i*n+n-1) plus an apex
/// with id n*n joined to every copy vertex.
Graph gen_apex_tower(const Graph& g);

/// side[v] in {0,1}: 0 marks X, 1 marks Y. An empty `side` means "compute
/// one". Throws NotBipartite if the graph or the given sides are not.
/// Nine copies G_{i,j}, numbered row-major, then u = 9n and v = 9n+1;
/// u meets the f=2 vertices of X in every copy, v those of Y.
Graph gen_bg23_gadget(const Graph& g, const std::vector<int>& f, const std::vector<int>& side = {});

/// (k+1)^4 copies, then u joined to every X vertex and v to every Y vertex.
Graph gen_bgk_gadget(const Graph& g, int k, const std::vector<int>& side = {});

struct StrongLowerGadget {
    Graph graph;
    /// V1 = B1+C1+D1, V2 = B2+C2+D2, V3 = A+E.
    std::vector<std::vector<Vertex>> parts;
    /// Vertex ranges of A, B1, B2, C1, C2, D1, D2, E in this order.
    std::vector<std::vector<Vertex>> classes;
};

/// Base graph of maximum degree d with three parts of size 2d-1 whose
/// augmentation is not (2d-1)-colourable. Throws DegenerateParameters for d < 2.
StrongLowerGadget gen_strong_lower(int d);

/// Cycle 0..3kn-1 plus n disjoint 3k-cliques {j, j+n, ..., j+(3k-1)n}.
/// The result is (3k+1)-regular. Throws DegenerateParameters.
Graph gen_hamilton_clique(int k, int n);

/// K_{2,4} (sides {0,1} and {2..5}) plus apex 6.
Graph gen_k24_prime();

struct GadgetFamily {
    std::string name;
    std::string parameters;
    std::string description;
};

/// Every family the CLI can generate, in a fixed order.
const std::vector<GadgetFamily>& gadget_families();

} // namespace abchoice
