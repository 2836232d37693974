#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abchoice/graph.hpp"

namespace abchoice {

/// Exact non-negative rational, always stored in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::strong_ordering operator<=>(const Rational& o) const;
    std::string str() const;
    /// Smallest integer >= the value.
    std::int64_t ceil() const;
};

/// An orientation of `base`: arcs()[i] is the direction chosen for
/// base.edges()[i].
class Orientation {
public:
    Orientation(Graph base, std::vector<Edge> arcs);

    const Graph& base() const { return base_; }
    const std::vector<Edge>& arcs() const { return arcs_; }
    Digraph digraph() const;
    int max_out_degree() const;
    std::vector<int> out_degrees() const;

private:
    Graph base_;
    std::vector<Edge> arcs_;
};

/// M(G): max over non-empty subgraphs H of |E(H)|/|V(H)|. Throws EmptyGraph.
Rational density_M(const Graph& g);

/// Orientation with every out-degree <= d, present iff M(g) <= d.
std::optional<Orientation> orient_bounded_outdegree(const Graph& g, int d);

/// Acyclic orientation from repeated minimum-degree removal (ties to the
/// smallest id); each removed vertex points at its remaining neighbours.
/// Absent when some induced subgraph has minimum degree > d.
std::optional<Orientation> orient_degeneracy(const Graph& g, int d);

/// Removal order used by orient_degeneracy, without the degree bound.
std::vector<Vertex> degeneracy_removal_order(const Graph& g);

} // namespace abchoice
