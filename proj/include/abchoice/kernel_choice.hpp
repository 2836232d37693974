#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"
#include "abchoice/orientation.hpp"

namespace abchoice {

/// Kernel of a digraph with no odd directed cycle: an independent set K such
/// that every vertex outside K has an out-neighbour in K. Throws OddCycle
/// (witness in Error::witness) when the digraph has an odd directed cycle.
std::vector<Vertex> kernel(const Digraph& d);

bool is_kernel(const Digraph& d, const std::vector<Vertex>& k);

/// Picks the next colour among the candidates (sorted ascending, never empty).
using ColorRule = std::function<Color(const ColorSet& candidates)>;

struct MultichoiceStats {
    /// Number of colour rounds; never more than k|V|.
    int iterations = 0;
};

/// Chooses k colours per vertex from lists with |S(v)| >= k(d+(v)+1) by
/// handing each colour, in turn, to a kernel of the subdigraph induced by the
/// still-unsaturated vertices whose list holds that colour. The default rule
/// takes the smallest remaining colour.
Choice kernel_multichoice(const Digraph& d, int k, const ListAssignment& lists,
                          MultichoiceStats* stats = nullptr, const ColorRule& rule = {});

/// kernel_multichoice on the orientation's digraph, with the list bound
/// checked against the orientation's maximum out-degree.
Choice choose_via_orientation(const Orientation& orient, int k, const ListAssignment& lists);

/// Chordal graphs: lists of size k*omega(g) always suffice.
Choice choose_chordal(const Graph& g, int k, const ListAssignment& lists);

/// Connected graphs other than complete graphs and odd cycles, with lists of
/// size k*Delta(g).
Choice choose_brooks(const Graph& g, int k, const ListAssignment& lists);

} // namespace abchoice
