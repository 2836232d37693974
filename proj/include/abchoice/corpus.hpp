#pragma once

#include <cstdint>
#include <vector>

#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"
#include "abchoice/random_choice.hpp"

namespace abchoice {

/// One representative per isomorphism class of connected graphs on exactly n
/// vertices (n <= 7), in increasing order of canonical adjacency code.
std::vector<Graph> connected_graphs(int n);
/// All of the above for 1..max_n.
std::vector<Graph> connected_graphs_up_to(int max_n);

/// Uniform random `size`-subset of {0..palette-1}, sorted.
ColorSet random_color_set(Rng& rng, int size, int palette);
ListAssignment random_lists(Rng& rng, int n, int size, int palette);

} // namespace abchoice
