#pragma once

#include <vector>

#include "abchoice/graph.hpp"

namespace abchoice {

using Color = int;
/// Sorted, duplicate-free set of colours.
using ColorSet = std::vector<Color>;

/// S(v) for every vertex v = 0..n-1.
using ListAssignment = std::vector<ColorSet>;
/// C(v) for every vertex v = 0..n-1.
using Choice = std::vector<ColorSet>;

ColorSet make_color_set(std::vector<Color> colors);
ColorSet set_union(const ColorSet& a, const ColorSet& b);
ColorSet set_difference(const ColorSet& a, const ColorSet& b);
ColorSet set_intersection(const ColorSet& a, const ColorSet& b);
bool intersects(const ColorSet& a, const ColorSet& b);
bool is_subset(const ColorSet& sub, const ColorSet& super);

/// Same list for every vertex.
ListAssignment uniform_lists(int n, const ColorSet& colors);

/// True iff every C(v) is a subset of S(v) of size exactly b and adjacent
/// vertices receive disjoint sets.
bool verify_choice(const Graph& g, const ListAssignment& lists, const Choice& choice, int b);

/// Colouring view of a size-1 choice.
std::vector<Color> as_coloring(const Choice& choice);

} // namespace abchoice
