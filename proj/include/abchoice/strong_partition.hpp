#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"

namespace abchoice {

using SetFamily = std::vector<ColorSet>;
using Parts = std::vector<std::vector<Vertex>>;

/// [G, V_1, ..., V_r]: base plus a clique on every part. Throws
/// OverlappingParts, or InvalidInput for unknown vertices.
Graph augment(const Graph& base, const Parts& parts);

struct SplitResult {
    /// Indices into the input family.
    std::vector<int> first;
    std::vector<int> second;
    /// Per input index: a k-subset for members of `first`, an l-subset for
    /// members of `second`.
    std::vector<ColorSet> chosen;
    /// Number of colours moved from A to B when the sweep crossed k.
    int moves = 0;
};

/// k+l sets of size k+l split into k and l sets with chosen subsets that are
/// disjoint across the two groups. Throws SizeMismatch.
SplitResult split_family(const SetFamily& f, int k, int l);

struct PartitionResult {
    /// m groups of k indices each.
    std::vector<std::vector<int>> groups;
    /// Per input index, a k-subset; disjoint across different groups.
    std::vector<ColorSet> chosen;
};

/// km sets of size km into m groups of k. Throws SizeMismatch.
PartitionResult partition_family(const SetFamily& f, int k, int m);

/// True iff chosen subsets in different groups never meet.
bool check_split(const SetFamily& f, const SplitResult& r, int k, int l);
bool check_partition(const SetFamily& f, const PartitionResult& r, int k, int m);

/// Answers "is this graph k-colourable" with a colouring, or nullopt.
using ColoringOracle = std::function<std::optional<std::vector<Color>>(const Graph&, int)>;
ColoringOracle brute_force_coloring_oracle();

/// Proper (k+1)-colouring (colours 0..k) of [g, parts] for parts of size
/// <= k+1, built from two k-colouring queries. Throws OracleRefused.
std::vector<Color> strong_color_lift(const Graph& g, const Parts& parts, int k,
                                     const ColoringOracle& oracle = brute_force_coloring_oracle());

/// A chooser for augmented graphs: one colour per vertex from its list.
using ListChooser = std::function<std::optional<Choice>(const Graph&, const ListAssignment&)>;
ListChooser brute_force_list_chooser();

/// Colouring of [g, parts] (parts of size <= km) from km-lists: every part is
/// split into m sub-parts of size <= k with disjoint k-sublists, then the
/// k-chooser runs on [g, sub-parts]. Throws ChooserRefused.
Choice strong_choice_scale(const Graph& g, const Parts& parts, int k, int m, const ListAssignment& lists,
                           const ListChooser& chooser = brute_force_list_chooser());

/// Same, for vertex-disjoint parts of size exactly km covering every vertex.
Choice choose_clique_cover(const Graph& g, const Parts& parts, int k, int m, const ListAssignment& lists,
                           const ListChooser& chooser = brute_force_list_chooser());

} // namespace abchoice
