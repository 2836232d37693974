#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "abchoice/exact_oracle.hpp"
#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"
#include "abchoice/orientation.hpp"
#include "abchoice/strong_partition.hpp"
#include "abchoice/two_choice.hpp"

namespace abchoice {

using Json = nlohmann::ordered_json;
using Label = std::int64_t;

/// A graph read from file: dense ids plus the labels they came from.
struct LabeledGraph {
    Graph graph;
    std::vector<Label> labels;

    Vertex id(Label label) const;
};

struct LabeledDigraph {
    Digraph digraph;
    std::vector<Label> labels;
};

/// {"vertices": [labels], "edges": [[u, v], ...]}. "vertices" may be omitted
/// (labels then come from the edges, sorted) or be a count n (labels 0..n-1).
LabeledGraph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g, const std::vector<Label>& labels = {});
/// Same layout with "arcs".
LabeledDigraph digraph_from_json(const Json& j);
Json digraph_to_json(const Digraph& d, const std::vector<Label>& labels = {});

/// Either an object label -> colour list or an array indexed by vertex id.
ListAssignment lists_from_json(const Json& j, const LabeledGraph& g);
/// Object label -> sorted colour list, in vertex order. Used for lists and
/// choices alike.
Json lists_to_json(const ListAssignment& lists, const std::vector<Label>& labels = {});
/// "v:size,v:size,..." or a JSON object label -> size.
std::vector<int> sizes_from_string(const std::string& text, const LabeledGraph& g);

Json witness_to_json(const Witness& w, const std::vector<Label>& labels = {});
Json orientation_to_json(const Orientation& o, const std::vector<Label>& labels = {});

SetFamily set_family_from_json(const Json& j);
Json set_family_to_json(const SetFamily& f);
Parts parts_from_json(const Json& j, const LabeledGraph& g);
Json parts_to_json(const Parts& parts, const std::vector<Label>& labels = {});

/// Sorted list of [[c1, c2], [d1, d2]] pairs.
Json pair_relation_to_json(const PairRelation& rel);

/// Graphviz, one line per vertex and edge in id order. Vertices of part i get
/// the attribute group=i.
std::string graph_to_dot(const Graph& g, const std::vector<Label>& labels = {}, const Parts& parts = {});

/// Throws InvalidInput for unreadable files or malformed JSON.
Json read_json_file(const std::string& path);

} // namespace abchoice
