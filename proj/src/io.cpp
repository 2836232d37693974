#include "abchoice/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "abchoice/error.hpp"

namespace abchoice {

namespace {

Label label_of(const std::vector<Label>& labels, Vertex v)
{
    return labels.empty() ? v : labels[v];
}

std::vector<Label> collect_labels(const Json& j, const char* key)
{
    std::vector<Label> labels;
    if (!j.contains("vertices")) {
        for (const auto& e : j.at(key))
            for (const auto& x : e)
                labels.push_back(x.get<Label>());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        return labels;
    }
    const auto& vs = j.at("vertices");
    if (vs.is_number_integer()) {
        const Label n = vs.get<Label>();
        if (n < 0)
            fail(ErrorKind::InvalidInput, "negative vertex count");
        for (Label i = 0; i < n; ++i)
            labels.push_back(i);
        return labels;
    }
    for (const auto& x : vs)
        labels.push_back(x.get<Label>());
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorKind::InvalidInput, "duplicate vertex label");
    return labels;
}

Vertex find_label(const std::vector<Label>& labels, Label l)
{
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end())
        fail(ErrorKind::InvalidInput, "unknown vertex " + std::to_string(l));
    return static_cast<Vertex>(it - labels.begin());
}

std::vector<Edge> read_pairs(const Json& j, const char* key, const std::vector<Label>& labels)
{
    std::vector<Edge> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 2)
            fail(ErrorKind::InvalidInput, std::string(key) + " entries must be pairs");
        out.emplace_back(find_label(labels, e[0].get<Label>()), find_label(labels, e[1].get<Label>()));
    }
    return out;
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

Vertex LabeledGraph::id(Label label) const
{
    return find_label(labels, label);
}

LabeledGraph graph_from_json(const Json& j)
{
    return guarded([&] {
        LabeledGraph out;
        out.labels = collect_labels(j, "edges");
        const auto edges = read_pairs(j, "edges", out.labels);
        out.graph = Graph(static_cast<int>(out.labels.size()));
        for (auto [u, v] : edges) {
            if (u == v)
                fail(ErrorKind::InvalidInput, "self-loop at " + std::to_string(out.labels[u]));
            out.graph.add_edge(u, v);
        }
        return out;
    });
}

Json graph_to_json(const Graph& g, const std::vector<Label>& labels)
{
    Json j;
    j["vertices"] = Json::array();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        j["vertices"].push_back(label_of(labels, v));
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back({label_of(labels, u), label_of(labels, v)});
    return j;
}

LabeledDigraph digraph_from_json(const Json& j)
{
    return guarded([&] {
        LabeledDigraph out;
        out.labels = collect_labels(j, "arcs");
        const auto arcs = read_pairs(j, "arcs", out.labels);
        out.digraph = Digraph(static_cast<int>(out.labels.size()));
        for (auto [u, v] : arcs) {
            if (u == v)
                fail(ErrorKind::InvalidInput, "self-loop at " + std::to_string(out.labels[u]));
            out.digraph.add_arc(u, v);
        }
        return out;
    });
}

Json digraph_to_json(const Digraph& d, const std::vector<Label>& labels)
{
    Json j;
    j["vertices"] = Json::array();
    for (Vertex v = 0; v < d.num_vertices(); ++v)
        j["vertices"].push_back(label_of(labels, v));
    j["arcs"] = Json::array();
    for (auto [u, v] : d.arcs())
        j["arcs"].push_back({label_of(labels, u), label_of(labels, v)});
    return j;
}

ListAssignment lists_from_json(const Json& j, const LabeledGraph& g)
{
    return guarded([&] {
        const int n = g.graph.num_vertices();
        ListAssignment out(n);
        std::vector<bool> seen(n, false);
        auto put = [&](Vertex v, const Json& colours) {
            if (seen[v])
                fail(ErrorKind::InvalidInput, "two lists for one vertex");
            seen[v] = true;
            ColorSet s = make_color_set(colours.get<std::vector<Color>>());
            if (s.size() != colours.size())
                fail(ErrorKind::InvalidInput, "repeated colour in a list");
            out[v] = std::move(s);
        };
        if (j.is_array()) {
            if (static_cast<int>(j.size()) != n)
                fail(ErrorKind::InvalidInput, "list array must have one entry per vertex");
            for (int v = 0; v < n; ++v)
                put(v, j[v]);
        } else {
            for (const auto& [key, value] : j.items()) {
                Label l;
                try {
                    l = std::stoll(key);
                } catch (const std::exception&) {
                    fail(ErrorKind::InvalidInput, "list key is not a vertex: " + key);
                }
                put(g.id(l), value);
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (!seen[v])
                fail(ErrorKind::InvalidInput, "no list for vertex " + std::to_string(g.labels[v]));
        return out;
    });
}

Json lists_to_json(const ListAssignment& lists, const std::vector<Label>& labels)
{
    Json j = Json::object();
    for (std::size_t v = 0; v < lists.size(); ++v)
        j[std::to_string(label_of(labels, static_cast<Vertex>(v)))] = make_color_set(lists[v]);
    return j;
}

std::vector<int> sizes_from_string(const std::string& text, const LabeledGraph& g)
{
    const int n = g.graph.num_vertices();
    std::vector<int> f(n, -1);
    auto put = [&](Label l, long long size) {
        const Vertex v = g.id(l);
        if (size < 0)
            fail(ErrorKind::InvalidInput, "negative list size");
        f[v] = static_cast<int>(size);
    };
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') {
        guarded([&] {
            const Json j = Json::parse(text);
            for (const auto& [key, value] : j.items())
                put(std::stoll(key), value.get<long long>());
            return 0;
        });
    } else {
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                fail(ErrorKind::InvalidInput, "expected vertex:size, got '" + item + "'");
            try {
                put(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
            } catch (const std::logic_error&) {
                fail(ErrorKind::InvalidInput, "expected vertex:size, got '" + item + "'");
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (f[v] < 0)
            fail(ErrorKind::InvalidInput, "no size for vertex " + std::to_string(g.labels[v]));
    return f;
}

Json witness_to_json(const Witness& w, const std::vector<Label>& labels)
{
    Json j;
    j["assignment"] = lists_to_json(w.assignment, labels);
    j["verdict"] = w.choosable ? "choosable" : "not-choosable";
    if (w.choice)
        j["choice"] = lists_to_json(*w.choice, labels);
    return j;
}

Json orientation_to_json(const Orientation& o, const std::vector<Label>& labels)
{
    Json j = digraph_to_json(o.digraph(), labels);
    j["max_outdegree"] = o.max_out_degree();
    return j;
}

SetFamily set_family_from_json(const Json& j)
{
    return guarded([&] {
        SetFamily f;
        for (const auto& s : j) {
            ColorSet c = make_color_set(s.get<std::vector<Color>>());
            if (c.size() != s.size())
                fail(ErrorKind::InvalidInput, "repeated colour in a set");
            f.push_back(std::move(c));
        }
        return f;
    });
}

Json set_family_to_json(const SetFamily& f)
{
    Json j = Json::array();
    for (const auto& s : f)
        j.push_back(make_color_set(s));
    return j;
}

Parts parts_from_json(const Json& j, const LabeledGraph& g)
{
    return guarded([&] {
        Parts parts;
        for (const auto& p : j) {
            std::vector<Vertex> part;
            for (const auto& x : p)
                part.push_back(g.id(x.get<Label>()));
            parts.push_back(std::move(part));
        }
        return parts;
    });
}

Json parts_to_json(const Parts& parts, const std::vector<Label>& labels)
{
    Json j = Json::array();
    for (const auto& p : parts) {
        Json part = Json::array();
        for (Vertex v : p)
            part.push_back(label_of(labels, v));
        j.push_back(part);
    }
    return j;
}

Json pair_relation_to_json(const PairRelation& rel)
{
    auto pairs = rel.pairs();
    std::sort(pairs.begin(), pairs.end());
    Json j = Json::array();
    for (const auto& [c, d] : pairs)
        j.push_back({{c[0], c[1]}, {d[0], d[1]}});
    return j;
}

std::string graph_to_dot(const Graph& g, const std::vector<Label>& labels, const Parts& parts)
{
    std::map<Vertex, int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i])
            part_of[v] = static_cast<int>(i);
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  " << label_of(labels, v);
        if (auto it = part_of.find(v); it != part_of.end())
            out << " [group=" << it->second << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << label_of(labels, u) << " -- " << label_of(labels, v) << ";\n";
    out << "}\n";
    return out.str();
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::InvalidInput, "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

} // namespace abchoice
