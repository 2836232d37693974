#include "abchoice/graph.hpp"

#include <algorithm>
#include <string>

#include "abchoice/error.hpp"

namespace abchoice {

namespace {

bool insert_sorted(std::vector<Vertex>& list, Vertex v)
{
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v)
        return false;
    list.insert(it, v);
    return true;
}

} // namespace

Graph::Graph(int n)
{
    if (n < 0)
        fail(ErrorKind::InvalidInput, "negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

int Graph::add_vertex()
{
    adj_.emplace_back();
    return num_vertices() - 1;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= num_vertices())
        fail(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " out of range");
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        fail(ErrorKind::InvalidInput, "self-loop at vertex " + std::to_string(u));
    if (!insert_sorted(adj_[u], v))
        return false;
    insert_sorted(adj_[v], u);
    ++num_edges_;
    return true;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& a : adj_)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

int Graph::min_degree() const
{
    if (adj_.empty())
        return 0;
    int best = num_vertices();
    for (const auto& a : adj_)
        best = std::min(best, static_cast<int>(a.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const
{
    std::uint64_t m = 0;
    for (Vertex w : adj_[v])
        m |= std::uint64_t{1} << w;
    return m;
}

Digraph::Digraph(int n)
{
    if (n < 0)
        fail(ErrorKind::InvalidInput, "negative vertex count");
    out_.resize(n);
    in_.resize(n);
}

Digraph::Digraph(int n, std::span<const Edge> arcs) : Digraph(n)
{
    for (auto [u, v] : arcs)
        add_arc(u, v);
}

void Digraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= num_vertices())
        fail(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " out of range");
}

bool Digraph::add_arc(Vertex from, Vertex to)
{
    check_vertex(from);
    check_vertex(to);
    if (from == to)
        fail(ErrorKind::InvalidInput, "self-loop at vertex " + std::to_string(from));
    if (!insert_sorted(out_[from], to))
        return false;
    insert_sorted(in_[to], from);
    ++num_arcs_;
    return true;
}

int Digraph::max_out_degree() const
{
    int best = 0;
    for (const auto& a : out_)
        best = std::max(best, static_cast<int>(a.size()));
    return best;
}

bool Digraph::has_arc(Vertex from, Vertex to) const
{
    const auto& a = out_[from];
    return std::binary_search(a.begin(), a.end(), to);
}

std::vector<Edge> Digraph::arcs() const
{
    std::vector<Edge> out;
    out.reserve(num_arcs_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : out_[u])
            out.emplace_back(u, v);
    return out;
}

Graph Digraph::underlying() const
{
    Graph g(num_vertices());
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : out_[u])
            g.add_edge(u, v);
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(g.num_vertices(), -1);
    InducedSubgraph sub{Graph(static_cast<int>(vertices.size())), {vertices.begin(), vertices.end()}};
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (index[w] > static_cast<int>(i))
                sub.graph.add_edge(static_cast<int>(i), index[w]);
    return sub;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices)
{
    std::vector<int> index(d.num_vertices(), -1);
    InducedSubdigraph sub{Digraph(static_cast<int>(vertices.size())), {vertices.begin(), vertices.end()}};
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : d.out_neighbors(vertices[i]))
            if (index[w] >= 0)
                sub.digraph.add_arc(static_cast<int>(i), index[w]);
    return sub;
}

Graph make_path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n)
{
    if (n < 3)
        fail(ErrorKind::InvalidInput, "a cycle needs at least 3 vertices");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_complete(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph make_complete_bipartite(int a, int b)
{
    const int sizes[] = {a, b};
    return make_complete_multipartite(sizes);
}

Graph make_complete_multipartite(std::span<const int> class_sizes)
{
    int n = 0;
    std::vector<int> cls;
    for (std::size_t c = 0; c < class_sizes.size(); ++c) {
        if (class_sizes[c] < 0)
            fail(ErrorKind::InvalidInput, "negative class size");
        n += class_sizes[c];
        cls.insert(cls.end(), class_sizes[c], static_cast<int>(c));
    }
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cls[i] != cls[j])
                g.add_edge(i, j);
    return g;
}

Graph make_petersen()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.num_vertices() + b.num_vertices());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(u + a.num_vertices(), v + a.num_vertices());
    return g;
}

Graph complement(const Graph& g)
{
    Graph c(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i)
        for (int j = i + 1; j < g.num_vertices(); ++j)
            if (!g.adjacent(i, j))
                c.add_edge(i, j);
    return c;
}

Digraph make_directed_cycle(int n)
{
    Digraph d(n);
    for (int i = 0; i < n; ++i)
        d.add_arc(i, (i + 1) % n);
    return d;
}

} // namespace abchoice
