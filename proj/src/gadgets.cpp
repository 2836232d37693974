#include "abchoice/gadgets.hpp"

#include <algorithm>
#include <string>

#include "abchoice/error.hpp"
#include "abchoice/graph_core.hpp"

namespace abchoice {

namespace {

std::vector<int> checked_sides(const Graph& g, const std::vector<int>& side)
{
    if (side.empty()) {
        auto s = bipartition(g);
        if (!s)
            fail(ErrorKind::NotBipartite, "input graph is not bipartite");
        return *s;
    }
    if (static_cast<int>(side.size()) != g.num_vertices())
        fail(ErrorKind::InvalidInput, "bipartition size does not match the graph");
    for (int s : side)
        if (s != 0 && s != 1)
            fail(ErrorKind::InvalidInput, "bipartition sides must be 0 or 1");
    for (auto [u, v] : g.edges())
        if (side[u] == side[v]) {
            Error e(ErrorKind::NotBipartite, "edge inside one side of the bipartition");
            e.vertex = u;
            throw e;
        }
    return side;
}

// copies of g appended to out, copy c at offset c*n
void add_copies(Graph& out, const Graph& g, int copies)
{
    const int n = g.num_vertices();
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : g.edges())
            out.add_edge(c * n + u, c * n + v);
}

std::vector<Vertex> take(Vertex& next, int count)
{
    std::vector<Vertex> r;
    for (int i = 0; i < count; ++i)
        r.push_back(next++);
    return r;
}

} // namespace

Graph gen_theta(int a, int b, int c)
{
    if (a < 1 || b < 1 || c < 1)
        fail(ErrorKind::InvalidInput, "path lengths must be positive");
    if ((a == 1) + (b == 1) + (c == 1) > 1)
        fail(ErrorKind::NotSimple, "two paths of length 1 would be parallel edges");
    Graph g(a + b + c - 1);
    Vertex next = 2;
    for (int len : {a, b, c}) {
        Vertex prev = 0;
        for (int i = 1; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

Graph gen_apex_tower(const Graph& g)
{
    const int n = g.num_vertices();
    Graph out(n * n + 1);
    add_copies(out, g, n);
    for (Vertex v = 0; v < n * n; ++v)
        out.add_edge(n * n, v);
    return out;
}

Graph gen_bg23_gadget(const Graph& g, const std::vector<int>& f, const std::vector<int>& side)
{
    const int n = g.num_vertices();
    if (static_cast<int>(f.size()) != n)
        fail(ErrorKind::InvalidInput, "f must give a value for every vertex");
    for (int x : f)
        if (x != 2 && x != 3)
            fail(ErrorKind::InvalidInput, "f values must be 2 or 3");
    const auto s = checked_sides(g, side);
    Graph out(9 * n + 2);
    add_copies(out, g, 9);
    const Vertex u = 9 * n, v = 9 * n + 1;
    for (int c = 0; c < 9; ++c)
        for (Vertex w = 0; w < n; ++w)
            if (f[w] == 2)
                out.add_edge(s[w] == 0 ? u : v, c * n + w);
    return out;
}

Graph gen_bgk_gadget(const Graph& g, int k, const std::vector<int>& side)
{
    if (k < 3)
        fail(ErrorKind::DegenerateParameters, "k must be at least 3");
    const int n = g.num_vertices();
    const auto s = checked_sides(g, side);
    const int copies = (k + 1) * (k + 1) * (k + 1) * (k + 1);
    Graph out(copies * n + 2);
    add_copies(out, g, copies);
    const Vertex u = copies * n, v = copies * n + 1;
    for (int c = 0; c < copies; ++c)
        for (Vertex w = 0; w < n; ++w)
            out.add_edge(s[w] == 0 ? u : v, c * n + w);
    return out;
}

StrongLowerGadget gen_strong_lower(int d)
{
    if (d < 2)
        fail(ErrorKind::DegenerateParameters, "d must be at least 2");
    const int r = d / 2;
    int a, b1, b2, c1, c2, dd, e;
    if (d % 2 == 0) {
        a = dd = 2 * r;
        b1 = b2 = r;
        c1 = c2 = r - 1;
        e = 2 * r - 1;
    } else {
        a = dd = 2 * r + 1;
        b1 = r + 1;
        c1 = r - 1;
        b2 = c2 = r;
        e = 2 * r;
    }
    StrongLowerGadget out;
    Vertex next = 0;
    for (int size : {a, b1, b2, c1, c2, dd, dd, e})
        out.classes.push_back(take(next, size));
    const auto& A = out.classes[0];
    const auto &B1 = out.classes[1], &B2 = out.classes[2];
    const auto &C1 = out.classes[3], &C2 = out.classes[4];
    const auto &D1 = out.classes[5], &D2 = out.classes[6];
    const auto& E = out.classes[7];
    out.graph = Graph(next);
    for (Vertex x : A) {
        for (Vertex y : B1)
            out.graph.add_edge(x, y);
        for (Vertex y : B2)
            out.graph.add_edge(x, y);
    }
    for (Vertex x : D1)
        for (Vertex y : D2)
            out.graph.add_edge(x, y);
    auto join = [](std::initializer_list<const std::vector<Vertex>*> ls) {
        std::vector<Vertex> p;
        for (auto* l : ls)
            p.insert(p.end(), l->begin(), l->end());
        return p;
    };
    out.parts = {join({&B1, &C1, &D1}), join({&B2, &C2, &D2}), join({&A, &E})};
    return out;
}

Graph gen_hamilton_clique(int k, int n)
{
    if (k < 1 || n < 2)
        fail(ErrorKind::DegenerateParameters, "need k >= 1 and n >= 2");
    const int total = 3 * k * n;
    Graph g(total);
    for (Vertex v = 0; v < total; ++v)
        g.add_edge(v, (v + 1) % total);
    for (int j = 0; j < n; ++j)
        for (int x = 0; x < 3 * k; ++x)
            for (int y = x + 1; y < 3 * k; ++y)
                g.add_edge(j + x * n, j + y * n);
    return g;
}

Graph gen_k24_prime()
{
    Graph g(7);
    for (Vertex x : {0, 1})
        for (Vertex y = 2; y <= 5; ++y)
            g.add_edge(x, y);
    for (Vertex v = 0; v < 6; ++v)
        g.add_edge(6, v);
    return g;
}

const std::vector<GadgetFamily>& gadget_families()
{
    static const std::vector<GadgetFamily> families = {
        {"theta", "--a --b --c", "two hubs joined by three paths"},
        {"apex-tower", "--graph", "|V| copies of a graph plus an apex"},
        {"bg23", "--graph --f", "nine copies plus two hubs on the f=2 vertices"},
        {"bgk", "--graph --k", "(k+1)^4 copies plus two hubs on each side"},
        {"strong-lower", "--d", "base graph and three parts with a non-colourable augmentation"},
        {"hamilton-clique", "--k --n", "Hamilton cycle plus n disjoint 3k-cliques"},
        {"complete-multipartite", "--sizes", "complete multipartite graph"},
        {"k24-prime", "", "K_{2,4} plus an apex"},
    };
    return families;
}

} // namespace abchoice
