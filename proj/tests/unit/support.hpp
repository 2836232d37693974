#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "abchoice/error.hpp"
#include "abchoice/graph.hpp"
#include "abchoice/lists.hpp"
#include "doctest.h"

namespace test {

using namespace abchoice;

inline Graph graph_of(int n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> e(edges);
    return Graph(n, e);
}

inline Digraph digraph_of(int n, std::initializer_list<Edge> arcs)
{
    std::vector<Edge> a(arcs);
    return Digraph(n, a);
}

inline ListAssignment lists_of(std::initializer_list<std::vector<Color>> sets)
{
    ListAssignment out;
    for (const auto& s : sets)
        out.push_back(make_color_set(s));
    return out;
}

template <class F>
ErrorKind error_kind(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an abchoice::Error");
    return ErrorKind::InvalidInput;
}

// All k-subsets of `s`.
inline std::vector<ColorSet> subsets_of(const ColorSet& s, int k)
{
    std::vector<ColorSet> out;
    ColorSet cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            cur.push_back(s[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline bool proper_coloring(const Graph& g, const std::vector<Color>& c)
{
    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

// Plain backtracking: does some proper colouring pick one colour per list?
inline bool has_list_coloring(const Graph& g, const ListAssignment& lists)
{
    const int n = g.num_vertices();
    std::vector<Color> col(n, -1);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n)
            return true;
        for (Color c : lists[v]) {
            bool ok = true;
            for (Vertex u : g.neighbors(v))
                if (u < v && col[u] == c)
                    ok = false;
            if (!ok)
                continue;
            col[v] = c;
            if (rec(v + 1))
                return true;
        }
        col[v] = -1;
        return false;
    };
    return rec(0);
}

} // namespace test
