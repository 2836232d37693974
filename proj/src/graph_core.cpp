#include "abchoice/graph_core.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "abchoice/error.hpp"

namespace abchoice {

CorePeeling peel_core(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<bool> alive(n, true);
    std::set<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1)
            leaves.insert(v);
    }
    CorePeeling out;
    while (!leaves.empty()) {
        Vertex v = *leaves.begin();
        leaves.erase(leaves.begin());
        Vertex anchor = -1;
        for (Vertex w : g.neighbors(v))
            if (alive[w])
                anchor = w;
        alive[v] = false;
        out.removed.emplace_back(v, anchor);
        if (--deg[anchor] == 1)
            leaves.insert(anchor);
        else if (deg[anchor] == 0)
            leaves.erase(anchor);
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            kept.push_back(v);
    out.core = induced_subgraph(g, kept);
    return out;
}

InducedSubgraph core(const Graph& g)
{
    return peel_core(g).core;
}

std::string to_string(const CoreClass& c)
{
    switch (c.tag) {
    case CoreClass::Tag::K1: return "K1";
    case CoreClass::Tag::EvenCycle: return "C" + std::to_string(2 * c.m + 2);
    case CoreClass::Tag::Theta22Even: return "Theta(2,2," + std::to_string(2 * c.m) + ")";
    case CoreClass::Tag::Other: return "Other";
    }
    return "Other";
}

CoreClass classify_core(const Graph& g)
{
    if (g.empty())
        return {};
    if (!is_connected(g))
        fail(ErrorKind::DisconnectedInput, "classify_core needs a connected graph");
    const Graph c = core(g).graph;
    const int n = c.num_vertices();
    if (n == 1)
        return {CoreClass::Tag::K1, 0};

    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < n; ++v) {
        if (c.degree(v) == 3)
            hubs.push_back(v);
        else if (c.degree(v) != 2)
            return {};
    }
    if (hubs.empty()) {
        // connected and 2-regular: a cycle
        if (n % 2 == 0)
            return {CoreClass::Tag::EvenCycle, (n - 2) / 2};
        return {};
    }
    if (hubs.size() != 2)
        return {};

    const Vertex u = hubs[0];
    const Vertex v = hubs[1];
    std::vector<int> lengths;
    for (Vertex first : c.neighbors(u)) {
        Vertex prev = u;
        Vertex cur = first;
        int len = 1;
        while (c.degree(cur) == 2) {
            const auto& nb = c.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++len;
        }
        if (cur != v)
            return {};
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0)
        return {CoreClass::Tag::Theta22Even, lengths[2] / 2};
    return {};
}

LineGraph line_graph(const Graph& g)
{
    LineGraph lg{Graph(static_cast<int>(g.num_edges())), g.edges()};
    const int m = static_cast<int>(lg.edges.size());
    std::vector<std::vector<int>> incident(g.num_vertices());
    for (int i = 0; i < m; ++i) {
        incident[lg.edges[i].first].push_back(i);
        incident[lg.edges[i].second].push_back(i);
    }
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                lg.graph.add_edge(inc[a], inc[b]);
    return lg;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<bool> alive(n, true);
    std::vector<Vertex> order;
    order.reserve(n);
    auto simplicial = [&](Vertex v) {
        std::vector<Vertex> nb;
        for (Vertex w : g.neighbors(v))
            if (alive[w])
                nb.push_back(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    return false;
        return true;
    };
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n && pick < 0; ++v)
            if (alive[v] && simplicial(v))
                pick = v;
        if (pick < 0)
            return std::nullopt;
        alive[pick] = false;
        order.push_back(pick);
    }
    return order;
}

bool is_triangulated(const Graph& g)
{
    return perfect_elimination_ordering(g).has_value();
}

SccResult scc(const Digraph& d)
{
    const int n = d.num_vertices();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> found; // reverse topological order
    int counter = 0;

    // iterative Tarjan: frames hold (vertex, next out-neighbour position)
    std::vector<std::pair<Vertex, std::size_t>> frames;
    for (Vertex root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& out = d.out_neighbors(v);
            if (pos < out.size()) {
                Vertex w = out[pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> members;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                found.push_back(std::move(members));
            }
            Vertex done = v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().first] = std::min(low[frames.back().first], low[done]);
        }
    }

    SccResult r;
    r.members.assign(found.rbegin(), found.rend());
    r.component.assign(n, -1);
    for (std::size_t c = 0; c < r.members.size(); ++c)
        for (Vertex v : r.members[c])
            r.component[v] = static_cast<int>(c);
    r.condensation = Digraph(static_cast<int>(r.members.size()));
    for (auto [u, v] : d.arcs())
        if (r.component[u] != r.component[v])
            r.condensation.add_arc(r.component[u], r.component[v]);
    return r;
}

namespace {

// Splits a closed walk (w0 -> w1 -> ... -> w_{L-1} -> w0) into simple cycles
// and returns the first odd one. The walk must have odd length.
std::vector<Vertex> odd_cycle_in_walk(const std::vector<Vertex>& walk, int n)
{
    std::vector<int> pos(n, -1);
    std::vector<Vertex> stack;
    auto visit = [&](Vertex x) -> std::optional<std::vector<Vertex>> {
        if (pos[x] >= 0) {
            const std::size_t p = static_cast<std::size_t>(pos[x]);
            std::vector<Vertex> cycle(stack.begin() + static_cast<std::ptrdiff_t>(p), stack.end());
            if (cycle.size() % 2 == 1)
                return cycle;
            while (stack.size() > p + 1) {
                pos[stack.back()] = -1;
                stack.pop_back();
            }
            return std::nullopt;
        }
        pos[x] = static_cast<int>(stack.size());
        stack.push_back(x);
        return std::nullopt;
    };
    for (Vertex x : walk)
        if (auto c = visit(x))
            return *c;
    if (auto c = visit(walk.front()))
        return *c;
    return {};
}

} // namespace

std::optional<std::vector<Vertex>> odd_directed_cycle(const Digraph& d)
{
    const int n = d.num_vertices();
    const SccResult comps = scc(d);
    for (const auto& members : comps.members) {
        if (members.size() < 2)
            continue;
        const int cid = comps.component[members[0]];
        auto inside = [&](Vertex x) { return comps.component[x] == cid; };
        const Vertex root = members[0];

        // forward BFS tree (parent pointers) and backward BFS tree
        std::vector<int> dist(n, -1), parent(n, -1), rdist(n, -1), rnext(n, -1);
        std::queue<Vertex> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : d.out_neighbors(x))
                if (inside(y) && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                }
        }
        rdist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : d.in_neighbors(x))
                if (inside(y) && rdist[y] < 0) {
                    rdist[y] = rdist[x] + 1;
                    rnext[y] = x;
                    q.push(y);
                }
        }
        auto tree_path = [&](Vertex to) {
            std::vector<Vertex> p;
            for (Vertex x = to; x >= 0; x = parent[x])
                p.push_back(x);
            std::reverse(p.begin(), p.end());
            return p;
        };
        auto back_path = [&](Vertex from) {
            std::vector<Vertex> p;
            for (Vertex x = from; x >= 0; x = rnext[x])
                p.push_back(x);
            return p; // ends at root
        };
        for (Vertex u : members)
            for (Vertex v : d.out_neighbors(u)) {
                if (!inside(v) || (dist[u] + 1 - dist[v]) % 2 == 0)
                    continue;
                // root ~> u -> v ~> root and root ~> v ~> root differ in parity
                std::vector<Vertex> walk = tree_path(u);
                auto back = back_path(v);
                if ((dist[u] + 1 + rdist[v]) % 2 == 0) {
                    walk = tree_path(v);
                    back.erase(back.begin());
                }
                walk.insert(walk.end(), back.begin(), back.end());
                walk.pop_back(); // drop the repeated root
                return odd_cycle_in_walk(walk, n);
            }
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

std::vector<std::vector<Vertex>> blocks(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Vertex>> out;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = timer++;
        for (Vertex w : g.neighbors(v)) {
            if (w == parent)
                continue;
            if (disc[w] < 0) {
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<Vertex> block;
                    Edge e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                    } while (e != Edge{v, w});
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    out.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        if (disc[v] >= 0)
            continue;
        if (g.degree(v) == 0) {
            disc[v] = timer++;
            out.push_back({v});
            continue;
        }
        dfs(v, -1);
    }
    return out;
}

bool is_biconnected(const Graph& g)
{
    if (g.num_vertices() < 3)
        return false;
    auto b = blocks(g);
    return b.size() == 1 && static_cast<int>(b[0].size()) == g.num_vertices();
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    q.push(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g)
{
    return bipartition(g).has_value();
}

bool is_complete(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.num_vertices());
    return g.num_edges() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_cycle(const Graph& g)
{
    if (g.num_vertices() < 3 || !is_connected(g))
        return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

int clique_number(const Graph& g)
{
    // Bron-Kerbosch with pivoting
    int best = 0;
    std::function<void(std::vector<Vertex>&, std::vector<Vertex>, std::vector<Vertex>)> expand =
        [&](std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
            if (p.empty()) {
                if (x.empty())
                    best = std::max(best, static_cast<int>(r.size()));
                return;
            }
            if (r.size() + p.size() <= static_cast<std::size_t>(best))
                return;
            Vertex pivot = p.front();
            for (Vertex u : p)
                if (g.degree(u) > g.degree(pivot))
                    pivot = u;
            std::vector<Vertex> candidates;
            for (Vertex v : p)
                if (!g.adjacent(pivot, v))
                    candidates.push_back(v);
            for (Vertex v : candidates) {
                std::vector<Vertex> np, nx;
                for (Vertex w : p)
                    if (g.adjacent(v, w))
                        np.push_back(w);
                for (Vertex w : x)
                    if (g.adjacent(v, w))
                        nx.push_back(w);
                r.push_back(v);
                expand(r, std::move(np), std::move(nx));
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<Vertex> r, p(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        p[v] = v;
    expand(r, std::move(p), {});
    return best;
}

std::vector<int> distances_from(const Graph& g, const std::vector<Vertex>& sources)
{
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist;
}

namespace {

// Depth-first search over simple cycles whose smallest vertex is `start`,
// keeping at most `max_chords` chords. Returns the first even cycle found.
std::optional<std::vector<Vertex>> even_cycle_search(const Graph& g, int max_chords)
{
    const int n = g.num_vertices();
    std::vector<Vertex> path;
    std::vector<bool> on_path(n, false);
    std::optional<std::vector<Vertex>> found;

    std::function<void(Vertex, int)> extend = [&](Vertex start, int chords) {
        if (found)
            return;
        const Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (w <= start || on_path[w])
                continue;
            int extra = 0;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (g.adjacent(w, path[i]))
                    ++extra;
            const bool closes = path.size() >= 2 && g.adjacent(w, start);
            // the edge w-start is the closing edge, not a chord
            const int closed_chords = chords + extra - (closes ? 1 : 0);
            if (closes && closed_chords <= max_chords && (path.size() + 1) % 2 == 0) {
                path.push_back(w);
                found = path;
                return;
            }
            if (chords + extra > max_chords)
                continue;
            path.push_back(w);
            on_path[w] = true;
            extend(start, chords + extra);
            on_path[w] = false;
            path.pop_back();
            if (found)
                return;
        }
    };
    for (Vertex s = 0; s < n && !found; ++s) {
        path.assign(1, s);
        on_path[s] = true;
        extend(s, 0);
        on_path[s] = false;
    }
    return found;
}

} // namespace

InducedSubgraph find_even_cycle_or_theta(const Graph& g)
{
    if (!is_biconnected(g))
        fail(ErrorKind::NotApplicable, "graph is not 2-connected");
    if (is_complete(g))
        fail(ErrorKind::NotApplicable, "graph is complete");
    if (is_cycle(g) && g.num_vertices() % 2 == 1)
        fail(ErrorKind::NotApplicable, "graph is an odd cycle");
    for (int chords = 0; chords <= 1; ++chords)
        if (auto cyc = even_cycle_search(g, chords))
            return induced_subgraph(g, *cyc);
    fail(ErrorKind::NotApplicable, "no induced even cycle with at most one chord");
}

} // namespace abchoice
