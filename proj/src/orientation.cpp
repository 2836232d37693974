#include "abchoice/orientation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

#include "abchoice/error.hpp"

namespace abchoice {

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d <= 0)
        fail(ErrorKind::InvalidInput, "rational with non-positive denominator");
    const std::int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const
{
    return num * o.den <=> o.num * den;
}

std::string Rational::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::int64_t Rational::ceil() const
{
    return (num + den - 1) / den;
}

Orientation::Orientation(Graph base, std::vector<Edge> arcs) : base_(std::move(base)), arcs_(std::move(arcs))
{
    const auto edges = base_.edges();
    if (edges.size() != arcs_.size())
        fail(ErrorKind::InvalidInput, "orientation must direct every edge exactly once");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = arcs_[i];
        if (std::min(a, b) != edges[i].first || std::max(a, b) != edges[i].second)
            fail(ErrorKind::InvalidInput, "orientation arc does not match its edge");
    }
}

Digraph Orientation::digraph() const
{
    return Digraph(base_.num_vertices(), arcs_);
}

std::vector<int> Orientation::out_degrees() const
{
    std::vector<int> out(base_.num_vertices(), 0);
    for (auto [from, to] : arcs_)
        ++out[from];
    return out;
}

int Orientation::max_out_degree() const
{
    auto d = out_degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

namespace {

// Dinic max-flow on a small dense-ish network.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : head_(n, -1) {}

    int add_arc(int from, int to, std::int64_t cap)
    {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
        return static_cast<int>(arcs_.size()) - 2;
    }

    std::int64_t max_flow(int s, int t)
    {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                total += f;
        }
        return total;
    }

    std::int64_t flow_on(int arc) const { return arcs_[arc ^ 1].cap; }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };

    bool bfs(int s, int t)
    {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int a = head_[x]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[x] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int x, int t, std::int64_t limit)
    {
        if (x == t)
            return limit;
        for (int& a = iter_[x]; a >= 0; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[x] + 1)
                continue;
            if (std::int64_t f = dfs(arc.to, t, std::min(limit, arc.cap))) {
                arc.cap -= f;
                arcs_[a ^ 1].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> iter_;
    std::vector<int> level_;
    std::vector<Arc> arcs_;
};

struct Assignment {
    bool feasible = false;
    /// For each edge, the endpoint that absorbs it (only meaningful for q=1).
    std::vector<Vertex> owner;
};

// Every edge pushes q units onto its endpoints; every vertex absorbs at most p.
// Feasible iff q|E(H)| <= p|V(H)| for all subgraphs H, i.e. M(G) <= p/q.
Assignment edge_assignment(const Graph& g, std::int64_t p, std::int64_t q)
{
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.num_vertices();
    const int source = m + n;
    const int sink = source + 1;
    FlowNetwork net(m + n + 2);
    std::vector<int> to_first(m), to_second(m);
    for (int i = 0; i < m; ++i) {
        net.add_arc(source, i, q);
        to_first[i] = net.add_arc(i, m + edges[i].first, q);
        to_second[i] = net.add_arc(i, m + edges[i].second, q);
    }
    for (Vertex v = 0; v < n; ++v)
        net.add_arc(m + v, sink, p);
    Assignment out;
    out.feasible = net.max_flow(source, sink) == q * m;
    if (out.feasible) {
        out.owner.resize(m);
        for (int i = 0; i < m; ++i)
            out.owner[i] = net.flow_on(to_first[i]) >= net.flow_on(to_second[i]) ? edges[i].first : edges[i].second;
    }
    return out;
}

} // namespace

Rational density_M(const Graph& g)
{
    if (g.empty())
        fail(ErrorKind::EmptyGraph, "density of the empty graph is undefined");
    const std::int64_t n = g.num_vertices();
    const std::int64_t m = static_cast<std::int64_t>(g.num_edges());
    std::vector<Rational> candidates;
    for (std::int64_t v = 1; v <= n; ++v)
        for (std::int64_t e = 0; e <= std::min(m, v * (v - 1) / 2); ++e)
            candidates.emplace_back(e, v);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // smallest feasible candidate; the top candidate is always feasible
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (edge_assignment(g, candidates[mid].num, candidates[mid].den).feasible)
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

std::optional<Orientation> orient_bounded_outdegree(const Graph& g, int d)
{
    if (d < 0)
        return std::nullopt;
    Assignment a = edge_assignment(g, d, 1);
    if (!a.feasible)
        return std::nullopt;
    const auto edges = g.edges();
    std::vector<Edge> arcs(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Vertex tail = a.owner[i];
        const Vertex head = tail == edges[i].first ? edges[i].second : edges[i].first;
        arcs[i] = {tail, head};
    }
    return Orientation(g, std::move(arcs));
}

std::vector<Vertex> degeneracy_removal_order(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<bool> removed(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    while (!queue.empty()) {
        auto [dv, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        order.push_back(v);
        for (Vertex w : g.neighbors(v))
            if (!removed[w]) {
                queue.erase({deg[w], w});
                queue.emplace(--deg[w], w);
            }
    }
    return order;
}

std::optional<Orientation> orient_degeneracy(const Graph& g, int d)
{
    const auto order = degeneracy_removal_order(g);
    std::vector<int> rank(g.num_vertices());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = static_cast<int>(i);
    std::vector<int> out(g.num_vertices(), 0);
    const auto edges = g.edges();
    std::vector<Edge> arcs;
    arcs.reserve(edges.size());
    for (auto [u, v] : edges) {
        const Vertex tail = rank[u] < rank[v] ? u : v;
        arcs.emplace_back(tail, tail == u ? v : u);
        if (++out[tail] > d)
            return std::nullopt;
    }
    return Orientation(g, std::move(arcs));
}

} // namespace abchoice
