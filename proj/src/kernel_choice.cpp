#include "abchoice/kernel_choice.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "abchoice/error.hpp"
#include "abchoice/graph_core.hpp"

namespace abchoice {

namespace {

[[noreturn]] void throw_odd_cycle(std::vector<Vertex> witness)
{
    Error e(ErrorKind::OddCycle, "digraph contains an odd directed cycle of length " + std::to_string(witness.size()));
    e.witness = std::move(witness);
    throw e;
}

[[noreturn]] void throw_list_too_small(Vertex v, std::size_t have, long need)
{
    Error e(ErrorKind::ListTooSmall,
            "vertex " + std::to_string(v) + " has " + std::to_string(have) + " colours, needs " + std::to_string(need));
    e.vertex = v;
    throw e;
}

class KernelBuilder {
public:
    explicit KernelBuilder(const Digraph& d)
        : d_(d), in_k_(d.num_vertices(), false), in_scope_(d.num_vertices(), false), index_(d.num_vertices(), -1),
          low_(d.num_vertices(), 0), on_stack_(d.num_vertices(), false)
    {
    }

    // Kernel of d restricted to `scope`; marks members in in_k_.
    void solve(const std::vector<Vertex>& scope)
    {
        if (depth_ == levels_.size())
            levels_.emplace_back();
        Level& lv = levels_[depth_++];
        for (Vertex v : scope)
            in_scope_[v] = true;
        lv.flat.clear();
        lv.starts.clear();
        components(scope, lv.flat, lv.starts);
        // Tarjan emits sinks of the condensation first
        for (std::size_t c = 0; c + 1 < lv.starts.size(); ++c) {
            lv.comp.assign(lv.flat.begin() + lv.starts[c], lv.flat.begin() + lv.starts[c + 1]);
            lv.open.clear();
            for (Vertex v : lv.comp)
                if (!dominated(v))
                    lv.open.push_back(v);
            if (lv.open.size() == lv.comp.size())
                take_parity_class(lv.comp);
            else if (!lv.open.empty())
                solve_nested(lv.open);
        }
        for (Vertex v : scope)
            in_scope_[v] = false;
        --depth_;
    }

    void reset() { std::fill(in_k_.begin(), in_k_.end(), false); }
    bool contains(Vertex v) const { return in_k_[v]; }

    std::vector<Vertex> members() const
    {
        std::vector<Vertex> k;
        for (Vertex v = 0; v < d_.num_vertices(); ++v)
            if (in_k_[v])
                k.push_back(v);
        return k;
    }

private:
    void components(const std::vector<Vertex>& scope, std::vector<Vertex>& flat, std::vector<std::size_t>& starts)
    {
        int counter = 0;
        auto& stack = stack_;
        auto& frames = frames_;
        starts.push_back(0);
        for (Vertex root : scope) {
            if (index_[root] >= 0)
                continue;
            frames.emplace_back(root, 0);
            index_[root] = low_[root] = counter++;
            stack.push_back(root);
            on_stack_[root] = true;
            while (!frames.empty()) {
                auto& [v, next] = frames.back();
                const auto& out = d_.out_neighbors(v);
                if (next < out.size()) {
                    const Vertex w = out[next++];
                    if (!in_scope_[w])
                        continue;
                    if (index_[w] < 0) {
                        index_[w] = low_[w] = counter++;
                        stack.push_back(w);
                        on_stack_[w] = true;
                        frames.emplace_back(w, 0);
                    } else if (on_stack_[w]) {
                        low_[v] = std::min(low_[v], index_[w]);
                    }
                    continue;
                }
                const Vertex done = v;
                frames.pop_back();
                if (!frames.empty())
                    low_[frames.back().first] = std::min(low_[frames.back().first], low_[done]);
                if (low_[done] == index_[done]) {
                    Vertex x;
                    do {
                        x = stack.back();
                        stack.pop_back();
                        on_stack_[x] = false;
                        flat.push_back(x);
                    } while (x != done);
                    starts.push_back(flat.size());
                }
            }
        }
        for (Vertex v : scope)
            index_[v] = -1;
    }

    bool dominated(Vertex v) const
    {
        for (Vertex w : d_.out_neighbors(v))
            if (in_scope_[w] && in_k_[w])
                return true;
        return false;
    }

    void solve_nested(const std::vector<Vertex>& open)
    {
        // the nested scope is a subset of the current one
        std::vector<Vertex> saved;
        saved.reserve(d_.num_vertices());
        for (Vertex v = 0; v < d_.num_vertices(); ++v)
            if (in_scope_[v])
                saved.push_back(v);
        for (Vertex v : saved)
            in_scope_[v] = false;
        solve(open);
        for (Vertex v : saved)
            in_scope_[v] = true;
    }

    // A strongly connected piece with every cycle even splits into two
    // distance-parity classes with every arc crossing; either class is a
    // kernel of the piece.
    void take_parity_class(const std::vector<Vertex>& comp)
    {
        if (comp.size() == 1) {
            in_k_[comp[0]] = true;
            return;
        }
        for (Vertex v : comp)
            index_[v] = -2;
        auto& queue = queue_;
        queue.assign(1, comp[0]);
        index_[comp[0]] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const Vertex x = queue[h];
            for (Vertex y : d_.out_neighbors(x)) {
                if (index_[y] == -1 || !in_scope_[y])
                    continue;
                if (index_[y] == -2) {
                    index_[y] = 1 - index_[x];
                    queue.push_back(y);
                } else if (index_[y] == index_[x]) {
                    throw std::logic_error("odd closed walk inside a component");
                }
            }
        }
        for (Vertex v : comp) {
            if (index_[v] == 0)
                in_k_[v] = true;
            index_[v] = -1;
        }
    }

    const Digraph& d_;
    std::vector<bool> in_k_;
    std::vector<bool> in_scope_;
    // Tarjan state, reused; -1 means unvisited
    std::vector<int> index_;
    std::vector<int> low_;
    std::vector<bool> on_stack_;
    std::vector<Vertex> stack_;
    std::vector<std::pair<Vertex, std::size_t>> frames_;
    std::vector<Vertex> queue_;
    // one set of buffers per nesting depth
    struct Level {
        std::vector<Vertex> flat, comp, open;
        std::vector<std::size_t> starts;
    };
    std::deque<Level> levels_;
    std::size_t depth_ = 0;
};

void check_lists(const ListAssignment& lists, int n)
{
    if (static_cast<int>(lists.size()) != n)
        fail(ErrorKind::InvalidInput, "list assignment size does not match the graph");
}

ColorSet take_first(const ColorSet& from, int k)
{
    return ColorSet(from.begin(), from.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(from.size())));
}

} // namespace

std::vector<Vertex> kernel(const Digraph& d)
{
    if (auto cyc = odd_directed_cycle(d))
        throw_odd_cycle(std::move(*cyc));
    KernelBuilder builder(d);
    std::vector<Vertex> all(d.num_vertices());
    for (Vertex v = 0; v < d.num_vertices(); ++v)
        all[v] = v;
    builder.solve(all);
    return builder.members();
}

bool is_kernel(const Digraph& d, const std::vector<Vertex>& k)
{
    std::vector<bool> in(d.num_vertices(), false);
    for (Vertex v : k)
        in[v] = true;
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
        bool hits = false;
        for (Vertex w : d.out_neighbors(v))
            hits = hits || in[w];
        if (in[v] && hits)
            return false; // arc inside K
        if (!in[v] && !hits)
            return false;
    }
    return true;
}

Choice kernel_multichoice(const Digraph& d, int k, const ListAssignment& lists, MultichoiceStats* stats,
                          const ColorRule& rule)
{
    const int n = d.num_vertices();
    check_lists(lists, n);
    if (k < 1)
        fail(ErrorKind::InvalidInput, "k must be positive");
    for (Vertex v = 0; v < n; ++v) {
        const long need = static_cast<long>(k) * (d.out_degree(v) + 1);
        if (static_cast<long>(lists[v].size()) < need)
            throw_list_too_small(v, lists[v].size(), need);
    }
    if (auto cyc = odd_directed_cycle(d))
        throw_odd_cycle(std::move(*cyc));

    // every colour once, and each list as positions into it
    ColorSet all;
    for (const auto& l : lists)
        all = set_union(all, l);
    std::vector<std::vector<int>> pos(n);
    for (Vertex v = 0; v < n; ++v)
        for (Color c : lists[v])
            pos[v].push_back(static_cast<int>(std::lower_bound(all.begin(), all.end(), c) - all.begin()));
    std::vector<bool> used(all.size(), false);
    std::vector<bool> wanted(all.size(), false);
    std::vector<bool> waiting(n, true);
    int open = n;
    Choice choice(n);
    int iterations = 0;
    KernelBuilder builder(d);
    ColorSet candidates;
    std::vector<Vertex> carriers;

    while (open > 0) {
        std::fill(wanted.begin(), wanted.end(), false);
        for (Vertex v = 0; v < n; ++v)
            if (waiting[v])
                for (int i : pos[v])
                    wanted[i] = true;
        candidates.clear();
        for (std::size_t i = 0; i < all.size(); ++i)
            if (wanted[i] && !used[i])
                candidates.push_back(all[i]);
        if (candidates.empty())
            throw std::logic_error("kernel_multichoice ran out of colours");
        const Color c = rule ? rule(candidates) : candidates.front();
        if (!std::binary_search(candidates.begin(), candidates.end(), c))
            throw std::logic_error("colour rule returned a non-candidate");
        const auto ci = std::lower_bound(all.begin(), all.end(), c) - all.begin();
        used[ci] = true;

        carriers.clear();
        for (Vertex v = 0; v < n; ++v)
            if (waiting[v] && std::find(pos[v].begin(), pos[v].end(), ci) != pos[v].end())
                carriers.push_back(v);
        // subdigraphs inherit the absence of odd cycles
        builder.reset();
        builder.solve(carriers);
        for (Vertex v : carriers) {
            if (!builder.contains(v))
                continue;
            choice[v].push_back(c);
            if (static_cast<int>(choice[v].size()) == k) {
                waiting[v] = false;
                --open;
            }
        }
        if (++iterations > k * n)
            throw std::logic_error("kernel_multichoice exceeded k|V| iterations");
    }
    for (auto& c : choice)
        std::sort(c.begin(), c.end());
    if (stats)
        stats->iterations = iterations;
    return choice;
}

Choice choose_via_orientation(const Orientation& orient, int k, const ListAssignment& lists)
{
    const int n = orient.base().num_vertices();
    check_lists(lists, n);
    const long need = static_cast<long>(k) * (orient.max_out_degree() + 1);
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<long>(lists[v].size()) < need)
            throw_list_too_small(v, lists[v].size(), need);
    return kernel_multichoice(orient.digraph(), k, lists);
}

Choice choose_chordal(const Graph& g, int k, const ListAssignment& lists)
{
    check_lists(lists, g.num_vertices());
    const auto peo = perfect_elimination_ordering(g);
    if (!peo)
        fail(ErrorKind::NotChordal, "graph has an induced cycle of length >= 4");
    std::vector<int> pos(g.num_vertices());
    for (std::size_t i = 0; i < peo->size(); ++i)
        pos[(*peo)[i]] = static_cast<int>(i);
    int omega = g.empty() ? 0 : 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        int later = 0;
        for (Vertex w : g.neighbors(v))
            later += pos[w] > pos[v] ? 1 : 0;
        omega = std::max(omega, later + 1);
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (static_cast<long>(lists[v].size()) < static_cast<long>(k) * omega)
            throw_list_too_small(v, lists[v].size(), static_cast<long>(k) * omega);
    auto orient = orient_degeneracy(g, omega - 1);
    if (!orient)
        throw std::logic_error("chordal graph without a degeneracy orientation");
    return kernel_multichoice(orient->digraph(), k, lists);
}

namespace {

// Greedy k-subset of `list` avoiding the colours already on chosen neighbours.
ColorSet greedy_pick(const Graph& g, Vertex v, const ColorSet& list, const Choice& choice,
                     const std::vector<bool>& chosen, int k)
{
    ColorSet blocked;
    for (Vertex w : g.neighbors(v))
        if (chosen[w])
            blocked = set_union(blocked, choice[w]);
    ColorSet free = set_difference(list, blocked);
    if (static_cast<int>(free.size()) < k)
        throw std::logic_error("greedy extension ran out of colours at vertex " + std::to_string(v));
    return take_first(free, k);
}

// Theta chooser for an even cycle with one chord: the chord joins the two
// degree-3 vertices u and v; the two long u-v paths are y (any) and z.
void choose_on_theta(const Graph& h, const ListAssignment& lists, int k, Choice& choice, std::vector<bool>& chosen)
{
    std::vector<Vertex> hubs;
    for (Vertex w = 0; w < h.num_vertices(); ++w)
        if (h.degree(w) == 3)
            hubs.push_back(w);
    if (hubs.size() != 2 || !h.adjacent(hubs[0], hubs[1]))
        throw std::logic_error("expected an even cycle with exactly one chord");
    const Vertex u = hubs[0];
    const Vertex v = hubs[1];
    std::vector<std::vector<Vertex>> paths; // interiors, starting next to u
    for (Vertex first : h.neighbors(u)) {
        if (first == v)
            continue;
        std::vector<Vertex> interior;
        Vertex prev = u;
        Vertex cur = first;
        while (cur != v) {
            interior.push_back(cur);
            const auto& nb = h.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        paths.push_back(std::move(interior));
    }
    const auto& ypath = paths[0];
    const auto& zpath = paths[1];

    ColorSet cu = set_difference(lists[u], lists[zpath.front()]);
    if (static_cast<int>(cu.size()) < k)
        throw std::logic_error("theta chooser: S(u) - S(z1) too small");
    choice[u] = take_first(cu, k);
    chosen[u] = true;
    std::vector<Vertex> order(ypath.begin(), ypath.end());
    order.push_back(v);
    order.insert(order.end(), zpath.rbegin(), zpath.rend());
    for (Vertex w : order) {
        choice[w] = greedy_pick(h, w, lists[w], choice, chosen, k);
        chosen[w] = true;
    }
}

} // namespace

Choice choose_brooks(const Graph& g, int k, const ListAssignment& lists)
{
    const int n = g.num_vertices();
    check_lists(lists, n);
    if (n == 0 || !is_connected(g))
        fail(ErrorKind::DisconnectedInput, "choose_brooks needs a connected non-empty graph");
    if (is_complete(g))
        fail(ErrorKind::NotApplicable, "graph is complete");
    if (is_cycle(g) && n % 2 == 1)
        fail(ErrorKind::NotApplicable, "graph is an odd cycle");
    const int delta = g.max_degree();
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<long>(lists[v].size()) < static_cast<long>(k) * delta)
            throw_list_too_small(v, lists[v].size(), static_cast<long>(k) * delta);

    if (g.min_degree() < delta) {
        auto orient = orient_degeneracy(g, delta - 1);
        if (!orient)
            throw std::logic_error("non-regular connected graph is not (Delta-1)-degenerate");
        return kernel_multichoice(orient->digraph(), k, lists);
    }

    // regular: find a block that is neither complete nor an odd cycle
    std::optional<InducedSubgraph> core_piece;
    for (const auto& block : blocks(g)) {
        if (block.size() < 3)
            continue;
        InducedSubgraph b = induced_subgraph(g, block);
        if (is_complete(b.graph) || (is_cycle(b.graph) && b.graph.num_vertices() % 2 == 1))
            continue;
        InducedSubgraph h = find_even_cycle_or_theta(b.graph);
        for (Vertex& x : h.to_parent)
            x = b.to_parent[x];
        core_piece = std::move(h);
        break;
    }
    if (!core_piece)
        fail(ErrorKind::NotApplicable, "no block that is neither complete nor an odd cycle");

    const auto& h = *core_piece;
    std::vector<bool> in_h(n, false);
    for (Vertex x : h.to_parent)
        in_h[x] = true;
    const auto dist = distances_from(g, h.to_parent);
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (!in_h[v])
            outside.push_back(v);
    std::stable_sort(outside.begin(), outside.end(), [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });

    Choice choice(n);
    std::vector<bool> chosen(n, false);
    for (Vertex v : outside) {
        choice[v] = greedy_pick(g, v, lists[v], choice, chosen, k);
        chosen[v] = true;
    }

    // lists left on H after the outside choices, cut to exactly k*deg_H
    const int hn = h.graph.num_vertices();
    ListAssignment local(hn);
    for (Vertex i = 0; i < hn; ++i) {
        const Vertex v = h.to_parent[i];
        ColorSet blocked;
        for (Vertex w : g.neighbors(v))
            if (chosen[w])
                blocked = set_union(blocked, choice[w]);
        local[i] = take_first(set_difference(lists[v], blocked), k * h.graph.degree(i));
    }

    Choice local_choice(hn);
    if (h.graph.num_edges() == static_cast<std::size_t>(hn)) {
        // chordless even cycle, listed in cycle order: orient it cyclically
        local_choice = kernel_multichoice(make_directed_cycle(hn), k, local);
    } else {
        std::vector<bool> local_chosen(hn, false);
        choose_on_theta(h.graph, local, k, local_choice, local_chosen);
    }
    for (Vertex i = 0; i < hn; ++i)
        choice[h.to_parent[i]] = std::move(local_choice[i]);
    return choice;
}

} // namespace abchoice
