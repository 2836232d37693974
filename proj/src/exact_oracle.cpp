#include "abchoice/exact_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "abchoice/error.hpp"
#include "abchoice/graph_core.hpp"

namespace abchoice {

namespace {

using Mask = std::uint64_t;

[[noreturn]] void throw_budget(std::uint64_t used, std::uint64_t limit)
{
    Error e(ErrorKind::BudgetExceeded,
            "search passed " + std::to_string(limit) + " nodes (" + std::to_string(used) + " spent)");
    e.count = used;
    throw e;
}

// Counts search nodes locally and folds them into a shared total.
class NodeMeter {
public:
    NodeMeter(std::atomic<std::uint64_t>& shared, std::uint64_t limit) : shared_(shared), limit_(limit) {}

    void tick()
    {
        if (++local_ >= 4096)
            flush();
    }

    void flush()
    {
        const std::uint64_t total = shared_.fetch_add(local_) + local_;
        local_ = 0;
        if (total > limit_)
            throw_budget(total, limit_);
    }

private:
    std::atomic<std::uint64_t>& shared_;
    std::uint64_t limit_;
    std::uint64_t local_ = 0;
};

template <class F>
bool for_each_subset_of_size(Mask pool, int k, F&& f)
{
    if (k == 0)
        return f(Mask{0});
    int bits[64];
    int m = 0;
    for (Mask p = pool; p; p &= p - 1)
        bits[m++] = std::countr_zero(p);
    if (k > m)
        return true;
    int idx[64];
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        Mask s = 0;
        for (int i = 0; i < k; ++i)
            s |= Mask{1} << bits[idx[i]];
        if (!f(s))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Backtracking over vertices in decreasing-degree order, b colours at a time.
class ChoiceSearch {
public:
    ChoiceSearch(const Graph& g, int b) : g_(g), b_(b), order_(g.num_vertices()), rank_(g.num_vertices())
    {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
        for (int i = 0; i < g.num_vertices(); ++i)
            rank_[order_[i]] = i;
    }

    bool solve(const std::vector<Mask>& lists, NodeMeter& meter, std::vector<Mask>* out = nullptr)
    {
        for (Mask l : lists)
            if (std::popcount(l) < b_)
                return false;
        avail_ = lists;
        chosen_.assign(lists.size(), 0);
        meter_ = &meter;
        const bool ok = rec(0);
        if (ok && out)
            *out = chosen_;
        return ok;
    }

private:
    bool rec(int i)
    {
        if (i == g_.num_vertices())
            return true;
        const Vertex v = order_[i];
        return !for_each_subset_of_size(avail_[v], b_, [&](Mask s) {
            meter_->tick();
            std::vector<std::pair<Vertex, Mask>> undo;
            bool feasible = true;
            for (Vertex w : g_.neighbors(v)) {
                if (rank_[w] <= i || !(avail_[w] & s))
                    continue;
                undo.emplace_back(w, avail_[w]);
                avail_[w] &= ~s;
                if (std::popcount(avail_[w]) < b_) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                chosen_[v] = s;
                if (rec(i + 1))
                    return false; // stop: found
            }
            for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                avail_[it->first] = it->second;
            return true;
        });
    }

    const Graph& g_;
    int b_;
    std::vector<Vertex> order_;
    std::vector<int> rank_;
    std::vector<Mask> avail_;
    std::vector<Mask> chosen_;
    NodeMeter* meter_ = nullptr;
};

ListAssignment masks_to_lists(const std::vector<Mask>& masks)
{
    ListAssignment out(masks.size());
    for (std::size_t v = 0; v < masks.size(); ++v)
        for (Mask m = masks[v]; m; m &= m - 1)
            out[v].push_back(std::countr_zero(m));
    return out;
}

using Visit = std::function<bool(const std::vector<Mask>&)>;

// Colour classes are vertex subsets; only connected classes with no two
// disjoint adjacent classes are generated. Non-singleton classes are picked
// as a multiset, singletons fill the remaining capacity.
class ReducedEnumerator {
public:
    ReducedEnumerator(const Graph& g, const std::vector<int>& sizes) : g_(g), n_(g.num_vertices()), sizes_(sizes)
    {
        if (n_ > 24)
            fail(ErrorKind::InvalidInput, "reduced enumeration supports at most 24 vertices");
        adj_.resize(n_);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v))
                adj_[v] |= Mask{1} << w;
        for (Mask m = 1; m < (Mask{1} << n_); ++m)
            if (std::popcount(m) >= 2 && connected(m))
                cols_.push_back(m);
        boundary_.resize(cols_.size());
        for (std::size_t i = 0; i < cols_.size(); ++i)
            boundary_[i] = boundary(cols_[i]);
    }

    int num_tasks() const { return static_cast<int>(cols_.size()) + 1; }

    bool run_task(int t, NodeMeter& meter, const Visit& visit)
    {
        cap_ = sizes_;
        chosen_.clear();
        meter_ = &meter;
        visit_ = &visit;
        if (t == 0)
            return leaf();
        const int c = t - 1;
        if (!fits(c))
            return true;
        take(c);
        return rec(c);
    }

private:
    bool connected(Mask m) const
    {
        Mask seen = m & (~m + 1);
        Mask frontier = seen;
        while (frontier) {
            const int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const Mask next = adj_[x] & m & ~seen;
            seen |= next;
            frontier |= next;
        }
        return seen == m;
    }

    Mask boundary(Mask m) const
    {
        Mask out = 0;
        for (Mask p = m; p; p &= p - 1)
            out |= adj_[std::countr_zero(p)];
        return out & ~m;
    }

    bool fits(int c) const
    {
        for (Mask p = cols_[c]; p; p &= p - 1)
            if (cap_[std::countr_zero(p)] == 0)
                return false;
        for (int d : chosen_)
            if (!(cols_[c] & cols_[d]) && (boundary_[c] & cols_[d]))
                return false;
        return true;
    }

    void take(int c)
    {
        chosen_.push_back(c);
        for (Mask p = cols_[c]; p; p &= p - 1)
            --cap_[std::countr_zero(p)];
    }

    void give_back()
    {
        const int c = chosen_.back();
        chosen_.pop_back();
        for (Mask p = cols_[c]; p; p &= p - 1)
            ++cap_[std::countr_zero(p)];
    }

    bool rec(int start)
    {
        if (!leaf())
            return false;
        for (int c = start; c < static_cast<int>(cols_.size()); ++c) {
            if (!fits(c))
                continue;
            take(c);
            const bool go_on = rec(c);
            give_back();
            if (!go_on)
                return false;
        }
        return true;
    }

    bool leaf()
    {
        meter_->tick();
        Mask padded = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (cap_[v] > 0)
                padded |= Mask{1} << v;
        for (Mask p = padded; p; p &= p - 1) {
            const int v = std::countr_zero(p);
            if (adj_[v] & padded)
                return true;
            for (int d : chosen_)
                if (!(cols_[d] >> v & 1) && (adj_[v] & cols_[d]))
                    return true;
        }
        std::vector<Mask> lists(n_, 0);
        int colour = 0;
        for (int d : chosen_) {
            for (Mask p = cols_[d]; p; p &= p - 1)
                lists[std::countr_zero(p)] |= Mask{1} << colour;
            ++colour;
        }
        for (Vertex v = 0; v < n_; ++v)
            for (int i = 0; i < cap_[v]; ++i)
                lists[v] |= Mask{1} << colour++;
        return (*visit_)(lists);
    }

    const Graph& g_;
    int n_;
    std::vector<int> sizes_;
    std::vector<Mask> adj_;
    std::vector<Mask> cols_;
    std::vector<Mask> boundary_;
    std::vector<int> cap_;
    std::vector<int> chosen_;
    NodeMeter* meter_ = nullptr;
    const Visit* visit_ = nullptr;
};

// Lists vertex by vertex; a vertex may reuse earlier colours or open new ones
// in first-use order. The second vertex's choice splits the work.
class CanonicalEnumerator {
public:
    CanonicalEnumerator(int n, const std::vector<int>& sizes, int palette = 64)
        : n_(n), sizes_(sizes), palette_(palette)
    {
        if (n_ <= 1)
            return;
        const int used = sizes_[0];
        for (int fresh = 0; fresh <= sizes_[1] && used + fresh <= palette_; ++fresh)
            for_each_subset_of_size(low_bits(used), sizes_[1] - fresh, [&](Mask old) {
                tasks_.push_back(old | (low_bits(used + fresh) & ~low_bits(used)));
                return true;
            });
    }

    int num_tasks() const { return n_ <= 1 ? 1 : static_cast<int>(tasks_.size()); }

    bool run_task(int t, NodeMeter& meter, const Visit& visit)
    {
        meter_ = &meter;
        visit_ = &visit;
        lists_.assign(n_, 0);
        if (n_ == 0)
            return visit(lists_);
        lists_[0] = low_bits(sizes_[0]);
        if (n_ == 1)
            return rec(1, sizes_[0]);
        lists_[1] = tasks_[t];
        return rec(2, 64 - std::countl_zero(lists_[0] | lists_[1]));
    }

private:
    static Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

    bool rec(int v, int used)
    {
        meter_->tick();
        if (v == n_)
            return (*visit_)(lists_);
        for (int fresh = 0; fresh <= sizes_[v] && used + fresh <= palette_; ++fresh) {
            const Mask extra = low_bits(used + fresh) & ~low_bits(used);
            const bool go_on = for_each_subset_of_size(low_bits(used), sizes_[v] - fresh, [&](Mask old) {
                lists_[v] = old | extra;
                return rec(v + 1, used + fresh);
            });
            if (!go_on)
                return false;
        }
        return true;
    }

    int n_;
    std::vector<int> sizes_;
    int palette_;
    std::vector<Mask> tasks_;
    std::vector<Mask> lists_;
    NodeMeter* meter_ = nullptr;
    const Visit* visit_ = nullptr;
};

// No symmetry reduction at all; the first vertex's list splits the work.
class ExhaustiveEnumerator {
public:
    ExhaustiveEnumerator(int n, const std::vector<int>& sizes) : n_(n), sizes_(sizes)
    {
        universe_ = std::accumulate(sizes.begin(), sizes.end(), 0);
        pool_ = universe_ >= 64 ? ~Mask{0} : (Mask{1} << universe_) - 1;
        if (n_ > 0)
            for_each_subset_of_size(pool_, sizes_[0], [&](Mask s) {
                tasks_.push_back(s);
                return true;
            });
    }

    int num_tasks() const { return n_ == 0 ? 1 : static_cast<int>(tasks_.size()); }

    bool run_task(int t, NodeMeter& meter, const Visit& visit)
    {
        meter_ = &meter;
        visit_ = &visit;
        lists_.assign(n_, 0);
        if (n_ == 0)
            return visit(lists_);
        lists_[0] = tasks_[t];
        return rec(1);
    }

private:
    bool rec(int v)
    {
        meter_->tick();
        if (v == n_)
            return (*visit_)(lists_);
        return for_each_subset_of_size(pool_, sizes_[v], [&](Mask s) {
            lists_[v] = s;
            return rec(v + 1);
        });
    }

    int n_;
    std::vector<int> sizes_;
    int universe_ = 0;
    Mask pool_ = 0;
    std::vector<Mask> tasks_;
    std::vector<Mask> lists_;
    NodeMeter* meter_ = nullptr;
    const Visit* visit_ = nullptr;
};

template <class Enumerator>
OracleResult run_enumeration(const Graph& g, Enumerator& proto, int b, const OracleOptions& opt)
{
    const int tasks = proto.num_tasks();
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> assignments{0};
    std::atomic<int> best{tasks};
    std::vector<std::vector<Mask>> bad(tasks);

    auto work = [&](int t, Enumerator& en) {
        if (t > best.load())
            return;
        NodeMeter meter(nodes, opt.budget);
        ChoiceSearch search(g, b);
        bool found = false;
        en.run_task(t, meter, [&](const std::vector<Mask>& lists) {
            ++assignments;
            if (!search.solve(lists, meter)) {
                bad[t] = lists;
                found = true;
                return false;
            }
            return best.load() > t;
        });
        meter.flush();
        if (found) {
            int cur = best.load();
            while (t < cur && !best.compare_exchange_weak(cur, t)) {
            }
        }
    };

    if (opt.execution == Execution::Serial) {
        for (int t = 0; t < tasks && best.load() == tasks; ++t)
            work(t, proto);
    } else {
        std::exception_ptr error;
        std::atomic<bool> abort{false};
#pragma omp parallel
        {
            Enumerator local = proto;
#pragma omp for schedule(dynamic, 1)
            for (int t = 0; t < tasks; ++t) {
                if (abort.load())
                    continue;
                try {
                    work(t, local);
                } catch (...) {
#pragma omp critical(abchoice_oracle_error)
                    if (!error)
                        error = std::current_exception();
                    abort = true;
                }
            }
        }
        if (error)
            std::rethrow_exception(error);
    }

    OracleResult r;
    r.nodes = nodes.load();
    r.assignments = assignments.load();
    if (best.load() < tasks) {
        r.choosable = false;
        r.bad_assignment = masks_to_lists(bad[best.load()]);
    }
    return r;
}

OracleResult decide(const Graph& g, const std::vector<int>& sizes, int b, const OracleOptions& opt)
{
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > 64)
        fail(ErrorKind::InvalidInput, "colour universe larger than 64");
    switch (opt.enumeration) {
    case Enumeration::Reduced: {
        ReducedEnumerator en(g, sizes);
        return run_enumeration(g, en, b, opt);
    }
    case Enumeration::Canonical: {
        CanonicalEnumerator en(g.num_vertices(), sizes);
        return run_enumeration(g, en, b, opt);
    }
    case Enumeration::Exhaustive: {
        ExhaustiveEnumerator en(g.num_vertices(), sizes);
        return run_enumeration(g, en, b, opt);
    }
    }
    return {};
}

template <class Enumerator>
bool enumerate_all(Enumerator& en, std::uint64_t budget, const std::function<bool(const ListAssignment&)>& visit)
{
    std::atomic<std::uint64_t> nodes{0};
    NodeMeter meter(nodes, budget);
    const Visit wrapped = [&](const std::vector<Mask>& masks) { return visit(masks_to_lists(masks)); };
    for (int t = 0; t < en.num_tasks(); ++t)
        if (!en.run_task(t, meter, wrapped))
            return false;
    meter.flush();
    return true;
}

} // namespace

bool for_each_assignment(const Graph& g, const std::vector<int>& sizes, Enumeration enumeration,
                         const std::function<bool(const ListAssignment&)>& visit, std::uint64_t budget, int palette)
{
    if (static_cast<int>(sizes.size()) != g.num_vertices())
        fail(ErrorKind::InvalidInput, "one list size per vertex");
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > 64)
        fail(ErrorKind::InvalidInput, "colour universe larger than 64");
    switch (enumeration) {
    case Enumeration::Reduced: {
        ReducedEnumerator en(g, sizes);
        return enumerate_all(en, budget, visit);
    }
    case Enumeration::Canonical: {
        CanonicalEnumerator en(g.num_vertices(), sizes, palette > 0 ? palette : 64);
        return enumerate_all(en, budget, visit);
    }
    case Enumeration::Exhaustive: {
        ExhaustiveEnumerator en(g.num_vertices(), sizes);
        return enumerate_all(en, budget, visit);
    }
    }
    return true;
}

Witness OracleResult::witness() const
{
    Witness w;
    w.choosable = choosable;
    if (bad_assignment)
        w.assignment = *bad_assignment;
    return w;
}

std::optional<Choice> find_choice(const Graph& g, const ListAssignment& lists, int b, std::uint64_t budget,
                                  std::uint64_t* nodes)
{
    const int n = g.num_vertices();
    if (static_cast<int>(lists.size()) != n)
        fail(ErrorKind::InvalidInput, "list assignment size does not match the graph");
    if (b < 1)
        fail(ErrorKind::InvalidInput, "b must be positive");
    std::map<Color, int> index;
    for (const auto& l : lists)
        for (Color c : l)
            index.emplace(c, 0);
    if (index.size() > 64)
        fail(ErrorKind::InvalidInput, "find_choice supports at most 64 distinct colours");
    std::vector<Color> back;
    for (auto& [c, i] : index) {
        i = static_cast<int>(back.size());
        back.push_back(c);
    }
    std::vector<Mask> masks(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Color c : lists[v])
            masks[v] |= Mask{1} << index[c];

    std::atomic<std::uint64_t> spent{0};
    NodeMeter meter(spent, budget);
    ChoiceSearch search(g, b);
    std::vector<Mask> out;
    const bool ok = search.solve(masks, meter, &out);
    meter.flush();
    if (nodes)
        *nodes += spent.load();
    if (!ok)
        return std::nullopt;
    Choice choice(n);
    for (Vertex v = 0; v < n; ++v)
        for (Mask m = out[v]; m; m &= m - 1)
            choice[v].push_back(back[std::countr_zero(m)]);
    return choice;
}

OracleResult is_ab_choosable(const Graph& g, int a, int b, const OracleOptions& opt)
{
    if (b < 1 || a < b)
        fail(ErrorKind::InvalidInput, "need 1 <= b <= a");
    return decide(g, std::vector<int>(g.num_vertices(), a), b, opt);
}

OracleResult is_f_choosable(const Graph& g, const std::vector<int>& f, const OracleOptions& opt)
{
    if (static_cast<int>(f.size()) != g.num_vertices())
        fail(ErrorKind::InvalidInput, "f must give one size per vertex");
    for (int x : f)
        if (x < 1)
            fail(ErrorKind::InvalidInput, "f values must be positive");
    return decide(g, f, 1, opt);
}

int ch_k(const Graph& g, int k, const OracleOptions& opt)
{
    if (k < 1)
        fail(ErrorKind::InvalidInput, "k must be positive");
    if (g.empty())
        return 0;
    for (int n = k * clique_number(g);; ++n)
        if (is_ab_choosable(g, n, k, opt).choosable)
            return n;
}

namespace {

// Partitions of the vertex set into blocks of size <= k in which no two
// blocks could be merged; every family of disjoint parts refines one.
template <class F>
bool for_each_maximal_partition(int n, int k, F&& f)
{
    std::vector<std::vector<Vertex>> blocks;
    std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
        if (v == n) {
            for (std::size_t i = 0; i < blocks.size(); ++i)
                for (std::size_t j = i + 1; j < blocks.size(); ++j)
                    if (static_cast<int>(blocks[i].size() + blocks[j].size()) <= k)
                        return true;
            return f(blocks);
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (static_cast<int>(blocks[i].size()) >= k)
                continue;
            blocks[i].push_back(v);
            const bool go_on = rec(v + 1);
            blocks[i].pop_back();
            if (!go_on)
                return false;
        }
        blocks.push_back({v});
        const bool go_on = rec(v + 1);
        blocks.pop_back();
        return go_on;
    };
    return rec(0);
}

} // namespace

bool is_strongly_k_choosable(const Graph& g, int k, const OracleOptions& opt)
{
    if (k < 1)
        fail(ErrorKind::InvalidInput, "k must be positive");
    return for_each_maximal_partition(g.num_vertices(), k, [&](const std::vector<std::vector<Vertex>>& parts) {
        Graph aug = g;
        for (const auto& p : parts)
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j)
                    aug.add_edge(p[i], p[j]);
        return is_ab_choosable(aug, k, 1, opt).choosable;
    });
}

std::optional<std::vector<Color>> find_coloring(const Graph& g, int colors, std::uint64_t budget)
{
    const int n = g.num_vertices();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    std::vector<Color> col(n, -1);
    std::uint64_t nodes = 0;
    std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == n)
            return true;
        const Vertex v = order[i];
        // colours above `used` are interchangeable; try only the first of them
        for (Color c = 0; c < std::min(colors, used + 1); ++c) {
            if (++nodes > budget)
                throw_budget(nodes, budget);
            bool clash = false;
            for (Vertex w : g.neighbors(v))
                clash = clash || col[w] == c;
            if (clash)
                continue;
            col[v] = c;
            if (rec(i + 1, std::max(used, c + 1)))
                return true;
            col[v] = -1;
        }
        return false;
    };
    if (!rec(0, 0))
        return std::nullopt;
    return col;
}

int chromatic_number(const Graph& g, std::uint64_t budget)
{
    if (g.empty())
        return 0;
    for (int c = 1;; ++c)
        if (find_coloring(g, c, budget))
            return c;
}

} // namespace abchoice
