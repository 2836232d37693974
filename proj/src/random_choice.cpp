#include "abchoice/random_choice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <string>

#include "abchoice/error.hpp"
#include "abchoice/exact_oracle.hpp"

namespace abchoice {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t attempt)
{
    // splitmix64 over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (attempt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t n)
{
    if (n == 0)
        fail(ErrorKind::InvalidInput, "uniform_below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % n;
}

bool bernoulli(Rng& rng, double p)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

namespace {

using Attempt = std::function<std::optional<Choice>(Rng&)>;

RandomResult las_vegas(const RandomBudget& budget, Execution exec, const Attempt& attempt)
{
    if (budget.max_attempts < 1)
        fail(ErrorKind::InvalidInput, "max_attempts must be positive");
    const int n = budget.max_attempts;
    std::vector<std::optional<Choice>> found(n);
    std::atomic<int> best{n};
    auto run = [&](int i) {
        if (i > best.load())
            return;
        Rng rng(sub_seed(budget.seed, static_cast<std::uint64_t>(i)));
        found[i] = attempt(rng);
        if (found[i]) {
            int cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    };
    if (exec == Execution::Serial) {
        for (int i = 0; i < n && best.load() == n; ++i)
            run(i);
    } else {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < n; ++i) {
            try {
                run(i);
            } catch (...) {
#pragma omp critical(abchoice_random_error)
                if (!error)
                    error = std::current_exception();
            }
        }
        if (error)
            std::rethrow_exception(error);
    }
    if (best.load() == n) {
        Error e(ErrorKind::Exhausted, "no success within " + std::to_string(n) + " attempts");
        e.count = static_cast<std::uint64_t>(n);
        throw e;
    }
    RandomResult r;
    r.choice = std::move(*found[best.load()]);
    r.attempts = best.load() + 1;
    r.seed = budget.seed;
    return r;
}

ColorSet all_colors(const ListAssignment& lists)
{
    ColorSet s;
    for (const auto& l : lists)
        s = set_union(s, l);
    return s;
}

// One class of the multipartite recursion: its nominal size (phantom
// vertices included) and the real vertices it holds.
struct ClassInfo {
    int size = 2;
    std::vector<Vertex> members;
};

double average_size(const std::vector<ClassInfo>& classes, std::size_t lo, std::size_t hi)
{
    double total = 0;
    for (std::size_t i = lo; i < hi; ++i)
        total += classes[i].size;
    return total / static_cast<double>(hi - lo);
}

// Colours available to each vertex are in `avail`; false if some vertex ends
// up with fewer than k.
bool split_recursive(const std::vector<ClassInfo>& classes, std::size_t lo, std::size_t hi, int k,
                     const ListAssignment& avail, Rng& rng, Choice& out)
{
    const std::size_t r = hi - lo;
    const double t = average_size(classes, lo, hi);
    ColorSet colours;
    for (std::size_t i = lo; i < hi; ++i)
        for (Vertex v : classes[i].members)
            colours = set_union(colours, avail[v]);

    if (static_cast<double>(r) <= t) {
        std::vector<std::size_t> f(colours.size());
        for (auto& x : f)
            x = lo + uniform_below(rng, r);
        for (std::size_t i = lo; i < hi; ++i)
            for (Vertex v : classes[i].members) {
                ColorSet mine;
                for (Color c : avail[v]) {
                    const auto pos = std::lower_bound(colours.begin(), colours.end(), c) - colours.begin();
                    if (f[pos] == i && static_cast<int>(mine.size()) < k)
                        mine.push_back(c);
                }
                if (static_cast<int>(mine.size()) < k)
                    return false;
                out[v] = std::move(mine);
            }
        return true;
    }

    const std::size_t mid = lo + r / 2;
    const double t1 = average_size(classes, lo, mid);
    const double t2 = average_size(classes, mid, hi);
    const double p1 = (k + std::log(t1)) / (2.0 * k + std::log(t1 * t2));
    ColorSet first, second;
    for (Color c : colours)
        (bernoulli(rng, p1) ? first : second).push_back(c);
    ListAssignment next = avail;
    for (std::size_t i = lo; i < hi; ++i)
        for (Vertex v : classes[i].members)
            next[v] = set_intersection(avail[v], i < mid ? first : second);
    return split_recursive(classes, lo, mid, k, next, rng, out) && split_recursive(classes, mid, hi, k, next, rng, out);
}

RandomResult choose_on_classes(std::vector<ClassInfo> classes, const Graph& g, int k, const ListAssignment& lists,
                               const RandomBudget& budget, Execution exec)
{
    std::size_t r = 1;
    while (r < classes.size())
        r *= 2;
    classes.resize(std::max<std::size_t>(r, 1));
    RandomResult res = las_vegas(budget, exec, [&](Rng& rng) -> std::optional<Choice> {
        Choice out(lists.size());
        if (!split_recursive(classes, 0, classes.size(), k, lists, rng, out))
            return std::nullopt;
        if (!verify_choice(g, lists, out, k))
            return std::nullopt;
        return out;
    });
    return res;
}

} // namespace

RandomResult choose_by_partition(const PartitionedGraph& pg, int k, const ListAssignment& lists,
                                 const RandomBudget& budget, Execution exec)
{
    const Graph& g = pg.graph;
    const int n = g.num_vertices();
    if (k < 1)
        fail(ErrorKind::InvalidInput, "k must be positive");
    if (static_cast<int>(lists.size()) != n)
        fail(ErrorKind::InvalidInput, "list assignment size does not match the graph");
    std::vector<int> cls(n, -1);
    for (std::size_t i = 0; i < pg.classes.size(); ++i)
        for (Vertex v : pg.classes[i]) {
            if (v < 0 || v >= n || cls[v] >= 0)
                fail(ErrorKind::InvalidInput, "classes must partition the vertex set");
            cls[v] = static_cast<int>(i);
        }
    for (Vertex v = 0; v < n; ++v)
        if (cls[v] < 0)
            fail(ErrorKind::InvalidInput, "classes must partition the vertex set");
    for (auto [u, v] : g.edges())
        if (cls[u] == cls[v])
            fail(ErrorKind::InvalidInput, "a class is not a stable set");
    const ColorSet colours = all_colors(lists);
    const std::uint64_t r = pg.classes.size();
    return las_vegas(budget, exec, [&](Rng& rng) -> std::optional<Choice> {
        std::vector<std::uint64_t> f(colours.size());
        for (auto& x : f)
            x = uniform_below(rng, r);
        Choice out(n);
        for (Vertex v = 0; v < n; ++v) {
            for (Color c : lists[v]) {
                const auto pos = std::lower_bound(colours.begin(), colours.end(), c) - colours.begin();
                if (f[pos] == static_cast<std::uint64_t>(cls[v]) && static_cast<int>(out[v].size()) < k)
                    out[v].push_back(c);
            }
            if (static_cast<int>(out[v].size()) < k)
                return std::nullopt;
        }
        if (!verify_choice(g, lists, out, k))
            return std::nullopt;
        return out;
    });
}

RandomResult choose_multipartite(const std::vector<int>& class_sizes, int k, const ListAssignment& lists,
                                 const RandomBudget& budget, Execution exec)
{
    if (k < 1)
        fail(ErrorKind::InvalidInput, "k must be positive");
    if (class_sizes.empty())
        fail(ErrorKind::InvalidInput, "need at least one class");
    std::vector<ClassInfo> classes;
    Vertex next = 0;
    for (int m : class_sizes) {
        if (m < 2)
            fail(ErrorKind::InvalidInput, "class sizes must be at least 2");
        ClassInfo c;
        c.size = m;
        for (int i = 0; i < m; ++i)
            c.members.push_back(next++);
        classes.push_back(std::move(c));
    }
    if (static_cast<int>(lists.size()) != next)
        fail(ErrorKind::InvalidInput, "list assignment size does not match the graph");
    const Graph g = make_complete_multipartite(class_sizes);
    return choose_on_classes(std::move(classes), g, k, lists, budget, exec);
}

RandomResult embed_and_choose(const Graph& g, int k, const ListAssignment& lists, const RandomBudget& budget,
                              Execution exec, std::uint64_t search_budget)
{
    if (k < 1)
        fail(ErrorKind::InvalidInput, "k must be positive");
    if (static_cast<int>(lists.size()) != g.num_vertices())
        fail(ErrorKind::InvalidInput, "list assignment size does not match the graph");
    if (g.empty())
        return RandomResult{{}, 1, budget.seed};
    const int chi = chromatic_number(g, search_budget);
    const auto colouring = *find_coloring(g, chi, search_budget);
    std::vector<ClassInfo> classes(chi);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        classes[colouring[v]].members.push_back(v);
    for (auto& c : classes)
        c.size = static_cast<int>(c.members.size()) + 1;
    return choose_on_classes(std::move(classes), g, k, lists, budget, exec);
}

} // namespace abchoice
