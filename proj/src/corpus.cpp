#include "abchoice/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "abchoice/error.hpp"
#include "abchoice/graph_core.hpp"

namespace abchoice {

namespace {

// bit index of pair (i, j), i < j, in an upper-triangle code
int pair_bit(int n, int i, int j)
{
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint32_t relabel(std::uint32_t code, int n, const std::vector<int>& perm)
{
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code >> pair_bit(n, i, j) & 1) {
                const int a = std::min(perm[i], perm[j]), b = std::max(perm[i], perm[j]);
                out |= std::uint32_t{1} << pair_bit(n, a, b);
            }
    return out;
}

Graph from_code(std::uint32_t code, int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code >> pair_bit(n, i, j) & 1)
                g.add_edge(i, j);
    return g;
}

} // namespace

std::vector<Graph> connected_graphs(int n)
{
    if (n < 1 || n > 7)
        fail(ErrorKind::InvalidInput, "connected_graphs supports 1 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint32_t> seen;
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << pairs); ++code) {
        // fewer than n-1 edges cannot be connected
        if (std::popcount(code) < n - 1)
            continue;
        std::uint32_t best = code;
        for (const auto& perm : perms) {
            best = std::min(best, relabel(code, n, perm));
            if (best < code)
                break;
        }
        if (best < code || seen.count(code))
            continue;
        if (is_connected(from_code(code, n)))
            seen.insert(code);
    }
    std::vector<Graph> out;
    for (std::uint32_t code : seen)
        out.push_back(from_code(code, n));
    return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = connected_graphs(n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

ColorSet random_color_set(Rng& rng, int size, int palette)
{
    if (size < 0 || size > palette)
        fail(ErrorKind::InvalidInput, "list size exceeds the palette");
    std::vector<Color> pool(palette);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < size; ++i) {
        const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(palette - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

ListAssignment random_lists(Rng& rng, int n, int size, int palette)
{
    ListAssignment out;
    for (int v = 0; v < n; ++v)
        out.push_back(random_color_set(rng, size, palette));
    return out;
}

} // namespace abchoice
