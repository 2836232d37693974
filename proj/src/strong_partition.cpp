#include "abchoice/strong_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "abchoice/error.hpp"
#include "abchoice/exact_oracle.hpp"

namespace abchoice {

namespace {

void check_parts(const Graph& g, const Parts& parts)
{
    std::vector<bool> seen(g.num_vertices(), false);
    for (const auto& p : parts)
        for (Vertex v : p) {
            if (v < 0 || v >= g.num_vertices())
                fail(ErrorKind::InvalidInput, "part mentions unknown vertex " + std::to_string(v));
            if (seen[v]) {
                Error e(ErrorKind::OverlappingParts, "vertex " + std::to_string(v) + " lies in two parts");
                e.vertex = v;
                throw e;
            }
            seen[v] = true;
        }
}

ColorSet smallest(const ColorSet& s, int k)
{
    return ColorSet(s.begin(), s.begin() + k);
}

void check_family(const SetFamily& f, int count, int size)
{
    if (static_cast<int>(f.size()) != count)
        fail(ErrorKind::SizeMismatch, "family has " + std::to_string(f.size()) + " sets, expected " +
                                          std::to_string(count));
    for (const auto& s : f)
        if (static_cast<int>(s.size()) != size || make_color_set(s) != s)
            fail(ErrorKind::SizeMismatch, "every set must be a sorted set of size " + std::to_string(size));
}

} // namespace

Graph augment(const Graph& base, const Parts& parts)
{
    check_parts(base, parts);
    Graph out = base;
    for (const auto& p : parts)
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                out.add_edge(p[i], p[j]);
    return out;
}

SplitResult split_family(const SetFamily& f, int k, int l)
{
    if (k < 1 || l < 1)
        fail(ErrorKind::SizeMismatch, "k and l must be positive");
    check_family(f, k + l, k + l);
    ColorSet all;
    for (const auto& s : f)
        all = set_union(all, s);

    // in_a[x] for colours of `all`; counts[i] = |F_i & A|
    std::vector<bool> in_a(all.size(), true);
    std::vector<int> count(f.size(), k + l);
    auto r_size = [&] {
        int r = 0;
        for (int c : count)
            r += c > k ? 1 : 0;
        return r;
    };
    int moves = 0;
    bool crossed = false;
    for (std::size_t x = 0; x < all.size(); ++x) {
        const int before = r_size();
        in_a[x] = false;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (std::binary_search(f[i].begin(), f[i].end(), all[x]))
                --count[i];
        ++moves;
        if (before > k && r_size() <= k) {
            crossed = true;
            break;
        }
    }
    if (!crossed)
        throw std::logic_error("split_family sweep never crossed the threshold");

    SplitResult res;
    res.moves = moves;
    res.chosen.resize(f.size());
    std::vector<int> middle;
    int left_count = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (count[i] > k)
            res.first.push_back(static_cast<int>(i));
        else if (count[i] == k)
            middle.push_back(static_cast<int>(i));
        else
            ++left_count;
    }
    if (left_count >= l + 1)
        throw std::logic_error("split_family: too many sets lean to B");
    for (int i : middle) {
        if (static_cast<int>(res.first.size()) < k)
            res.first.push_back(i);
    }
    std::vector<bool> in_first(f.size(), false);
    for (int i : res.first)
        in_first[i] = true;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!in_first[i])
            res.second.push_back(static_cast<int>(i));
    std::sort(res.first.begin(), res.first.end());
    if (static_cast<int>(res.first.size()) != k || static_cast<int>(res.second.size()) != l)
        throw std::logic_error("split_family produced groups of the wrong size");

    for (std::size_t i = 0; i < f.size(); ++i) {
        ColorSet side;
        for (Color c : f[i]) {
            const auto x = std::lower_bound(all.begin(), all.end(), c) - all.begin();
            if (in_a[x] == in_first[i])
                side.push_back(c);
        }
        const int want = in_first[i] ? k : l;
        if (static_cast<int>(side.size()) < want)
            throw std::logic_error("split_family: side too small");
        res.chosen[i] = smallest(side, want);
    }
    return res;
}

PartitionResult partition_family(const SetFamily& f, int k, int m)
{
    if (k < 1 || m < 1)
        fail(ErrorKind::SizeMismatch, "k and m must be positive");
    check_family(f, k * m, k * m);
    PartitionResult res;
    res.chosen.resize(f.size());
    std::vector<int> ids(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        ids[i] = static_cast<int>(i);
    SetFamily current = f;
    for (int left = m; left > 1; --left) {
        const SplitResult s = split_family(current, k, k * (left - 1));
        std::vector<int> group;
        for (int i : s.first) {
            group.push_back(ids[i]);
            res.chosen[ids[i]] = s.chosen[i];
        }
        res.groups.push_back(group);
        SetFamily rest;
        std::vector<int> rest_ids;
        for (int i : s.second) {
            rest.push_back(s.chosen[i]);
            rest_ids.push_back(ids[i]);
        }
        current = std::move(rest);
        ids = std::move(rest_ids);
    }
    for (std::size_t i = 0; i < current.size(); ++i)
        res.chosen[ids[i]] = smallest(current[i], k);
    res.groups.push_back(ids);
    return res;
}

bool check_split(const SetFamily& f, const SplitResult& r, int k, int l)
{
    if (static_cast<int>(r.first.size()) != k || static_cast<int>(r.second.size()) != l ||
        r.chosen.size() != f.size())
        return false;
    std::vector<int> seen(f.size(), 0);
    for (int i : r.first)
        ++seen[i];
    for (int i : r.second)
        ++seen[i];
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        return false;
    for (int i : r.first)
        if (static_cast<int>(r.chosen[i].size()) != k || !is_subset(r.chosen[i], f[i]))
            return false;
    for (int j : r.second)
        if (static_cast<int>(r.chosen[j].size()) != l || !is_subset(r.chosen[j], f[j]))
            return false;
    for (int i : r.first)
        for (int j : r.second)
            if (intersects(r.chosen[i], r.chosen[j]))
                return false;
    return true;
}

bool check_partition(const SetFamily& f, const PartitionResult& r, int k, int m)
{
    if (static_cast<int>(r.groups.size()) != m || r.chosen.size() != f.size())
        return false;
    std::vector<int> group_of(f.size(), -1);
    for (std::size_t g = 0; g < r.groups.size(); ++g) {
        if (static_cast<int>(r.groups[g].size()) != k)
            return false;
        for (int i : r.groups[g]) {
            if (i < 0 || i >= static_cast<int>(f.size()) || group_of[i] >= 0)
                return false;
            group_of[i] = static_cast<int>(g);
        }
    }
    for (std::size_t i = 0; i < f.size(); ++i)
        if (static_cast<int>(r.chosen[i].size()) != k || !is_subset(r.chosen[i], f[i]))
            return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (group_of[i] != group_of[j] && intersects(r.chosen[i], r.chosen[j]))
                return false;
    return true;
}

ColoringOracle brute_force_coloring_oracle()
{
    return [](const Graph& g, int k) { return find_coloring(g, k); };
}

std::vector<Color> strong_color_lift(const Graph& g, const Parts& parts, int k, const ColoringOracle& oracle)
{
    if (k < 1)
        fail(ErrorKind::InvalidInput, "k must be positive");
    check_parts(g, parts);
    for (const auto& p : parts)
        if (static_cast<int>(p.size()) > k + 1)
            fail(ErrorKind::SizeMismatch, "parts may have at most k+1 vertices");

    auto ask = [&](const Parts& shrunk) {
        auto col = oracle(augment(g, shrunk), k);
        if (!col)
            fail(ErrorKind::OracleRefused, "oracle found no " + std::to_string(k) + "-colouring");
        return *col;
    };

    // round one: drop the smallest vertex of every full part
    Parts shrunk = parts;
    std::vector<std::size_t> full;
    for (std::size_t i = 0; i < shrunk.size(); ++i)
        if (static_cast<int>(shrunk[i].size()) == k + 1) {
            full.push_back(i);
            auto& p = shrunk[i];
            p.erase(std::min_element(p.begin(), p.end()));
        }
    const auto first = ask(shrunk);
    // each shrunk full part is a k-clique, so every colour appears on it once;
    // colour 0 picks one vertex per full part, and those are independent
    std::vector<bool> in_s(g.num_vertices(), false);
    for (std::size_t i : full)
        for (Vertex v : shrunk[i])
            if (first[v] == 0)
                in_s[v] = true;

    // round two: drop S instead
    Parts second_parts = parts;
    for (std::size_t i : full) {
        auto& p = second_parts[i];
        p.erase(std::remove_if(p.begin(), p.end(), [&](Vertex v) { return in_s[v]; }), p.end());
    }
    Graph rest = augment(g, second_parts);
    // S gets its own colour; colour the rest with k colours
    std::vector<Vertex> others;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!in_s[v])
            others.push_back(v);
    const InducedSubgraph sub = induced_subgraph(rest, others);
    auto col = oracle(sub.graph, k);
    if (!col)
        fail(ErrorKind::OracleRefused, "oracle found no " + std::to_string(k) + "-colouring in round two");
    std::vector<Color> out(g.num_vertices(), k);
    for (std::size_t i = 0; i < others.size(); ++i)
        out[sub.to_parent[i]] = (*col)[i];
    return out;
}

ListChooser brute_force_list_chooser()
{
    return [](const Graph& g, const ListAssignment& lists) { return find_choice(g, lists, 1); };
}

Choice strong_choice_scale(const Graph& g, const Parts& parts, int k, int m, const ListAssignment& lists,
                           const ListChooser& chooser)
{
    if (k < 1 || m < 1)
        fail(ErrorKind::InvalidInput, "k and m must be positive");
    check_parts(g, parts);
    const int n = g.num_vertices();
    const int km = k * m;
    if (static_cast<int>(lists.size()) != n)
        fail(ErrorKind::InvalidInput, "list assignment size does not match the graph");
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<int>(lists[v].size()) != km)
            fail(ErrorKind::SizeMismatch, "every list must have exactly k*m colours");
    for (const auto& p : parts)
        if (static_cast<int>(p.size()) > km)
            fail(ErrorKind::SizeMismatch, "parts may have at most k*m vertices");

    Color fresh = 0;
    for (const auto& l : lists)
        if (!l.empty())
            fresh = std::max(fresh, l.back() + 1);

    ListAssignment small(n);
    std::vector<bool> covered(n, false);
    Parts sub_parts;
    for (const auto& p : parts) {
        SetFamily fam;
        for (Vertex v : p) {
            fam.push_back(lists[v]);
            covered[v] = true;
        }
        // pad with sets of unused colours
        while (static_cast<int>(fam.size()) < km) {
            ColorSet dummy;
            for (int i = 0; i < km; ++i)
                dummy.push_back(fresh++);
            fam.push_back(dummy);
        }
        const PartitionResult pr = partition_family(fam, k, m);
        for (const auto& grp : pr.groups) {
            std::vector<Vertex> real;
            for (int i : grp)
                if (i < static_cast<int>(p.size())) {
                    real.push_back(p[i]);
                    small[p[i]] = pr.chosen[i];
                }
            if (real.size() > 1)
                sub_parts.push_back(real);
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (!covered[v])
            small[v] = smallest(lists[v], k);

    auto choice = chooser(augment(g, sub_parts), small);
    if (!choice)
        fail(ErrorKind::ChooserRefused, "the k-chooser found no choice on the refined augmentation");
    return *choice;
}

Choice choose_clique_cover(const Graph& g, const Parts& parts, int k, int m, const ListAssignment& lists,
                           const ListChooser& chooser)
{
    std::vector<bool> covered(g.num_vertices(), false);
    for (const auto& p : parts) {
        if (static_cast<int>(p.size()) != k * m)
            fail(ErrorKind::SizeMismatch, "clique cover parts must have exactly k*m vertices");
        for (Vertex v : p)
            if (v >= 0 && v < g.num_vertices())
                covered[v] = true;
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
        fail(ErrorKind::SizeMismatch, "clique cover parts must cover every vertex");
    return strong_choice_scale(g, parts, k, m, lists, chooser);
}

} // namespace abchoice
