#include <algorithm>
#include <functional>
#include <set>

#include "abchoice/corpus.hpp"
#include "abchoice/exact_oracle.hpp"
#include "abchoice/gadgets.hpp"
#include "abchoice/strong_partition.hpp"
#include "support.hpp"

using namespace abchoice;
using test::lists_of;

namespace {

// Set partitions of {0..n-1} into blocks of size <= cap; singleton blocks
// are left out of the result.
void for_each_parts(int n, int cap, const std::function<void(const Parts&)>& f)
{
    std::vector<std::vector<Vertex>> blocks;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            Parts out;
            for (const auto& b : blocks)
                if (b.size() > 1)
                    out.push_back(b);
            f(out);
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (static_cast<int>(blocks[i].size()) < cap) {
                blocks[i].push_back(v);
                rec(v + 1);
                blocks[i].pop_back();
            }
        blocks.push_back({v});
        rec(v + 1);
        blocks.pop_back();
    };
    rec(0);
}

bool strongly_colourable(const Graph& g, int k)
{
    bool ok = true;
    for_each_parts(g.num_vertices(), k, [&](const Parts& p) {
        if (ok && !find_coloring(augment(g, p), k))
            ok = false;
    });
    return ok;
}

std::vector<ColorSet> all_sets(int size, int palette)
{
    ColorSet universe(palette);
    for (int c = 0; c < palette; ++c)
        universe[c] = c;
    return test::subsets_of(universe, size);
}

Graph matching(int pairs)
{
    Graph g(2 * pairs);
    for (int i = 0; i < pairs; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    return g;
}

} // namespace

TEST_SUITE("strong-partition") {

TEST_CASE("augment examples")
{
    CHECK(augment(Graph(3), {{0, 1, 2}}) == make_complete(3));
    CHECK(augment(make_complete(2), {{0, 1}}) == make_complete(2));
    const auto s = gen_strong_lower(2);
    const Graph h = augment(s.graph, s.parts);
    CHECK(h.num_vertices() == 9);
    CHECK(test::error_kind([] { augment(Graph(3), {{0, 1}, {1, 2}}); }) == ErrorKind::OverlappingParts);
    CHECK(test::error_kind([] { augment(Graph(3), {{0, 5}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("split examples")
{
    const auto a = split_family({{1, 2}, {3, 4}}, 1, 1);
    CHECK(check_split({{1, 2}, {3, 4}}, a, 1, 1));
    CHECK(a.first.size() == 1);
    CHECK(a.second.size() == 1);

    const SetFamily same = {{1, 2}, {1, 2}};
    const auto b = split_family(same, 1, 1);
    CHECK(check_split(same, b, 1, 1));
    CHECK(set_union(b.chosen[0], b.chosen[1]) == ColorSet{1, 2});

    const SetFamily three = {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}};
    const auto c = split_family(three, 2, 1);
    REQUIRE(check_split(three, c, 2, 1));
    REQUIRE(c.first.size() == 2);
    REQUIRE(c.second.size() == 1);
    CHECK(c.chosen[c.first[0]] == c.chosen[c.first[1]]);
    CHECK(set_union(c.chosen[c.first[0]], c.chosen[c.second[0]]) == ColorSet{1, 2, 3});
}

TEST_CASE("split and partition reject mis-sized families")
{
    CHECK(test::error_kind([] { split_family({{1, 2}}, 1, 1); }) == ErrorKind::SizeMismatch);
    CHECK(test::error_kind([] { split_family({{1, 2}, {1, 2, 3}}, 1, 1); }) == ErrorKind::SizeMismatch);
    CHECK(test::error_kind([] { partition_family({{1, 2}, {1}}, 1, 2); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("partition examples")
{
    const SetFamily one = {{4, 5, 6}, {1, 5, 6}, {1, 2, 3}};
    const auto a = partition_family(one, 3, 1);
    REQUIRE(a.groups.size() == 1);
    CHECK(check_partition(one, a, 3, 1));

    const SetFamily two = {{1, 2}, {1, 2}};
    const auto b = partition_family(two, 1, 2);
    CHECK(check_partition(two, b, 1, 2));
    CHECK(b.groups.size() == 2);
    CHECK(set_union(b.chosen[0], b.chosen[1]) == ColorSet{1, 2});

    const SetFamily three = {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}};
    const auto c = partition_family(three, 1, 3);
    CHECK(check_partition(three, c, 1, 3));
    std::set<Color> reps;
    for (const auto& s : c.chosen) {
        REQUIRE(s.size() == 1);
        reps.insert(s[0]);
    }
    CHECK(reps.size() == 3);
}

TEST_CASE("split is disjoint on every small family")
{
    for (int palette = 2; palette <= 6; ++palette) {
        const auto sets = all_sets(2, palette);
        for (const auto& s : sets)
            for (const auto& t : sets) {
                const SetFamily f = {s, t};
                CHECK(check_split(f, split_family(f, 1, 1), 1, 1));
            }
    }
    const auto sets = all_sets(4, 6);
    std::uint64_t n = 0;
    for (const auto& a : sets)
        for (const auto& b : sets)
            for (const auto& c : sets)
                for (const auto& d : sets) {
                    const SetFamily f = {a, b, c, d};
                    const auto r = split_family(f, 2, 2);
                    if (!check_split(f, r, 2, 2))
                        FAIL("split failed on a 2,2 family");
                    ++n;
                }
    CHECK(n == 50625);
}

TEST_CASE("split and partition on random families")
{
    Rng rng(0x71);
    for (int t = 0; t < 4000; ++t) {
        const int k = 1 + static_cast<int>(uniform_below(rng, 5));
        const int l = 1 + static_cast<int>(uniform_below(rng, 6 - k));
        const int s = k + l;
        const int palette = s + static_cast<int>(uniform_below(rng, 13 - s));
        SetFamily f;
        for (int i = 0; i < s; ++i)
            f.push_back(random_color_set(rng, s, palette));
        const auto r = split_family(f, k, l);
        CHECK(check_split(f, r, k, l));
        CHECK(static_cast<int>(r.first.size()) == k);
        CHECK(static_cast<int>(r.second.size()) == l);
    }
    for (int t = 0; t < 4000; ++t) {
        const int k = 1 + static_cast<int>(uniform_below(rng, 3));
        const int m = 1 + static_cast<int>(uniform_below(rng, 6 / k));
        const int s = k * m;
        const int palette = s + static_cast<int>(uniform_below(rng, 13 - s));
        SetFamily f;
        for (int i = 0; i < s; ++i)
            f.push_back(random_color_set(rng, s, palette));
        const auto r = partition_family(f, k, m);
        CHECK(check_partition(f, r, k, m));
        CHECK(static_cast<int>(r.groups.size()) == m);
        for (const auto& g : r.groups)
            CHECK(static_cast<int>(g.size()) == k);
    }
}

TEST_CASE("check_split notices a clash")
{
    const SetFamily f = {{1, 2}, {1, 2}};
    SplitResult bad;
    bad.first = {0};
    bad.second = {1};
    bad.chosen = {{1}, {1}};
    CHECK_FALSE(check_split(f, bad, 1, 1));
}

TEST_CASE("colour lift examples")
{
    const Graph m = matching(3);
    const Parts p = {{0, 2, 4}, {1, 3, 5}};
    const auto c = strong_color_lift(m, p, 2);
    CHECK(test::proper_coloring(augment(m, p), c));
    CHECK(*std::max_element(c.begin(), c.end()) <= 2);

    const auto plain = strong_color_lift(make_cycle(6), {}, 2);
    CHECK(test::proper_coloring(make_cycle(6), plain));
    CHECK(*std::max_element(plain.begin(), plain.end()) <= 2);

    const auto tri = strong_color_lift(Graph(3), {{0, 1, 2}}, 2);
    CHECK(std::set<Color>(tri.begin(), tri.end()).size() == 3);

    CHECK(test::error_kind([] { strong_color_lift(make_complete(4), {}, 2); }) == ErrorKind::OracleRefused);
}

TEST_CASE("colour lift on every small graph and part structure")
{
    int lifted = 0;
    for (const Graph& g : connected_graphs_up_to(5)) {
        for (int k = 2; k <= 3; ++k) {
            const bool premise = strongly_colourable(g, k);
            for_each_parts(g.num_vertices(), k + 1, [&](const Parts& p) {
                try {
                    const auto c = strong_color_lift(g, p, k);
                    CHECK(test::proper_coloring(augment(g, p), c));
                    CHECK(*std::max_element(c.begin(), c.end()) <= k);
                    ++lifted;
                } catch (const Error& e) {
                    CHECK(e.kind() == ErrorKind::OracleRefused);
                    CHECK_FALSE(premise);
                }
            });
        }
    }
    CHECK(lifted > 500);
}

TEST_CASE("scaled choice examples")
{
    const Graph c6 = make_cycle(6);
    const auto l6 = lists_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    const Parts edges = {{0, 1}, {2, 3}, {4, 5}};
    const auto direct = strong_choice_scale(c6, edges, 2, 1, l6);
    CHECK(verify_choice(augment(c6, edges), l6, direct, 1));
    const auto cover = choose_clique_cover(c6, edges, 2, 1, l6);
    CHECK(verify_choice(c6, l6, cover, 1));

    const Graph m = matching(4);
    const Parts p = {{0, 2, 4, 6}, {1, 3, 5, 7}};
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const auto lists = random_lists(rng, 8, 4, 4 + static_cast<int>(uniform_below(rng, 5)));
        const auto c = strong_choice_scale(m, p, 2, 2, lists);
        CHECK(verify_choice(augment(m, p), lists, c, 1));
        CHECK(find_choice(augment(m, p), lists, 1));
    }
}

TEST_CASE("scaled choice errors")
{
    CHECK(test::error_kind([] { strong_choice_scale(make_complete(3), {}, 1, 2, uniform_lists(3, {0, 1})); }) ==
          ErrorKind::ChooserRefused);
    CHECK(test::error_kind([] { strong_choice_scale(Graph(2), {}, 1, 2, uniform_lists(2, {0, 1, 2})); }) ==
          ErrorKind::SizeMismatch);
    CHECK(test::error_kind([] {
              choose_clique_cover(make_cycle(4), {{0, 1}}, 1, 2, uniform_lists(4, {0, 1}));
          }) != ErrorKind::ChooserRefused);
}

TEST_CASE("scaled choice leaves vertices outside parts with their smallest colours")
{
    const Graph g(3);
    const auto lists = lists_of({{5, 6}, {1, 2}, {3, 9}});
    const auto c = strong_choice_scale(g, {{0, 1}}, 1, 2, lists);
    CHECK(verify_choice(augment(g, {{0, 1}}), lists, c, 1));
    CHECK(c[2] == ColorSet{3});
}

}
