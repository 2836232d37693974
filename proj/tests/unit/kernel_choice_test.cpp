#include <algorithm>
#include <random>

#include "abchoice/corpus.hpp"
#include "abchoice/exact_oracle.hpp"
#include "abchoice/graph_core.hpp"
#include "abchoice/kernel_choice.hpp"
#include "abchoice/orientation.hpp"
#include "support.hpp"

using namespace abchoice;
using test::digraph_of;
using test::lists_of;

namespace {

bool kernel_by_hand(const Digraph& d, unsigned mask)
{
    for (auto [u, v] : d.arcs())
        if ((mask >> u & 1) && (mask >> v & 1))
            return false;
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
        if (mask >> v & 1)
            continue;
        bool absorbed = false;
        for (Vertex w : d.out_neighbors(v))
            absorbed = absorbed || (mask >> w & 1);
        if (!absorbed)
            return false;
    }
    return true;
}

unsigned mask_of(const std::vector<Vertex>& k)
{
    unsigned m = 0;
    for (Vertex v : k)
        m |= 1u << v;
    return m;
}

// Every digraph on n vertices: each unordered pair is absent, one arc, the
// other arc, or both.
template <class F>
void for_each_digraph(int n, F&& f)
{
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::size_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        Digraph d(n);
        std::size_t c = code;
        for (auto [u, v] : pairs) {
            const int s = static_cast<int>(c % 4);
            c /= 4;
            if (s & 1)
                d.add_arc(u, v);
            if (s & 2)
                d.add_arc(v, u);
        }
        f(d);
    }
}

Graph interval_chordal()
{
    // intervals [0,2] [1,3] [2,4] [3,5] [1,2] [4,5] on a line
    Graph g(6);
    for (auto [u, v] : {Edge{0, 1}, Edge{0, 2}, Edge{0, 4}, Edge{1, 2}, Edge{1, 3}, Edge{1, 4}, Edge{2, 3},
                        Edge{2, 4}, Edge{2, 5}, Edge{3, 5}})
        g.add_edge(u, v);
    return g;
}

Graph grid3()
{
    Graph g(9);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (c < 2)
                g.add_edge(3 * r + c, 3 * r + c + 1);
            if (r < 2)
                g.add_edge(3 * r + c, 3 * r + c + 3);
        }
    return g;
}

} // namespace

TEST_SUITE("kernel-choice") {

TEST_CASE("kernel examples")
{
    CHECK(kernel(digraph_of(3, {{0, 1}, {1, 2}})) == std::vector<Vertex>{0, 2});
    const auto c4 = kernel(make_directed_cycle(4));
    CHECK((c4 == std::vector<Vertex>{0, 2} || c4 == std::vector<Vertex>{1, 3}));
    try {
        kernel(make_directed_cycle(3));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OddCycle);
        CHECK(e.witness.size() == 3);
    }
}

TEST_CASE("kernels of every digraph on at most 4 vertices")
{
    int checked = 0;
    for (int n = 1; n <= 4; ++n)
        for_each_digraph(n, [&](const Digraph& d) {
            if (odd_directed_cycle(d)) {
                CHECK(test::error_kind([&] { kernel(d); }) == ErrorKind::OddCycle);
                return;
            }
            const auto k = kernel(d);
            CHECK(kernel_by_hand(d, mask_of(k)));
            CHECK(is_kernel(d, k));
            ++checked;
        });
    CHECK(checked > 1000);
}

TEST_CASE("kernels of random odd-cycle-free digraphs on 5 to 8 vertices")
{
    std::mt19937_64 rng(3);
    std::bernoulli_distribution coin(0.3);
    int checked = 0;
    while (checked < 2000) {
        const int n = 5 + checked % 4;
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng))
                    d.add_arc(u, v);
        if (odd_directed_cycle(d))
            continue;
        CHECK(kernel_by_hand(d, mask_of(kernel(d))));
        ++checked;
    }
}

TEST_CASE("is_kernel rejects non-kernels")
{
    const Digraph c4 = make_directed_cycle(4);
    CHECK_FALSE(is_kernel(c4, {0, 1}));
    CHECK_FALSE(is_kernel(c4, {0}));
    CHECK(is_kernel(c4, {1, 3}));
}

TEST_CASE("multichoice examples")
{
    const auto c4 = kernel_multichoice(make_directed_cycle(4), 1, lists_of({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
    CHECK(verify_choice(make_cycle(4), lists_of({{1, 2}, {1, 2}, {1, 2}, {1, 2}}), c4, 1));
    CHECK(c4[0] == c4[2]);
    CHECK(c4[1] == c4[3]);

    const ListAssignment six = lists_of({{1, 2, 3, 4}, {2, 3, 4, 5}, {1, 3, 5, 6}, {1, 2, 5, 6}, {3, 4, 5, 6}, {1, 2, 3, 6}});
    MultichoiceStats stats;
    const auto c6 = kernel_multichoice(make_directed_cycle(6), 2, six, &stats);
    CHECK(verify_choice(make_cycle(6), six, c6, 2));
    CHECK(stats.iterations <= 2 * 6);

    const auto one = kernel_multichoice(Digraph(1), 3, lists_of({{1, 2, 3}}));
    CHECK(one[0] == ColorSet{1, 2, 3});
}

TEST_CASE("multichoice errors")
{
    try {
        kernel_multichoice(make_directed_cycle(4), 1, lists_of({{1, 2}, {1}, {1, 2}, {1, 2}}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ListTooSmall);
        CHECK(e.vertex == 1);
    }
    CHECK(test::error_kind([] {
              kernel_multichoice(make_directed_cycle(3), 1, lists_of({{1, 2}, {1, 2}, {1, 2}}));
          }) == ErrorKind::OddCycle);
}

TEST_CASE("multichoice succeeds on every canonical assignment of small oriented graphs")
{
    std::uint64_t runs = 0;
    for (const Graph& g : connected_graphs_up_to(5)) {
        int d = 0;
        for (int dd = 0; dd < g.num_vertices(); ++dd)
            if (orient_degeneracy(g, dd)) {
                d = dd;
                break;
            }
        const auto o = orient_degeneracy(g, d);
        REQUIRE(o);
        const Digraph dg = o->digraph();
        for (int k = 1; k <= 2; ++k) {
            std::vector<int> sizes(g.num_vertices());
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                sizes[v] = k * (dg.out_degree(v) + 1);
            if (*std::max_element(sizes.begin(), sizes.end()) > 5 || (g.num_vertices() == 5 && k * (d + 1) > 3))
                continue;
            const bool all_ok = for_each_assignment(g, sizes, Enumeration::Canonical, [&](const ListAssignment& lists) {
                MultichoiceStats stats;
                const Choice c = kernel_multichoice(dg, k, lists, &stats);
                ++runs;
                CHECK(stats.iterations <= k * g.num_vertices());
                return verify_choice(g, lists, c, k);
            }, 100'000'000, 5);
            CHECK(all_ok);
        }
    }
    CHECK(runs > 10000);
}

TEST_CASE("multichoice succeeds under random colour orders")
{
    std::mt19937_64 rng(19);
    for (const Graph& g : connected_graphs_up_to(5)) {
        std::optional<Orientation> o;
        for (int d = 1; !o && d < 5; ++d)
            o = orient_bounded_outdegree(g, d);
        if (!o || odd_directed_cycle(o->digraph()))
            continue;
        const Digraph dg = o->digraph();
        for (int trial = 0; trial < 20; ++trial) {
            const int k = 1 + trial % 2;
            ListAssignment lists(g.num_vertices());
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                Rng r(rng());
                lists[v] = random_color_set(r, k * (dg.out_degree(v) + 1), 8);
            }
            auto rule = [&](const ColorSet& cand) { return cand[rng() % cand.size()]; };
            CHECK(verify_choice(g, lists, kernel_multichoice(dg, k, lists, nullptr, rule), k));
        }
    }
}

TEST_CASE("choose via orientation examples")
{
    std::mt19937_64 rng(5);
    auto random_uniform = [&](int n, int size, int palette) {
        Rng r(rng());
        return random_lists(r, n, size, palette);
    };
    const Graph g = grid3();
    const auto o = orient_bounded_outdegree(g, 2);
    REQUIRE(o);
    REQUIRE_FALSE(odd_directed_cycle(o->digraph()));
    for (int t = 0; t < 50; ++t) {
        const auto lists = random_uniform(9, 3, 6);
        CHECK(verify_choice(g, lists, choose_via_orientation(*o, 1, lists), 1));
    }
    const Graph tree = make_path(7);
    const auto ot = orient_bounded_outdegree(tree, 1);
    REQUIRE(ot);
    for (int t = 0; t < 50; ++t) {
        const auto lists = random_uniform(7, 4, 8);
        CHECK(verify_choice(tree, lists, choose_via_orientation(*ot, 2, lists), 2));
    }
    const auto oc = orient_bounded_outdegree(make_cycle(4), 1);
    REQUIRE(oc);
    for (int t = 0; t < 50; ++t) {
        const auto lists = random_uniform(4, 6, 9);
        const Choice c = choose_via_orientation(*oc, 3, lists);
        CHECK(verify_choice(make_cycle(4), lists, c, 3));
        CHECK(find_choice(make_cycle(4), lists, 3));
    }
}

TEST_CASE("chordal chooser")
{
    const Graph k3 = make_complete(3);
    const auto l3 = lists_of({{1, 2, 3}, {2, 3, 4}, {1, 3, 4}});
    CHECK(verify_choice(k3, l3, choose_chordal(k3, 1, l3), 1));

    std::mt19937_64 rng(23);
    const Graph ic = interval_chordal();
    REQUIRE(is_triangulated(ic));
    const int w = clique_number(ic);
    for (int t = 0; t < 100; ++t) {
        Rng r(rng());
        const auto lists = random_lists(r, 6, 2 * w, 2 * w + 4);
        CHECK(verify_choice(ic, lists, choose_chordal(ic, 2, lists), 2));
        CHECK(find_choice(ic, lists, 2));
    }
    const Graph tree = make_complete_bipartite(1, 4);
    const auto lt = lists_of({{1, 2}, {1, 2}, {2, 3}, {1, 3}, {4, 5}});
    CHECK(verify_choice(tree, lt, choose_chordal(tree, 1, lt), 1));

    CHECK(test::error_kind([] {
              choose_chordal(make_cycle(4), 1, lists_of({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}}));
          }) == ErrorKind::NotChordal);
    CHECK(test::error_kind([&] { choose_chordal(k3, 1, lists_of({{1, 2}, {1, 2}, {1, 2}})); }) ==
          ErrorKind::ListTooSmall);
}

TEST_CASE("brooks chooser")
{
    const Graph c6 = make_cycle(6);
    const auto l6 = lists_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    CHECK(verify_choice(c6, l6, choose_brooks(c6, 1, l6), 1));
    CHECK(test::error_kind([] {
              choose_brooks(make_complete(4), 1, uniform_lists(4, {1, 2, 3}));
          }) == ErrorKind::NotApplicable);
    CHECK(test::error_kind([] { choose_brooks(make_cycle(5), 1, uniform_lists(5, {1, 2})); }) ==
          ErrorKind::NotApplicable);

    std::mt19937_64 rng(29);
    const Graph p = make_petersen();
    for (int t = 0; t < 100; ++t) {
        Rng r(rng());
        const int k = 1 + t % 2;
        const auto lists = random_lists(r, 10, 3 * k, 3 * k + 3);
        CHECK(verify_choice(p, lists, choose_brooks(p, k, lists), k));
    }
}

TEST_CASE("brooks chooser on small graphs")
{
    std::mt19937_64 rng(31);
    for (const Graph& g : connected_graphs_up_to(6)) {
        if (is_complete(g) || (is_cycle(g) && g.num_vertices() % 2 == 1))
            continue;
        const int delta = g.max_degree();
        for (int t = 0; t < 10; ++t) {
            Rng r(rng());
            const int k = 1 + t % 2;
            const auto lists = random_lists(r, g.num_vertices(), k * delta, k * delta + 2);
            CHECK(verify_choice(g, lists, choose_brooks(g, k, lists), k));
        }
    }
}

}
