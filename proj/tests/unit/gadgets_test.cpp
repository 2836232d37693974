#include <algorithm>
#include <set>

#include "abchoice/exact_oracle.hpp"
#include "abchoice/gadgets.hpp"
#include "abchoice/graph_core.hpp"
#include "abchoice/strong_partition.hpp"
#include "support.hpp"

using namespace abchoice;

namespace {

std::multiset<int> degrees(const Graph& g)
{
    std::multiset<int> d;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        d.insert(g.degree(v));
    return d;
}

bool regular(const Graph& g, int d)
{
    return g.min_degree() == d && g.max_degree() == d;
}

OracleOptions big()
{
    OracleOptions o;
    o.budget = 2'000'000'000;
    return o;
}

} // namespace

TEST_SUITE("gadgets") {

TEST_CASE("theta examples")
{
    const Graph t222 = gen_theta(2, 2, 2);
    CHECK(t222.num_vertices() == 5);
    CHECK(t222.num_edges() == 6);
    CHECK(degrees(t222) == degrees(make_complete_bipartite(2, 3)));
    CHECK(is_bipartite(t222));

    const Graph t224 = gen_theta(2, 2, 4);
    CHECK(t224.num_vertices() == 7);
    CHECK(t224.degree(0) == 3);
    CHECK(t224.degree(1) == 3);
    for (Vertex v = 2; v < 7; ++v)
        CHECK(t224.degree(v) == 2);

    const Graph t122 = gen_theta(1, 2, 2);
    CHECK(t122.num_vertices() == 4);
    CHECK(t122.adjacent(0, 1));
    CHECK(clique_number(t122) == 3);

    CHECK(test::error_kind([] { gen_theta(1, 1, 2); }) == ErrorKind::NotSimple);
    CHECK(test::error_kind([] { gen_theta(0, 2, 2); }) == ErrorKind::InvalidInput);
}

TEST_CASE("apex tower examples")
{
    const Graph k1 = gen_apex_tower(Graph(1));
    CHECK(k1 == make_complete(2));
    const Graph k2 = gen_apex_tower(make_complete(2));
    CHECK(k2.num_vertices() == 5);
    const Graph c4 = gen_apex_tower(make_cycle(4));
    CHECK(c4.num_vertices() == 17);
    CHECK(c4.num_edges() == 4 * 4 + 16);
    CHECK(c4.degree(16) == 16);
}

TEST_CASE("apex tower raises choice number by one")
{
    CHECK(ch_k(Graph(1), 1) == 1);
    CHECK(ch_k(gen_apex_tower(Graph(1)), 1) == 2);
    CHECK(ch_k(make_complete(2), 1) == 2);
    CHECK(ch_k(gen_apex_tower(make_complete(2)), 1, big()) == 3);
}

TEST_CASE("bg23 gadget examples")
{
    const Graph k2 = make_complete(2);
    const Graph a = gen_bg23_gadget(k2, {2, 2});
    CHECK(a.num_vertices() == 20);
    CHECK(is_bipartite(a));
    CHECK(a.degree(18) == 9);
    CHECK(a.degree(19) == 9);

    const Graph b = gen_bg23_gadget(k2, {3, 3});
    CHECK(b.num_vertices() == 20);
    CHECK(b.degree(18) == 0);
    CHECK(b.degree(19) == 0);

    const Graph c = gen_bg23_gadget(make_path(4), {2, 3, 3, 2});
    CHECK(c.num_vertices() == 9 * 4 + 2);
    CHECK(is_bipartite(c));

    CHECK(test::error_kind([] { gen_bg23_gadget(make_cycle(3), {2, 2, 2}); }) == ErrorKind::NotBipartite);
    CHECK(test::error_kind([] { gen_bg23_gadget(make_complete(2), {2, 2}, {0, 0}); }) == ErrorKind::NotBipartite);
    CHECK(test::error_kind([] { gen_bg23_gadget(make_complete(2), {2, 4}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("bgk gadget examples")
{
    const Graph g = gen_bgk_gadget(make_complete(2), 3);
    CHECK(g.num_vertices() == 514);
    CHECK(g.degree(512) == 256);
    CHECK(is_bipartite(g));
    const Graph p = gen_bgk_gadget(make_path(3), 3);
    CHECK(p.num_vertices() == 256 * 3 + 2);
    CHECK(is_bipartite(p));
    CHECK(test::error_kind([] { gen_bgk_gadget(make_complete(2), 2); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("strong lower gadget structure")
{
    for (int d = 2; d <= 6; ++d) {
        const auto s = gen_strong_lower(d);
        CHECK(s.graph.max_degree() == d);
        REQUIRE(s.parts.size() == 3);
        for (const auto& p : s.parts)
            CHECK(static_cast<int>(p.size()) == 2 * d - 1);
        CHECK(s.graph.num_vertices() == 3 * (2 * d - 1));
        CHECK(s.classes.size() == 8);
    }
    CHECK(gen_strong_lower(2).graph.num_vertices() == 9);
    CHECK(gen_strong_lower(3).graph.num_vertices() == 15);
    CHECK(gen_strong_lower(4).graph.num_vertices() == 21);
    const auto two = gen_strong_lower(2);
    std::vector<std::size_t> sizes;
    for (const auto& c : two.classes)
        sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{2, 1, 1, 0, 0, 2, 2, 1});
    CHECK(test::error_kind([] { gen_strong_lower(1); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("strong lower gadget is not colourable with 2d - 1 colours")
{
    for (int d = 2; d <= 3; ++d) {
        const auto s = gen_strong_lower(d);
        const Graph h = augment(s.graph, s.parts);
        CHECK_FALSE(find_coloring(h, 2 * d - 1, 1'000'000'000));
        CHECK(find_coloring(h, 2 * d, 1'000'000'000));
    }
}

TEST_CASE("hamilton clique examples")
{
    const Graph a = gen_hamilton_clique(1, 2);
    CHECK(a.num_vertices() == 6);
    CHECK(regular(a, 4));
    CHECK(ch_k(a, 1, big()) == 3);
    const Graph b = gen_hamilton_clique(1, 3);
    CHECK(b.num_vertices() == 9);
    CHECK(regular(b, 4));
    const Graph c = gen_hamilton_clique(2, 2);
    CHECK(c.num_vertices() == 12);
    CHECK(regular(c, 7));
    CHECK(test::error_kind([] { gen_hamilton_clique(0, 2); }) == ErrorKind::DegenerateParameters);
    CHECK(test::error_kind([] { gen_hamilton_clique(1, 1); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("hamilton clique graphs contain the cycle and the cliques")
{
    const int k = 2, n = 3;
    const Graph g = gen_hamilton_clique(k, n);
    const int len = 3 * k * n;
    for (int i = 0; i < len; ++i)
        CHECK(g.adjacent(i, (i + 1) % len));
    for (int j = 0; j < n; ++j)
        for (int x = 0; x < 3 * k; ++x)
            for (int y = x + 1; y < 3 * k; ++y)
                CHECK(g.adjacent(j + x * n, j + y * n));
}

TEST_CASE("K2,4 plus apex")
{
    const Graph g = gen_k24_prime();
    CHECK_FALSE(is_bipartite(g));
    CHECK(g.num_edges() == 14);
    CHECK(ch_k(g, 1, big()) == 3);
}

TEST_CASE("generators are deterministic")
{
    CHECK(gen_theta(2, 3, 4) == gen_theta(2, 3, 4));
    CHECK(gen_apex_tower(make_cycle(4)) == gen_apex_tower(make_cycle(4)));
    CHECK(gen_bg23_gadget(make_path(3), {2, 3, 2}) == gen_bg23_gadget(make_path(3), {2, 3, 2}));
    CHECK(gen_bgk_gadget(make_complete(2), 3) == gen_bgk_gadget(make_complete(2), 3));
    CHECK(gen_strong_lower(3).graph == gen_strong_lower(3).graph);
    CHECK(gen_strong_lower(3).parts == gen_strong_lower(3).parts);
    CHECK(gen_hamilton_clique(2, 2) == gen_hamilton_clique(2, 2));
}

TEST_CASE("gadget family catalogue")
{
    std::vector<std::string> names;
    for (const auto& f : gadget_families())
        names.push_back(f.name);
    CHECK(names == std::vector<std::string>{"theta", "apex-tower", "bg23", "bgk", "strong-lower", "hamilton-clique",
                                            "complete-multipartite", "k24-prime"});
}

}

TEST_SUITE("slow") {

TEST_CASE("apex tower of P3 has choice number 3")
{
    const Graph p3 = make_path(3);
    CHECK(ch_k(p3, 1) == 2);
    OracleOptions o;
    o.budget = 20'000'000'000ULL;
    CHECK(ch_k(gen_apex_tower(p3), 1, o) == 3);
}

}
