#include <algorithm>
#include <numeric>

#include "abchoice/calculus_checks.hpp"
#include "abchoice/corpus.hpp"
#include "abchoice/exact_oracle.hpp"
#include "abchoice/gadgets.hpp"
#include "abchoice/two_choice.hpp"
#include "support.hpp"

using namespace abchoice;
using test::lists_of;

namespace {

const ColorSet A = {1, 2, 3, 4};

std::vector<int> sorted_degrees(const PairRelation& r)
{
    auto d = r.degrees();
    std::vector<int> v(d.begin(), d.end());
    std::sort(v.rbegin(), v.rend());
    return v;
}

ColorSet relabel(const ColorSet& s, const std::vector<Color>& perm)
{
    ColorSet out;
    for (Color c : s)
        out.push_back(perm[c]);
    return make_color_set(out);
}

} // namespace

TEST_SUITE("two-choice") {

TEST_CASE("2-choosability examples")
{
    CHECK(is_2_choosable(make_cycle(6)));
    CHECK(is_2_choosable(make_complete_bipartite(2, 3)));
    CHECK_FALSE(is_2_choosable(make_complete_bipartite(3, 3)));
    CHECK(is_2_choosable(disjoint_union(make_cycle(4), gen_theta(2, 2, 4))));
    CHECK_FALSE(is_2_choosable(disjoint_union(make_cycle(4), make_cycle(3))));
}

TEST_CASE("2-choosability matches the oracle on small graphs")
{
    for (const Graph& g : connected_graphs_up_to(6))
        CHECK(is_2_choosable(g) == is_ab_choosable(g, 2, 1).choosable);
}

TEST_CASE("comp of a repeated set pairs each subset with its complement")
{
    const auto rel = comp_sequence({{1, 2, 3, 4}, {1, 2, 3, 4}});
    CHECK(rel.size() == 6);
    for (const auto& [c, d] : rel.pairs()) {
        ColorSet both = set_union(make_color_set({c[0], c[1]}), make_color_set({d[0], d[1]}));
        CHECK(both == A);
    }
    CHECK(good_subsets({{1, 2, 3, 4}, {1, 2, 3, 4}}).empty());
    CHECK(good_subsets({{1, 2, 3, 4}, {5, 6, 7, 8}}).size() == 6);
}

TEST_CASE("single-set comp is the diagonal")
{
    const auto rel = comp_sequence({{1, 2, 3, 4}});
    CHECK(rel.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(rel.contains(i, i));
}

TEST_CASE("repeating the middle set does not change comp")
{
    const auto seq = normalize_sequence({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 5}, {1, 5, 6, 7}});
    REQUIRE(is_legal_sequence(seq));
    const auto outer = normalize_sequence({{1, 2, 3, 4}, {1, 5, 6, 7}});
    CHECK(comp_sequence(seq).bits == comp_sequence(outer).bits);
}

TEST_CASE("comp of a subsequence is never larger")
{
    const auto seq = normalize_sequence({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 6, 5}, {7, 2, 6, 5}, {7, 8, 6, 5}});
    REQUIRE(is_valid_sequence(seq));
    const int full = comp_sequence(seq).size();
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i; j < seq.size(); ++j) {
            FourSetSequence sub(seq.begin() + i, seq.begin() + j + 1);
            CHECK(comp_sequence(sub).size() <= full);
        }
}

TEST_CASE("normalisation keeps shared colours in place")
{
    const auto seq = normalize_sequence({{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 9}});
    CHECK(seq[0] == FourSet{1, 2, 3, 4});
    CHECK(seq[1] == FourSet{5, 2, 3, 4});
    CHECK(seq[2] == FourSet{5, 9, 3, 4});
    CHECK(is_valid_sequence(seq));
    CHECK(changed_positions(seq) == 0b0011);
}

TEST_CASE("incomp on K2,2: special with both properties")
{
    const auto r = incomp_k22({1, 2, 4, 5}, {1, 3, 4, 5}, {1, 2, 3, 4}, {1, 2, 3, 5});
    CHECK(r.defected);
    REQUIRE(r.bad_left.size() == 1);
    REQUIRE(r.bad_right.size() == 1);
    CHECK(r.bad_left[0] == ColorPair{1, 2});
    CHECK(r.bad_right[0] == ColorPair{1, 3});
    CHECK(classify_special(r.incomp) == SpecialTag{true, true, true});
}

TEST_CASE("incomp on K2,2: degree sequence shape")
{
    const auto r = incomp_k22({1, 2, 5, 6}, {3, 4, 5, 6}, {1, 2, 3, 4}, {1, 3, 5, 6});
    CHECK(sorted_degrees(r.incomp) == std::vector<int>{6, 5, 5, 3, 2, 2});
    CHECK_FALSE(classify_special(r.incomp).is_special);
}

TEST_CASE("incomp on K2,2: 21 pairs")
{
    const auto r = incomp_k22({1, 2, 4, 6}, {3, 4, 5, 6}, {1, 2, 3, 4}, {1, 3, 5, 6});
    CHECK(r.incomp.size() == 21);
}

TEST_CASE("empty relation is not special")
{
    PairRelation empty;
    empty.left = A;
    empty.right = {5, 6, 7, 8};
    CHECK(classify_special(empty) == SpecialTag{});
}

TEST_CASE("special classification survives relabelling")
{
    std::vector<Color> perm = {0, 7, 3, 9, 1, 4, 8};
    const auto a = incomp_k22({1, 2, 4, 5}, {1, 3, 4, 5}, {1, 2, 3, 4}, {1, 2, 3, 5});
    const auto b = incomp_k22(relabel({1, 2, 4, 5}, perm), relabel({1, 3, 4, 5}, perm), relabel({1, 2, 3, 4}, perm),
                              relabel({1, 2, 3, 5}, perm));
    CHECK(isomorphic(a.incomp, b.incomp));
    CHECK(canonical_form(a.incomp) == canonical_form(b.incomp));
    CHECK(classify_special(a.incomp) == classify_special(b.incomp));
    const auto other = incomp_k22({1, 2, 4, 6}, {3, 4, 5, 6}, {1, 2, 3, 4}, {1, 3, 5, 6});
    CHECK_FALSE(isomorphic(a.incomp, other.incomp));
}

TEST_CASE("two-subset indexing")
{
    const auto subs = two_subsets({2, 5, 7, 9});
    CHECK(subs[0] == ColorPair{2, 5});
    CHECK(subs[5] == ColorPair{7, 9});
    for (int i = 0; i < 6; ++i)
        CHECK(two_subset_index({2, 5, 7, 9}, subs[i]) == i);
}

TEST_CASE("comp dynamic programme matches chain enumeration")
{
    const auto t = check_comp_dp(5, 3000, 0xc0);
    INFO(t.summary());
    CHECK(t.ok());
    CHECK(t.instances == 3000);
}

TEST_CASE("repeat identity over every legal sequence")
{
    const auto t = check_repeat_identity(8);
    INFO(t.summary());
    CHECK(t.ok());
    CHECK(t.instances > 0);
}

TEST_CASE("subsequence monotonicity on random sequences")
{
    const auto t = check_subsequence_monotonicity(3, 6, 3000, 0x5e);
    INFO(t.summary());
    CHECK(t.ok());
}

TEST_CASE("doubling an end set flips exactly one property")
{
    const auto t = check_doubling_parity(4);
    INFO(t.summary());
    CHECK(t.ok());
    CHECK(t.instances > 0);
}

TEST_CASE("defected K2,2 trichotomy")
{
    const auto t = check_defected_k22(8);
    INFO(t.summary());
    CHECK(t.ok());
    CHECK(t.instances > 0);
}

TEST_CASE("odd sequences of length 3 have a good subset")
{
    const auto t = check_odd_sequences(3);
    INFO(t.summary());
    CHECK(t.ok());
    CHECK(t.instances > 0);
}

TEST_CASE("valid sequence enumeration starts from the identity set")
{
    int count = 0;
    for_each_valid_sequence(2, 8, [&](const FourSetSequence& s) {
        CHECK(s[0] == FourSet{0, 1, 2, 3});
        CHECK(is_valid_sequence(s));
        ++count;
        return true;
    });
    CHECK(count > 1);
}

TEST_CASE("(4:2) chooser examples")
{
    const Graph c4 = make_cycle(4);
    const auto l4 = uniform_lists(4, {1, 2, 3, 4});
    const Choice c = choose_42(c4, l4);
    CHECK(verify_choice(c4, l4, c, 2));
    CHECK(c[0] == c[2]);
    CHECK(set_union(c[0], c[1]) == A);

    const Graph t = gen_theta(2, 2, 2);
    const auto lt = lists_of({{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 5, 7}, {2, 4, 6, 8}, {3, 4, 5, 6}});
    CHECK(verify_choice(t, lt, choose_42(t, lt), 2));

    const Graph c6 = make_cycle(6);
    const auto l6 = lists_of({{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 1, 2}, {1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 1, 2}});
    CHECK(verify_choice(c6, l6, choose_42(c6, l6), 2));

    CHECK(test::error_kind([] { choose_42(make_complete_bipartite(3, 3), uniform_lists(6, {1, 2, 3, 4})); }) ==
          ErrorKind::Not2Choosable);
}

TEST_CASE("(4:2) chooser on every canonical assignment of C4 and the reduced family of C6")
{
    auto run = [](const Graph& g, Enumeration e) {
        std::uint64_t n = 0;
        const bool ok = for_each_assignment(g, std::vector<int>(g.num_vertices(), 4), e,
                                            [&](const ListAssignment& lists) {
                                                ++n;
                                                return verify_choice(g, lists, choose_42(g, lists), 2);
                                            }, 100'000'000);
        CHECK(ok);
        return n;
    };
    CHECK(run(make_cycle(4), Enumeration::Canonical) == 168481);
    CHECK(run(make_cycle(6), Enumeration::Reduced) > 0);
    CHECK(run(gen_theta(2, 2, 2), Enumeration::Reduced) > 0);
}

TEST_CASE("(4:2) chooser on trees hanging off a core")
{
    Graph g = make_cycle(4);
    for (int i = 0; i < 3; ++i) {
        const Vertex v = g.add_vertex();
        g.add_edge(i == 2 ? 4 : i, v);
    }
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const auto lists = random_lists(rng, g.num_vertices(), 4, 7);
        CHECK(verify_choice(g, lists, choose_42(g, lists), 2));
    }
}

TEST_CASE("blow-up lists use consecutive blocks")
{
    const auto b = blowup_lists(lists_of({{0, 2}}), 3);
    CHECK(b[0] == ColorSet{0, 1, 2, 6, 7, 8});
}

TEST_CASE("blow-up reduction with singleton blocks is the identity")
{
    const Graph g = make_path(3);
    const auto lists = lists_of({{1, 2}, {2, 3}, {1, 3}});
    const Choice c = lists_of({{1}, {3}, {1}});
    CHECK(blowup_reduce(g, 1, 1, lists, c) == std::vector<Color>{1, 3, 1});
}

TEST_CASE("blow-up reduction on every (6:3) choice of K2")
{
    const Graph k2 = make_complete(2);
    const auto lists = lists_of({{1, 2}, {2, 3}});
    const auto big = blowup_lists(lists, 3);
    int valid = 0;
    for (const auto& a : test::subsets_of(big[0], 3))
        for (const auto& b : test::subsets_of(big[1], 3)) {
            const Choice c = {a, b};
            if (!verify_choice(k2, big, c, 3))
                continue;
            ++valid;
            const auto f = blowup_reduce(k2, 1, 3, lists, c);
            CHECK(f[0] != f[1]);
            CHECK(std::count(lists[0].begin(), lists[0].end(), f[0]) == 1);
            CHECK(std::count(lists[1].begin(), lists[1].end(), f[1]) == 1);
        }
    CHECK(valid > 0);
}

TEST_CASE("blow-up reduction on C4 over canonical 2-lists")
{
    const Graph c4 = make_cycle(4);
    const bool ok = for_each_assignment(c4, {2, 2, 2, 2}, Enumeration::Canonical, [&](const ListAssignment& lists) {
        const auto c = find_choice(c4, blowup_lists(lists, 3), 3);
        if (!c)
            return false;
        const auto f = blowup_reduce(c4, 1, 3, lists, *c);
        return test::proper_coloring(c4, f) && verify_choice(c4, lists, lists_of({{f[0]}, {f[1]}, {f[2]}, {f[3]}}), 1);
    });
    CHECK(ok);
}

TEST_CASE("blow-up reduction rejects a choice without a majority block")
{
    const Graph g(1);
    CHECK(test::error_kind([&] { blowup_reduce(g, 1, 3, lists_of({{0, 1}}), lists_of({{0, 3, 6}})); }) ==
          ErrorKind::NoMajorityBlock);
    CHECK(test::error_kind([&] { blowup_reduce(g, 1, 2, lists_of({{0, 1}}), lists_of({{0, 1}})); }) ==
          ErrorKind::InvalidInput);
}

}
