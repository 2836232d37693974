#include "abchoice/two_choice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "abchoice/error.hpp"
#include "abchoice/graph_core.hpp"

namespace abchoice {

bool is_2_choosable(const Graph& g)
{
    for (const auto& comp : connected_components(g)) {
        const auto tag = classify_core(induced_subgraph(g, comp).graph).tag;
        if (tag == CoreClass::Tag::Other)
            return false;
    }
    return true;
}

bool is_valid_sequence(const FourSetSequence& seq)
{
    for (const auto& a : seq) {
        FourSet s = a;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            return false;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
                if (seq[i][p] == seq[i + 1][q] && p != q)
                    return false;
    return true;
}

bool is_legal_sequence(const FourSetSequence& seq)
{
    if (!is_valid_sequence(seq))
        return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        for (Color c : seq[i + 1]) {
            if (std::find(seq[i].begin(), seq[i].end(), c) != seq[i].end())
                continue;
            for (std::size_t j = 0; j <= i; ++j)
                if (std::find(seq[j].begin(), seq[j].end(), c) != seq[j].end())
                    return false;
        }
    return true;
}

int changed_positions(const FourSetSequence& seq)
{
    int mask = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        for (int p = 0; p < 4; ++p)
            if (seq[i][p] != seq[i + 1][p])
                mask |= 1 << p;
    return mask;
}

FourSetSequence normalize_sequence(const std::vector<ColorSet>& sets)
{
    FourSetSequence out;
    for (const auto& s : sets) {
        if (s.size() != 4)
            fail(ErrorKind::InvalidInput, "sequence members must have exactly 4 colours");
        FourSet next{};
        if (out.empty()) {
            std::copy(s.begin(), s.end(), next.begin());
        } else {
            const FourSet& prev = out.back();
            std::array<bool, 4> taken{};
            std::vector<Color> fresh;
            for (Color c : s) {
                auto it = std::find(prev.begin(), prev.end(), c);
                if (it == prev.end()) {
                    fresh.push_back(c);
                } else {
                    const auto p = it - prev.begin();
                    next[p] = c;
                    taken[p] = true;
                }
            }
            std::size_t f = 0;
            for (int p = 0; p < 4; ++p)
                if (!taken[p])
                    next[p] = fresh[f++];
        }
        out.push_back(next);
    }
    return out;
}

namespace {

constexpr int pair_pos[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

ColorSet sorted_set(const FourSet& a)
{
    return make_color_set(std::vector<Color>(a.begin(), a.end()));
}

bool disjoint(const ColorPair& a, const ColorPair& b)
{
    return a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
}

// perm_table[p][i]: index of the image of subset i under position permutation p
struct PermTables {
    std::array<std::array<int, 6>, 24> image{};

    PermTables()
    {
        std::array<int, 4> p{0, 1, 2, 3};
        int n = 0;
        do {
            for (int i = 0; i < 6; ++i) {
                int a = p[pair_pos[i][0]];
                int b = p[pair_pos[i][1]];
                if (a > b)
                    std::swap(a, b);
                for (int j = 0; j < 6; ++j)
                    if (pair_pos[j][0] == a && pair_pos[j][1] == b)
                        image[n][i] = j;
            }
            ++n;
        } while (std::next_permutation(p.begin(), p.end()));
    }
};

const PermTables& perm_tables()
{
    static const PermTables t;
    return t;
}

} // namespace

std::array<ColorPair, 6> two_subsets(const ColorSet& universe)
{
    if (universe.size() != 4)
        fail(ErrorKind::InvalidInput, "universe must have exactly 4 colours");
    std::array<ColorPair, 6> out{};
    for (int i = 0; i < 6; ++i)
        out[i] = {universe[pair_pos[i][0]], universe[pair_pos[i][1]]};
    return out;
}

int two_subset_index(const ColorSet& universe, const ColorPair& pair)
{
    const auto subs = two_subsets(universe);
    ColorPair p = pair;
    if (p[0] > p[1])
        std::swap(p[0], p[1]);
    for (int i = 0; i < 6; ++i)
        if (subs[i] == p)
            return i;
    return -1;
}

bool PairRelation::contains(const ColorPair& c, const ColorPair& d) const
{
    const int i = two_subset_index(left, c);
    const int j = two_subset_index(right, d);
    return i >= 0 && j >= 0 && contains(i, j);
}

int PairRelation::size() const
{
    return std::popcount(bits);
}

std::array<int, 6> PairRelation::degrees() const
{
    std::array<int, 6> d{};
    for (int i = 0; i < 6; ++i)
        d[i] = std::popcount(fan(i));
    return d;
}

std::array<int, 6> PairRelation::column_degrees() const
{
    std::array<int, 6> d{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            d[j] += contains(i, j) ? 1 : 0;
    return d;
}

std::vector<std::pair<ColorPair, ColorPair>> PairRelation::pairs() const
{
    std::vector<std::pair<ColorPair, ColorPair>> out;
    const auto ls = two_subsets(left);
    const auto rs = two_subsets(right);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (contains(i, j))
                out.emplace_back(ls[i], rs[j]);
    return out;
}

PairRelation comp_sequence(const FourSetSequence& seq)
{
    if (seq.empty())
        fail(ErrorKind::InvalidInput, "comp needs at least one set");
    PairRelation rel;
    rel.left = sorted_set(seq.front());
    rel.right = sorted_set(seq.back());
    if (seq.size() == 1) {
        for (int i = 0; i < 6; ++i)
            rel.insert(i, i);
        return rel;
    }
    std::vector<std::array<ColorPair, 6>> subs;
    for (const auto& a : seq)
        subs.push_back(two_subsets(sorted_set(a)));
    // step[t][i]: 6-bit mask of subsets of A_{t+1} disjoint from subset i of A_t
    std::vector<std::array<unsigned, 6>> step(seq.size() - 1);
    for (std::size_t t = 0; t + 1 < seq.size(); ++t)
        for (int i = 0; i < 6; ++i) {
            unsigned m = 0;
            for (int j = 0; j < 6; ++j)
                if (disjoint(subs[t][i], subs[t + 1][j]))
                    m |= 1u << j;
            step[t][i] = m;
        }
    for (int i = 0; i < 6; ++i) {
        unsigned reach = 1u << i;
        for (const auto& s : step) {
            unsigned next = 0;
            for (int j = 0; j < 6; ++j)
                if (reach >> j & 1)
                    next |= s[j];
            reach = next;
        }
        rel.bits |= static_cast<std::uint64_t>(reach) << (6 * i);
    }
    return rel;
}

PairRelation comp_sequence_naive(const FourSetSequence& seq)
{
    if (seq.empty())
        fail(ErrorKind::InvalidInput, "comp needs at least one set");
    PairRelation rel;
    rel.left = sorted_set(seq.front());
    rel.right = sorted_set(seq.back());
    std::vector<std::array<ColorPair, 6>> subs;
    for (const auto& a : seq)
        subs.push_back(two_subsets(sorted_set(a)));
    std::function<void(std::size_t, int, int)> walk = [&](std::size_t t, int first, int cur) {
        if (t + 1 == seq.size()) {
            rel.insert(first, cur);
            return;
        }
        for (int j = 0; j < 6; ++j)
            if (disjoint(subs[t][cur], subs[t + 1][j]))
                walk(t + 1, first, j);
    };
    for (int i = 0; i < 6; ++i)
        walk(0, i, i);
    return rel;
}

int good_count(const PairRelation& comp)
{
    int n = 0;
    for (int i = 0; i < 6; ++i)
        n += comp.fan(i) == 0x3f ? 1 : 0;
    return n;
}

std::vector<ColorPair> good_subsets(const FourSetSequence& seq)
{
    const PairRelation rel = comp_sequence(seq);
    const auto subs = two_subsets(rel.left);
    std::vector<ColorPair> out;
    for (int i = 0; i < 6; ++i)
        if (rel.fan(i) == 0x3f)
            out.push_back(subs[i]);
    return out;
}

K22Report incomp_k22(const ColorSet& sx1, const ColorSet& sx2, const ColorSet& sy1, const ColorSet& sy2)
{
    for (const ColorSet* s : {&sx1, &sx2, &sy1, &sy2})
        if (s->size() != 4 || make_color_set(*s) != *s)
            fail(ErrorKind::InvalidInput, "K22 lists must be sorted 4-sets");
    K22Report r;
    r.incomp.left = sx1;
    r.incomp.right = sx2;
    const auto ls = two_subsets(sx1);
    const auto rs = two_subsets(sx2);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const ColorSet used = make_color_set({ls[i][0], ls[i][1], rs[j][0], rs[j][1]});
            const bool ok = set_difference(sy1, used).size() >= 2 && set_difference(sy2, used).size() >= 2;
            if (!ok)
                r.incomp.insert(i, j);
        }
    const auto rows = r.incomp.degrees();
    const auto cols = r.incomp.column_degrees();
    for (int i = 0; i < 6; ++i) {
        if (rows[i] == 6)
            r.bad_left.push_back(ls[i]);
        if (cols[i] == 6)
            r.bad_right.push_back(rs[i]);
    }
    r.defected = !r.bad_left.empty() && !r.bad_right.empty();
    return r;
}

SpecialTag classify_special(const PairRelation& rel)
{
    SpecialTag tag;
    if (rel.left.size() != 4 || rel.right.size() != 4)
        return tag;
    const auto deg = rel.degrees();
    auto sorted = deg;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != std::array<int, 6>{6, 5, 5, 3, 3, 1})
        return tag;
    std::vector<int> threes;
    for (int i = 0; i < 6; ++i)
        if (deg[i] == 3)
            threes.push_back(i);
    const int h = threes[0];
    const int g = threes[1];
    const unsigned hm = (1u << pair_pos[h][0]) | (1u << pair_pos[h][1]);
    const unsigned gm = (1u << pair_pos[g][0]) | (1u << pair_pos[g][1]);
    if (std::popcount(hm & gm) != 1)
        return tag;
    if (rel.fan(h) != rel.fan(g))
        return tag;
    unsigned common = 0xf;
    unsigned all = 0;
    for (int j = 0; j < 6; ++j)
        if (rel.fan(h) >> j & 1) {
            const unsigned jm = (1u << pair_pos[j][0]) | (1u << pair_pos[j][1]);
            common &= jm;
            all |= jm;
        }
    const bool star = std::popcount(common) == 1;
    const bool triangle = std::popcount(all) == 3;
    if (!star && !triangle)
        return tag;
    const unsigned sym = hm ^ gm;
    int s23 = -1, s14 = -1;
    for (int i = 0; i < 6; ++i) {
        const unsigned im = (1u << pair_pos[i][0]) | (1u << pair_pos[i][1]);
        if (im == sym)
            s23 = i;
        if (im == (0xfu & ~sym))
            s14 = i;
    }
    if (!((deg[s23] == 1 && deg[s14] == 6) || (deg[s23] == 6 && deg[s14] == 1)))
        return tag;
    tag.is_special = true;
    tag.has_p1 = star;
    tag.has_p2 = deg[s23] == 1;
    return tag;
}

std::uint64_t canonical_form(const PairRelation& rel)
{
    const auto& t = perm_tables();
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& pl : t.image)
        for (const auto& pr : t.image) {
            std::uint64_t b = 0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    if (rel.contains(i, j))
                        b |= std::uint64_t{1} << (6 * pl[i] + pr[j]);
            best = std::min(best, b);
        }
    return best;
}

bool isomorphic(const PairRelation& a, const PairRelation& b)
{
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

std::vector<ColorSet> pairs_of(const ColorSet& s)
{
    std::vector<ColorSet> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            out.push_back({s[i], s[j]});
    return out;
}

// Interior choices along a path whose ends are already fixed.
std::optional<std::vector<ColorSet>> chain(const ColorSet& start, const std::vector<ColorSet>& interior,
                                           const ColorSet& end)
{
    if (interior.empty()) {
        if (intersects(start, end))
            return std::nullopt;
        return std::vector<ColorSet>{};
    }
    std::vector<std::vector<ColorSet>> options;
    std::vector<std::vector<int>> parent;
    for (std::size_t t = 0; t < interior.size(); ++t) {
        std::vector<ColorSet> layer;
        std::vector<int> from;
        for (const auto& d : pairs_of(interior[t])) {
            int link = -1;
            if (t == 0) {
                link = intersects(start, d) ? -1 : 0;
            } else {
                for (std::size_t p = 0; p < options[t - 1].size() && link < 0; ++p)
                    if (!intersects(options[t - 1][p], d))
                        link = static_cast<int>(p);
            }
            if (link >= 0) {
                layer.push_back(d);
                from.push_back(link);
            }
        }
        if (layer.empty())
            return std::nullopt;
        options.push_back(std::move(layer));
        parent.push_back(std::move(from));
    }
    int at = -1;
    for (std::size_t p = 0; p < options.back().size() && at < 0; ++p)
        if (!intersects(options.back()[p], end))
            at = static_cast<int>(p);
    if (at < 0)
        return std::nullopt;
    std::vector<ColorSet> out(interior.size());
    for (std::size_t t = interior.size(); t-- > 0;) {
        out[t] = options[t][at];
        at = parent[t][at];
    }
    return out;
}

// Interior vertices of the path leaving `from` through `first` until a
// vertex of degree != 2 is hit; that vertex is returned as well.
std::pair<std::vector<Vertex>, Vertex> trace(const Graph& g, Vertex from, Vertex first)
{
    std::vector<Vertex> interior;
    Vertex prev = from;
    Vertex cur = first;
    while (g.degree(cur) == 2 && cur != from) {
        interior.push_back(cur);
        const auto& nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return {interior, cur};
}

void solve_core_piece(const Graph& piece, const std::vector<Vertex>& to_parent, const ListAssignment& lists,
                      Choice& choice)
{
    auto list_of = [&](Vertex local) -> const ColorSet& { return lists[to_parent[local]]; };
    auto fill = [&](const std::vector<Vertex>& locals, const std::vector<ColorSet>& sets) {
        for (std::size_t i = 0; i < locals.size(); ++i)
            choice[to_parent[locals[i]]] = sets[i];
    };
    if (piece.num_vertices() == 1) {
        choice[to_parent[0]] = {list_of(0)[0], list_of(0)[1]};
        return;
    }
    std::vector<Vertex> hubs;
    for (Vertex v = 0; v < piece.num_vertices(); ++v)
        if (piece.degree(v) == 3)
            hubs.push_back(v);
    if (hubs.empty()) {
        const auto [interior, back] = trace(piece, 0, piece.neighbors(0)[0]);
        std::vector<ColorSet> inner;
        for (Vertex x : interior)
            inner.push_back(list_of(x));
        for (const auto& c0 : pairs_of(list_of(0)))
            if (auto sets = chain(c0, inner, c0)) {
                choice[to_parent[0]] = c0;
                fill(interior, *sets);
                return;
            }
        throw std::logic_error("no (4:2) choice on an even cycle");
    }
    const Vertex u = hubs[0];
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::vector<ColorSet>> inner;
    Vertex v = -1;
    for (Vertex first : piece.neighbors(u)) {
        auto [interior, end] = trace(piece, u, first);
        v = end;
        std::vector<ColorSet> ls;
        for (Vertex x : interior)
            ls.push_back(list_of(x));
        paths.push_back(std::move(interior));
        inner.push_back(std::move(ls));
    }
    for (const auto& cu : pairs_of(list_of(u)))
        for (const auto& cv : pairs_of(list_of(v))) {
            std::vector<std::vector<ColorSet>> found;
            for (const auto& ls : inner) {
                auto sets = chain(cu, ls, cv);
                if (!sets)
                    break;
                found.push_back(std::move(*sets));
            }
            if (found.size() != paths.size())
                continue;
            choice[to_parent[u]] = cu;
            choice[to_parent[v]] = cv;
            for (std::size_t p = 0; p < paths.size(); ++p)
                fill(paths[p], found[p]);
            return;
        }
    throw std::logic_error("no (4:2) choice on a theta core");
}

} // namespace

Choice choose_42(const Graph& g, const ListAssignment& lists)
{
    const int n = g.num_vertices();
    if (static_cast<int>(lists.size()) != n)
        fail(ErrorKind::InvalidInput, "list assignment size does not match the graph");
    for (Vertex v = 0; v < n; ++v)
        if (lists[v].size() != 4) {
            Error e(ErrorKind::InvalidInput, "choose_42 needs lists of size exactly 4");
            e.vertex = v;
            throw e;
        }
    if (!is_2_choosable(g))
        fail(ErrorKind::Not2Choosable, "graph is not 2-choosable");
    const CorePeeling peel = peel_core(g);
    Choice choice(n);
    for (const auto& comp : connected_components(peel.core.graph)) {
        const InducedSubgraph piece = induced_subgraph(peel.core.graph, comp);
        std::vector<Vertex> to_parent;
        for (Vertex x : piece.to_parent)
            to_parent.push_back(peel.core.to_parent[x]);
        solve_core_piece(piece.graph, to_parent, lists, choice);
    }
    for (auto it = peel.removed.rbegin(); it != peel.removed.rend(); ++it) {
        const ColorSet free = set_difference(lists[it->first], choice[it->second]);
        choice[it->first] = {free[0], free[1]};
    }
    return choice;
}

ListAssignment blowup_lists(const ListAssignment& lists, int k)
{
    if (k < 1)
        fail(ErrorKind::InvalidInput, "block width must be positive");
    ListAssignment out(lists.size());
    for (std::size_t v = 0; v < lists.size(); ++v)
        for (Color c : lists[v])
            for (int i = 0; i < k; ++i)
                out[v].push_back(k * c + i);
    return out;
}

std::vector<Color> blowup_reduce(const Graph& g, int m, int k, const ListAssignment& lists, const Choice& choice)
{
    const int n = g.num_vertices();
    if (k < 1 || k % 2 == 0 || m < 1)
        fail(ErrorKind::InvalidInput, "need m >= 1 and odd k");
    if (static_cast<int>(lists.size()) != n || static_cast<int>(choice.size()) != n)
        fail(ErrorKind::InvalidInput, "lists and choice must cover every vertex");
    std::vector<Color> f(n);
    for (Vertex v = 0; v < n; ++v) {
        Color pick = 0;
        bool found = false;
        for (Color c : lists[v]) {
            const auto lo = std::lower_bound(choice[v].begin(), choice[v].end(), k * c);
            const auto hi = std::lower_bound(choice[v].begin(), choice[v].end(), k * c + k);
            if (2 * (hi - lo) > k) {
                pick = c;
                found = true;
                break;
            }
        }
        if (!found) {
            Error e(ErrorKind::NoMajorityBlock, "no colour block holds a majority at vertex " + std::to_string(v));
            e.vertex = v;
            throw e;
        }
        f[v] = pick;
    }
    return f;
}

} // namespace abchoice
