#include "abchoice/acceptance.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>

#include "abchoice/corpus.hpp"
#include "abchoice/error.hpp"
#include "abchoice/exact_oracle.hpp"
#include "abchoice/gadgets.hpp"
#include "abchoice/graph_core.hpp"
#include "abchoice/io.hpp"
#include "abchoice/kernel_choice.hpp"
#include "abchoice/orientation.hpp"
#include "abchoice/random_choice.hpp"
#include "abchoice/calculus_checks.hpp"
#include "abchoice/strong_partition.hpp"
#include "abchoice/two_choice.hpp"

namespace abchoice {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr std::uint64_t big_budget = 20'000'000'000ULL;

OracleOptions oracle(Execution exec, Enumeration e = Enumeration::Reduced)
{
    OracleOptions o;
    o.budget = big_budget;
    o.enumeration = e;
    o.execution = exec;
    return o;
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            if (!pass)
                detail << "; ";
            pass = false;
            detail << "FAILED " << what;
        }
    }
    void note(const std::string& s)
    {
        if (detail.tellp() > 0)
            detail << "; ";
        detail << s;
    }
};

std::string graph_text(const Graph& g)
{
    return graph_to_json(g).dump();
}

// 1 -------------------------------------------------------------------------

void oracle_cross_check(Outcome& out, Execution)
{
    const auto t0 = Clock::now();
    std::uint64_t runs = 0, bad = 0, graphs = 0, orientations = 0;
    std::uint64_t counter = 0;
    for (const Graph& g : connected_graphs_up_to(5)) {
        ++graphs;
        std::vector<Orientation> orients;
        for (int d = 0; d < g.num_vertices(); ++d)
            if (auto o = orient_degeneracy(g, d)) {
                orients.push_back(*o);
                break;
            }
        const auto dens = density_M(g).ceil();
        if (auto o = orient_bounded_outdegree(g, static_cast<int>(dens)); o && !odd_directed_cycle(o->digraph()))
            orients.push_back(*o);
        for (const auto& o : orients) {
            ++orientations;
            const Digraph dg = o.digraph();
            for (int k : {1, 2}) {
                const int size = k * (o.max_out_degree() + 1);
                Rng rng(sub_seed(0xC1, counter++));
                for (int i = 0; i < 200; ++i) {
                    const auto lists = random_lists(rng, g.num_vertices(), size, 2 * size);
                    ++runs;
                    bool ok = false;
                    try {
                        ok = verify_choice(g, lists, kernel_multichoice(dg, k, lists), k);
                    } catch (const Error&) {
                    }
                    if (!ok && bad++ == 0)
                        out.note("first failure on " + graph_text(g));
                }
            }
        }
    }
    const double secs = since(t0);
    out.note(std::to_string(graphs) + " graphs, " + std::to_string(orientations) + " orientations, " +
             std::to_string(runs) + " runs, " + std::to_string(bad) + " unverified");
    out.check(bad == 0, "kernel_multichoice produced an unverified choice");
    out.check(secs < 60, "runtime limit 60 s");
}

// 2 -------------------------------------------------------------------------

void decision_vs_oracle(Outcome& out, Execution exec)
{
    const auto t0 = Clock::now();
    int graphs = 0, disagree = 0, positive = 0;
    for (const Graph& g : connected_graphs_up_to(6)) {
        ++graphs;
        const bool fast = is_2_choosable(g);
        const bool slow = is_ab_choosable(g, 2, 1, oracle(exec)).choosable;
        positive += slow;
        if (fast != slow && disagree++ == 0)
            out.note("disagreement on " + graph_text(g));
    }
    const double secs = since(t0);
    out.note(std::to_string(graphs) + " graphs, " + std::to_string(positive) + " 2-choosable, " +
             std::to_string(disagree) + " disagreements");
    out.check(disagree == 0, "decision differs from oracle");
    out.check(secs < 600, "runtime limit 10 min");
}

// 3 -------------------------------------------------------------------------

struct Sweep {
    std::uint64_t visited = 0;
    std::uint64_t failed = 0;
};

Sweep sweep(const Graph& g, int size, Enumeration e, int palette,
            const std::function<bool(const ListAssignment&)>& ok)
{
    Sweep s;
    for_each_assignment(
        g, std::vector<int>(g.num_vertices(), size), e,
        [&](const ListAssignment& lists) {
            ++s.visited;
            bool good = false;
            try {
                good = ok(lists);
            } catch (const Error&) {
            }
            s.failed += !good;
            return true;
        },
        big_budget, palette);
    return s;
}

void even_cycles(Outcome& out, Execution exec)
{
    for (int n : {4, 6, 8})
        for (int k : {1, 2}) {
            const auto r = is_ab_choosable(make_cycle(n), 2 * k, k, oracle(exec));
            out.check(r.choosable, "C" + std::to_string(n) + " not (" + std::to_string(2 * k) + ":" +
                                       std::to_string(k) + ")-choosable per oracle");
        }
    out.note("oracle: C4, C6, C8 are (2:1) and (4:2)-choosable");

    struct Case {
        int n, k;
        Enumeration e;
        int palette;
        const char* scope;
    };
    const Case cases[] = {
        {4, 1, Enumeration::Canonical, 0, "all canonical"},
        {4, 2, Enumeration::Canonical, 0, "all canonical"},
        {6, 1, Enumeration::Canonical, 0, "all canonical"},
        {6, 2, Enumeration::Reduced, 0, "reduced family"},
        {6, 2, Enumeration::Canonical, 7, "canonical with <= 7 colours"},
    };
    for (const auto& c : cases) {
        const Graph g = make_cycle(c.n);
        const Digraph d = make_directed_cycle(c.n);
        const Sweep s = sweep(g, 2 * c.k, c.e, c.palette, [&](const ListAssignment& lists) {
            return verify_choice(g, lists, kernel_multichoice(d, c.k, lists), c.k);
        });
        std::ostringstream line;
        line << "C" << c.n << " k=" << c.k << " " << c.scope << ": " << s.visited << " assignments, " << s.failed
             << " failures";
        out.note(line.str());
        out.check(s.failed == 0, "kernel_multichoice on C" + std::to_string(c.n));
    }
}

// 4 -------------------------------------------------------------------------

bool has_proper_list_colouring(const Graph& g, const ListAssignment& lists)
{
    const int n = g.num_vertices();
    std::vector<Color> col(n);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) {
            for (auto [a, b] : g.edges())
                if (col[a] == col[b])
                    return false;
            return true;
        }
        for (Color c : lists[v]) {
            col[v] = c;
            if (rec(v + 1))
                return true;
        }
        return false;
    };
    return rec(0);
}

void theta_42(Outcome& out, Execution exec)
{
    const Graph t222 = gen_theta(2, 2, 2);
    const Graph t224 = gen_theta(2, 2, 4);
    const auto r222 = is_ab_choosable(t222, 4, 2, oracle(exec, Enumeration::Canonical));
    out.check(r222.choosable, "Theta(2,2,2) not (4:2)-choosable");
    out.note("Theta(2,2,2) oracle over " + std::to_string(r222.assignments) + " canonical assignments");
    const auto r224 = is_ab_choosable(t224, 4, 2, oracle(exec));
    out.check(r224.choosable, "Theta(2,2,4) not (4:2)-choosable");
    out.note("Theta(2,2,4) oracle over " + std::to_string(r224.assignments) + " reduced assignments");

    auto chooser = [](const Graph& g) {
        return [gp = &g](const ListAssignment& lists) { return verify_choice(*gp, lists, choose_42(*gp, lists), 2); };
    };
    struct Case {
        const Graph* g;
        const char* name;
        Enumeration e;
        int palette;
        const char* scope;
    };
    const Case cases[] = {
        {&t222, "Theta(2,2,2)", Enumeration::Canonical, 0, "all canonical"},
        {&t224, "Theta(2,2,4)", Enumeration::Reduced, 0, "reduced family"},
        {&t224, "Theta(2,2,4)", Enumeration::Canonical, 6, "canonical with <= 6 colours"},
    };
    for (const auto& c : cases) {
        const Sweep s = sweep(*c.g, 4, c.e, c.palette, chooser(*c.g));
        std::ostringstream line;
        line << "choose_42 on " << c.name << " " << c.scope << ": " << s.visited << " assignments, " << s.failed
             << " failures";
        out.note(line.str());
        out.check(s.failed == 0, std::string("choose_42 on ") + c.name);
    }

    const Graph k33 = make_complete_bipartite(3, 3);
    const auto r = is_ab_choosable(k33, 2, 1, oracle(exec));
    out.check(!r.choosable && r.bad_assignment, "K3,3 reported 2-choosable");
    if (r.bad_assignment) {
        bool sizes = true;
        for (const auto& l : *r.bad_assignment)
            sizes = sizes && l.size() == 2;
        const bool certified = sizes && !has_proper_list_colouring(k33, *r.bad_assignment);
        out.check(certified, "K3,3 witness not certified");
        out.note("K3,3 witness " + lists_to_json(*r.bad_assignment).dump() + " certified by brute force");
    }
}

// 5 -------------------------------------------------------------------------

void calculus(Outcome& out, Execution)
{
    const auto a = check_defected_k22(8);
    out.note("defected K2,2 trichotomy: " + a.summary());
    out.check(a.ok() && a.instances > 0, "defected K2,2 trichotomy");
    const auto b = check_repeat_identity(8);
    out.note("repeat identity: " + b.summary());
    out.check(b.ok() && b.instances > 0, "repeat identity");
    const auto c = check_subsequence_monotonicity(4, 6, 10000, 0x56);
    out.note("subsequence monotonicity: " + c.summary());
    out.check(c.ok() && c.instances > 0, "subsequence monotonicity");
    const auto d = check_odd_sequences(5, 8);
    out.note("odd sequence disjunction: " + d.summary());
    out.check(d.ok() && d.instances > 0, "odd sequence disjunction");
}

// 6 -------------------------------------------------------------------------

void ch_values(Outcome& out, Execution exec)
{
    struct Case {
        const char* name;
        Graph g;
    };
    const Case cases[] = {
        {"K2,4", make_complete_bipartite(2, 4)},
        {"K2,4'", gen_k24_prime()},
        {"C5", make_cycle(5)},
        {"hamilton-clique(1,2)", gen_hamilton_clique(1, 2)},
    };
    for (const auto& c : cases) {
        const auto t0 = Clock::now();
        const int ch = ch_k(c.g, 1, oracle(exec));
        const double secs = since(t0);
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "ch(" << c.name << ")=" << ch << " in " << secs << " s";
        out.note(line.str());
        out.check(ch == 3, std::string("ch(") + c.name + ") != 3");
        out.check(secs < 300, std::string("runtime limit for ") + c.name);
    }
}

// 7 -------------------------------------------------------------------------

std::uint64_t count_colourings_exhaustively(const Graph& g, int colours)
{
    const int n = g.num_vertices();
    std::vector<Color> col(n, 0);
    std::uint64_t proper = 0;
    while (true) {
        bool ok = true;
        for (auto [a, b] : g.edges())
            if (col[a] == col[b]) {
                ok = false;
                break;
            }
        proper += ok;
        int i = 0;
        while (i < n && ++col[i] == colours)
            col[i++] = 0;
        if (i == n)
            break;
    }
    return proper;
}

void strong_lower(Outcome& out, Execution)
{
    const auto t0 = Clock::now();
    const auto g2 = gen_strong_lower(2);
    const Graph h2 = augment(g2.graph, g2.parts);
    const std::uint64_t proper = count_colourings_exhaustively(h2, 3);
    out.check(h2.num_vertices() == 9 && g2.graph.max_degree() == 2, "d=2 gadget shape");
    out.check(proper == 0, "d=2 augmentation has a proper 3-colouring");
    out.check(!find_coloring(h2, 3, big_budget), "d=2 backtracking found a 3-colouring");
    out.note("d=2: 3^9 colourings scanned, " + std::to_string(proper) + " proper");

    const auto g3 = gen_strong_lower(3);
    const Graph h3 = augment(g3.graph, g3.parts);
    out.check(h3.num_vertices() == 15 && g3.graph.max_degree() == 3, "d=3 gadget shape");
    out.check(!find_coloring(h3, 5, big_budget), "d=3 augmentation has a proper 5-colouring");
    out.note("d=3: complete backtracking finds no 5-colouring of the 15-vertex augmentation");
    out.check(since(t0) < 300, "runtime limit 5 min");
}

// 8 -------------------------------------------------------------------------

std::vector<ColorSet> subsets_of_size(int size, int colours)
{
    std::vector<ColorSet> out;
    ColorSet cur;
    std::function<void(Color)> rec = [&](Color from) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (Color c = from; c < colours; ++c) {
            cur.push_back(c);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// ordered families of `count` sets of size `size`, the first being {0..size-1}
void for_each_family(int count, int size, int colours, const std::function<void(const SetFamily&)>& f)
{
    const auto all = subsets_of_size(size, colours);
    SetFamily fam{subsets_of_size(size, size).front()};
    std::function<void()> rec = [&] {
        if (static_cast<int>(fam.size()) == count) {
            f(fam);
            return;
        }
        for (const auto& s : all) {
            fam.push_back(s);
            rec();
            fam.pop_back();
        }
    };
    rec();
}

void partitions(Outcome& out, Execution)
{
    CheckTally split_ex, part_ex, split_rand, part_rand;
    auto describe = [](const SetFamily& f) { return set_family_to_json(f).dump(); };
    for (int s = 2; s <= 4; ++s)
        for (int k = 1; k < s; ++k)
            for_each_family(s, s, 8, [&](const SetFamily& f) {
                bool ok = false;
                try {
                    ok = check_split(f, split_family(f, k, s - k), k, s - k);
                } catch (const std::exception&) {
                }
                split_ex.record(ok, [&] { return describe(f); });
            });
    for (int k = 1; k <= 4; ++k)
        for (int m = 1; k * m <= 4; ++m)
            for_each_family(k * m, k * m, 8, [&](const SetFamily& f) {
                bool ok = false;
                try {
                    ok = check_partition(f, partition_family(f, k, m), k, m);
                } catch (const std::exception&) {
                }
                part_ex.record(ok, [&] { return describe(f); });
            });
    Rng rng(0x78);
    for (int i = 0; i < 10000; ++i) {
        const int s = 2 + static_cast<int>(uniform_below(rng, 5));
        const int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(s - 1)));
        const int palette = s + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(13 - s)));
        SetFamily f;
        for (int j = 0; j < s; ++j)
            f.push_back(random_color_set(rng, s, palette));
        bool ok = false;
        try {
            ok = check_split(f, split_family(f, k, s - k), k, s - k);
        } catch (const std::exception&) {
        }
        split_rand.record(ok, [&] { return describe(f); });
    }
    for (int i = 0; i < 10000; ++i) {
        int k, m;
        do {
            k = 1 + static_cast<int>(uniform_below(rng, 6));
            m = 1 + static_cast<int>(uniform_below(rng, 6));
        } while (k * m > 6);
        const int s = k * m;
        const int palette = s + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(13 - s)));
        SetFamily f;
        for (int j = 0; j < s; ++j)
            f.push_back(random_color_set(rng, s, palette));
        bool ok = false;
        try {
            ok = check_partition(f, partition_family(f, k, m), k, m);
        } catch (const std::exception&) {
        }
        part_rand.record(ok, [&] { return describe(f); });
    }
    out.note("split exhaustive: " + split_ex.summary());
    out.note("partition exhaustive: " + part_ex.summary());
    out.note("split random: " + split_rand.summary());
    out.note("partition random: " + part_rand.summary());
    out.check(split_ex.ok() && part_ex.ok() && split_rand.ok() && part_rand.ok(), "disjointness contract");
}

// 9 -------------------------------------------------------------------------

void chordal(Outcome& out, Execution exec)
{
    int graphs = 0;
    std::uint64_t constructed = 0, failed = 0;
    std::uint64_t counter = 0;
    for (const Graph& g : connected_graphs_up_to(5)) {
        if (!perfect_elimination_ordering(g))
            continue;
        ++graphs;
        const int w = clique_number(g);
        for (int k : {1, 2}) {
            const int ch = ch_k(g, k, oracle(exec));
            out.check(ch == k * w, "ch_" + std::to_string(k) + " != k*omega on " + graph_text(g));
            auto ok = [&](const ListAssignment& lists) {
                return verify_choice(g, lists, choose_chordal(g, k, lists), k);
            };
            const Sweep s = sweep(g, k * w, Enumeration::Reduced, 0, ok);
            constructed += s.visited;
            failed += s.failed;
            Rng rng(sub_seed(0xC9, counter++));
            for (int i = 0; i < 200; ++i) {
                const auto lists = random_lists(rng, g.num_vertices(), k * w, 2 * k * w);
                bool good = false;
                try {
                    good = ok(lists);
                } catch (const Error&) {
                }
                ++constructed;
                failed += !good;
            }
        }
    }
    out.note(std::to_string(graphs) + " chordal graphs; ch_k = k*omega for k = 1, 2; choose_chordal on " +
             std::to_string(constructed) + " assignments, " + std::to_string(failed) + " failures");
    out.check(failed == 0, "choose_chordal");
}

// 10 ------------------------------------------------------------------------

struct RandomInstance {
    std::string name;
    std::string method;
    Graph graph;
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> sizes;
    int k;
    ListAssignment lists;
    std::uint64_t seed;
};

std::vector<RandomInstance> random_instances()
{
    std::vector<RandomInstance> out;
    auto lists_for = [](int n, int size, int palette, std::uint64_t seed) {
        Rng rng(seed);
        return random_lists(rng, n, size, palette);
    };
    {
        RandomInstance r{"c6-bipartite", "partition", make_cycle(6), {{0, 2, 4}, {1, 3, 5}}, {}, 2, {}, 101};
        r.lists = lists_for(6, 6, 10, 1);
        out.push_back(r);
    }
    {
        Graph p = make_petersen();
        const auto col = *find_coloring(p, 3);
        std::vector<std::vector<Vertex>> classes(3);
        for (Vertex v = 0; v < p.num_vertices(); ++v)
            classes[col[v]].push_back(v);
        RandomInstance r{"petersen", "partition", p, classes, {}, 1, {}, 102};
        r.lists = lists_for(10, 6, 12, 2);
        out.push_back(r);
    }
    {
        const std::vector<int> sizes{3, 3, 3};
        RandomInstance r{"k333", "partition", make_complete_multipartite(sizes), {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
                         {}, 2, {}, 103};
        r.lists = lists_for(9, 9, 14, 3);
        out.push_back(r);
    }
    struct Multi {
        std::vector<int> sizes;
        int k, list_size, palette;
    };
    const Multi multi[] = {
        {{2, 2, 2, 2, 2, 2}, 1, 16, 24}, {{3, 3, 3, 3}, 1, 8, 16}, {{2, 2, 2, 2}, 2, 12, 16}, {{4, 4, 4}, 1, 6, 12}};
    std::uint64_t seed = 201;
    for (const auto& [sizes, k, list_size, palette] : multi) {
        RandomInstance r;
        r.name = "multipartite";
        for (int s : sizes)
            r.name += "-" + std::to_string(s);
        r.method = "multipartite";
        r.graph = make_complete_multipartite(sizes);
        r.sizes = sizes;
        r.k = k;
        r.seed = seed;
        r.lists = lists_for(r.graph.num_vertices(), list_size, palette, seed++);
        out.push_back(r);
    }
    {
        RandomInstance r{"c5-embedded", "embed", make_cycle(5), {}, {}, 1, {}, 301};
        r.lists = lists_for(5, 6, 10, 4);
        out.push_back(r);
    }
    return out;
}

Json run_random_instances(Execution exec, bool& all_ok, std::string& problem)
{
    Json report = Json::array();
    all_ok = true;
    for (const auto& inst : random_instances()) {
        const RandomBudget budget{inst.seed, 64};
        Json j;
        j["name"] = inst.name;
        j["method"] = inst.method;
        j["seed"] = inst.seed;
        j["k"] = inst.k;
        try {
            RandomResult r;
            if (inst.method == "partition")
                r = choose_by_partition({inst.graph, inst.classes}, inst.k, inst.lists, budget, exec);
            else if (inst.method == "multipartite")
                r = choose_multipartite(inst.sizes, inst.k, inst.lists, budget, exec);
            else
                r = embed_and_choose(inst.graph, inst.k, inst.lists, budget, exec);
            const bool ok = verify_choice(inst.graph, inst.lists, r.choice, inst.k) && r.attempts <= 64;
            if (!ok && all_ok) {
                all_ok = false;
                problem = inst.name + " returned an unverified choice";
            }
            j["attempts"] = r.attempts;
            j["choice"] = lists_to_json(r.choice);
        } catch (const Error& e) {
            if (all_ok) {
                all_ok = false;
                problem = inst.name + ": " + e.what();
            }
            j["error"] = e.what();
        }
        report.push_back(j);
    }
    return report;
}

void randomized(Outcome& out, Execution)
{
    bool ok1 = false, ok2 = false, ok3 = false;
    std::string p1, p2, p3;
    const std::string a = run_random_instances(Execution::Serial, ok1, p1).dump();
    const std::string b = run_random_instances(Execution::Serial, ok2, p2).dump();
    const std::string c = run_random_instances(Execution::Parallel, ok3, p3).dump();
    out.check(ok1, p1);
    out.check(a == b, "repeated serial runs differ");
    out.check(a == c, "parallel run differs from serial");
    int max_attempts = 0;
    const Json j = Json::parse(a);
    for (const auto& inst : j)
        if (inst.contains("attempts"))
            max_attempts = std::max(max_attempts, inst["attempts"].get<int>());
    out.note(std::to_string(j.size()) + " instances verified, at most " + std::to_string(max_attempts) +
             " attempts, output identical across serial and parallel runs");
}

// 11 ------------------------------------------------------------------------

void blowup(Outcome& out, Execution exec)
{
    int graphs = 0, choosable63 = 0;
    std::uint64_t fed = 0, failed = 0;
    for (const Graph& g : connected_graphs_up_to(4)) {
        ++graphs;
        const bool c63 = is_ab_choosable(g, 6, 3, oracle(exec)).choosable;
        const bool c21 = is_ab_choosable(g, 2, 1, oracle(exec)).choosable;
        choosable63 += c63;
        out.check(!c63 || c21, "(6:3)-choosable but not 2-choosable: " + graph_text(g));
        for_each_assignment(
            g, std::vector<int>(g.num_vertices(), 2), Enumeration::Canonical,
            [&](const ListAssignment& s) {
                const ListAssignment t = blowup_lists(s, 3);
                const auto choice = find_choice(g, t, 3, big_budget);
                if (!choice)
                    return true;
                ++fed;
                bool ok = false;
                try {
                    const auto f = blowup_reduce(g, 1, 3, s, *choice);
                    ok = true;
                    for (Vertex v = 0; v < g.num_vertices(); ++v)
                        ok = ok && std::binary_search(s[v].begin(), s[v].end(), f[v]);
                    for (auto [a, b] : g.edges())
                        ok = ok && f[a] != f[b];
                } catch (const Error&) {
                }
                failed += !ok;
                return true;
            },
            big_budget);
    }
    out.note(std::to_string(graphs) + " graphs, " + std::to_string(choosable63) +
             " (6:3)-choosable and all of them 2-choosable; " + std::to_string(fed) + " (6:3) choices reduced, " +
             std::to_string(failed) + " failures");
    out.check(failed == 0, "blowup_reduce");
}

struct Entry {
    const char* title;
    void (*run)(Outcome&, Execution);
};

const Entry entries[] = {
    {"kernel chooser on odd-cycle-free orientations (n <= 5)", oracle_cross_check},
    {"2-choosability decision matches the oracle (n <= 6)", decision_vs_oracle},
    {"even cycles are (2k:k)-choosable, constructively", even_cycles},
    {"Theta(2,2,2), Theta(2,2,4) (4:2)-choosable; K3,3 not 2-choosable", theta_42},
    {"compatibility calculus identities", calculus},
    {"ch(K2,4) = ch(K2,4') = ch(C5) = ch(hamilton-clique(1,2)) = 3", ch_values},
    {"strong lower-bound gadgets are not (2d-1)-colourable at d = 2, 3", strong_lower},
    {"split/partition disjointness contracts", partitions},
    {"chordal graphs: ch_k = k*omega (n <= 5, k = 1, 2)", chordal},
    {"randomized choosers verified and reproducible", randomized},
    {"(6:3)-choosable implies 2-choosable (n <= 4); blow-up reduction", blowup},
};

} // namespace

int criterion_count()
{
    return static_cast<int>(std::size(entries));
}

std::string criterion_title(int id)
{
    if (id < 1 || id > criterion_count())
        fail(ErrorKind::InvalidInput, "no criterion " + std::to_string(id));
    return entries[id - 1].title;
}

CriterionResult run_criterion(int id, Execution exec)
{
    CriterionResult r;
    r.id = id;
    r.title = criterion_title(id);
    Outcome out;
    const auto t0 = Clock::now();
    try {
        entries[id - 1].run(out, exec);
    } catch (const std::exception& e) {
        out.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = since(t0);
    r.pass = out.pass;
    r.detail = out.detail.str();
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"oracle-cross-check", "two-choice-calculus", "strong-partitions",
                                                   "gadget-verify"};
    return names;
}

std::vector<int> suite_criteria(const std::string& name)
{
    if (name == "oracle-cross-check")
        return {1, 2, 3, 6, 9, 10, 11};
    if (name == "two-choice-calculus")
        return {4, 5};
    if (name == "strong-partitions")
        return {8};
    if (name == "gadget-verify")
        return {7};
    fail(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
}

std::string random_instance_report(Execution exec)
{
    bool ok = false;
    std::string problem;
    return run_random_instances(exec, ok, problem).dump(2);
}

} // namespace abchoice
