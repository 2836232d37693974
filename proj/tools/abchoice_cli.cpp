#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "abchoice/acceptance.hpp"
#include "abchoice/error.hpp"
#include "abchoice/exact_oracle.hpp"
#include "abchoice/gadgets.hpp"
#include "abchoice/graph_core.hpp"
#include "abchoice/io.hpp"
#include "abchoice/kernel_choice.hpp"
#include "abchoice/orientation.hpp"
#include "abchoice/random_choice.hpp"
#include "abchoice/strong_partition.hpp"
#include "abchoice/two_choice.hpp"

using namespace abchoice;

namespace {

constexpr int exit_positive = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct Options {
    std::string graph, digraph, lists, parts, sizes, out, dot;
    std::string enumeration = "reduced";
    std::string method = "exact";
    std::string family;
    int a = 2, b = 1, k = 1, m = 1, d = 0, c = 1, n = 2;
    std::uint64_t seed = 0;
    int max_attempts = 64;
    std::uint64_t budget = 0;
    bool parallel = false;
    bool acyclic = false;
};

std::uint64_t default_node_budget()
{
    if (const char* env = std::getenv("ABCHOICE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidInput, "ABCHOICE_BUDGET is not a number");
        }
    }
    return default_budget;
}

class Runner {
public:
    explicit Runner(Options& o) : o_(o) {}

    int check();
    int chk();
    int choose();
    int kernel_verb();
    int orient();
    int core_verb();
    int two_choosable();
    int gadget();
    int strong();
    int suite(const std::string& name);

private:
    Options& o_;

    std::uint64_t budget() const { return o_.budget ? o_.budget : default_node_budget(); }
    Execution exec() const { return o_.parallel ? Execution::Parallel : Execution::Serial; }

    OracleOptions oracle() const
    {
        OracleOptions opt;
        opt.budget = budget();
        opt.execution = exec();
        if (o_.enumeration == "reduced")
            opt.enumeration = Enumeration::Reduced;
        else if (o_.enumeration == "canonical")
            opt.enumeration = Enumeration::Canonical;
        else if (o_.enumeration == "exhaustive")
            opt.enumeration = Enumeration::Exhaustive;
        else
            fail(ErrorKind::InvalidInput, "unknown enumeration " + o_.enumeration);
        return opt;
    }

    LabeledGraph graph() const
    {
        if (o_.graph.empty())
            fail(ErrorKind::InvalidInput, "--graph is required");
        return graph_from_json(read_json_file(o_.graph));
    }

    ListAssignment lists(const LabeledGraph& g) const
    {
        if (o_.lists.empty())
            fail(ErrorKind::InvalidInput, "--lists is required");
        return lists_from_json(read_json_file(o_.lists), g);
    }

    void emit(const Json& j) const
    {
        const std::string text = j.dump(2) + "\n";
        if (o_.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(o_.out);
        if (!f || !(f << text))
            fail(ErrorKind::InvalidInput, "cannot write " + o_.out);
    }

    void emit_dot(const Graph& g, const std::vector<Label>& labels, const Parts& parts = {}) const
    {
        if (o_.dot.empty())
            return;
        std::ofstream f(o_.dot);
        if (!f || !(f << graph_to_dot(g, labels, parts)))
            fail(ErrorKind::InvalidInput, "cannot write " + o_.dot);
    }
};

int Runner::check()
{
    const LabeledGraph g = graph();
    Json out;
    OracleResult r;
    if (!o_.sizes.empty()) {
        const auto f = sizes_from_string(o_.sizes, g);
        r = is_f_choosable(g.graph, f, oracle());
        Json fj = Json::object();
        for (Vertex v = 0; v < g.graph.num_vertices(); ++v)
            fj[std::to_string(g.labels[v])] = f[v];
        out["query"] = {{"f", fj}};
    } else {
        r = is_ab_choosable(g.graph, o_.a, o_.b, oracle());
        out["query"] = {{"a", o_.a}, {"b", o_.b}};
    }
    out["enumeration"] = o_.enumeration;
    out["choosable"] = r.choosable;
    out["assignments"] = r.assignments;
    if (!r.choosable)
        out["witness"] = witness_to_json(r.witness(), g.labels);
    emit(out);
    return r.choosable ? exit_positive : exit_negative;
}

int Runner::chk()
{
    const LabeledGraph g = graph();
    const int value = ch_k(g.graph, o_.k, oracle());
    emit(value);
    return exit_positive;
}

int Runner::choose()
{
    const LabeledGraph g = graph();
    const ListAssignment l = lists(g);
    Json out;
    out["method"] = o_.method;
    std::optional<Choice> choice;
    int b = o_.k;
    if (o_.method == "exact") {
        choice = find_choice(g.graph, l, o_.k, budget());
    } else if (o_.method == "kernel") {
        const Rational density = density_M(g.graph);
        std::optional<Orientation> orient =
            orient_bounded_outdegree(g.graph, static_cast<int>(std::max<std::int64_t>(1, density.ceil())));
        if (orient && odd_directed_cycle(orient->digraph()))
            orient.reset();
        for (int d = 0; !orient; ++d)
            orient = orient_degeneracy(g.graph, d);
        out["max_outdegree"] = orient->max_out_degree();
        choice = choose_via_orientation(*orient, o_.k, l);
    } else if (o_.method == "chordal") {
        choice = choose_chordal(g.graph, o_.k, l);
    } else if (o_.method == "brooks") {
        choice = choose_brooks(g.graph, o_.k, l);
    } else if (o_.method == "42") {
        b = 2;
        choice = choose_42(g.graph, l);
    } else if (o_.method == "random") {
        out["seed"] = o_.seed;
        const auto r = embed_and_choose(g.graph, o_.k, l, RandomBudget{o_.seed, o_.max_attempts}, exec(), budget());
        out["attempts"] = r.attempts;
        choice = r.choice;
    } else {
        fail(ErrorKind::InvalidInput, "unknown method " + o_.method);
    }
    out["b"] = b;
    if (!choice) {
        out["choice"] = nullptr;
        emit(out);
        return exit_negative;
    }
    if (!verify_choice(g.graph, l, *choice, b))
        throw std::logic_error("chooser returned an invalid choice");
    out["choice"] = lists_to_json(*choice, g.labels);
    emit(out);
    return exit_positive;
}

int Runner::kernel_verb()
{
    if (o_.digraph.empty())
        fail(ErrorKind::InvalidInput, "--digraph is required");
    const LabeledDigraph d = digraph_from_json(read_json_file(o_.digraph));
    Json out;
    try {
        Json k = Json::array();
        for (Vertex v : kernel(d.digraph))
            k.push_back(d.labels[v]);
        out["kernel"] = k;
        emit(out);
        return exit_positive;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OddCycle)
            throw;
        Json c = Json::array();
        for (int v : e.witness)
            c.push_back(d.labels[v]);
        out["kernel"] = nullptr;
        out["odd_cycle"] = c;
        emit(out);
        return exit_negative;
    }
}

int Runner::orient()
{
    const LabeledGraph g = graph();
    Json out;
    const Rational density = density_M(g.graph);
    out["density"] = density.str();
    const int d = o_.d > 0 ? o_.d : static_cast<int>(std::max<std::int64_t>(1, density.ceil()));
    std::optional<Orientation> o;
    if (o_.acyclic) {
        if (o_.d > 0) {
            o = orient_degeneracy(g.graph, d);
        } else {
            for (int dd = 0; !o; ++dd)
                o = orient_degeneracy(g.graph, dd);
        }
    } else {
        o = orient_bounded_outdegree(g.graph, d);
    }
    out["kind"] = o_.acyclic ? "acyclic" : "bounded-outdegree";
    if (!o) {
        out["orientation"] = nullptr;
        emit(out);
        return exit_negative;
    }
    out["orientation"] = orientation_to_json(*o, g.labels);
    emit(out);
    return exit_positive;
}

int Runner::core_verb()
{
    const LabeledGraph g = graph();
    const auto c = core(g.graph);
    std::vector<Label> labels;
    for (Vertex v : c.to_parent)
        labels.push_back(g.labels[v]);
    Json out;
    out["core"] = graph_to_json(c.graph, labels);
    out["class"] = is_connected(g.graph) ? to_string(classify_core(g.graph)) : "disconnected";
    emit(out);
    emit_dot(c.graph, labels);
    return exit_positive;
}

int Runner::two_choosable()
{
    const LabeledGraph g = graph();
    Json comps = Json::array();
    bool all = true;
    for (const auto& comp : connected_components(g.graph)) {
        const auto sub = induced_subgraph(g.graph, comp);
        const CoreClass cls = classify_core(sub.graph);
        Json vs = Json::array();
        for (Vertex v : comp)
            vs.push_back(g.labels[v]);
        const bool ok = cls.tag != CoreClass::Tag::Other;
        all = all && ok;
        comps.push_back({{"vertices", vs}, {"core_class", to_string(cls)}, {"two_choosable", ok}});
    }
    emit({{"two_choosable", all}, {"components", comps}});
    return all ? exit_positive : exit_negative;
}

int Runner::gadget()
{
    const std::string& fam = o_.family;
    if (fam == "list") {
        Json arr = Json::array();
        for (const auto& f : gadget_families())
            arr.push_back({{"name", f.name}, {"parameters", f.parameters}, {"description", f.description}});
        emit(arr);
        return exit_positive;
    }
    Graph g;
    Parts parts;
    Json extra;
    if (fam == "theta") {
        g = gen_theta(o_.a, o_.b, o_.c);
    } else if (fam == "apex-tower") {
        g = gen_apex_tower(graph().graph);
    } else if (fam == "bg23") {
        const LabeledGraph base = graph();
        g = gen_bg23_gadget(base.graph, sizes_from_string(o_.sizes, base));
    } else if (fam == "bgk") {
        g = gen_bgk_gadget(graph().graph, o_.k);
    } else if (fam == "strong-lower") {
        const auto s = gen_strong_lower(o_.d);
        g = s.graph;
        parts = s.parts;
        static const char* names[] = {"A", "B1", "B2", "C1", "C2", "D1", "D2", "E"};
        Json cls = Json::object();
        for (std::size_t i = 0; i < s.classes.size(); ++i)
            cls[names[i]] = s.classes[i];
        extra["classes"] = cls;
    } else if (fam == "hamilton-clique") {
        g = gen_hamilton_clique(o_.k, o_.n);
    } else if (fam == "complete-multipartite") {
        std::vector<int> sizes;
        std::stringstream in(o_.sizes);
        std::string item;
        while (std::getline(in, item, ','))
            try {
                sizes.push_back(std::stoi(item));
            } catch (const std::exception&) {
                fail(ErrorKind::InvalidInput, "--sizes must list class sizes, e.g. 2,2,3");
            }
        if (sizes.empty())
            fail(ErrorKind::InvalidInput, "--sizes must list class sizes, e.g. 2,2,3");
        for (int s : sizes)
            if (s < 1)
                fail(ErrorKind::InvalidInput, "class sizes must be positive");
        g = make_complete_multipartite(sizes);
    } else if (fam == "k24-prime") {
        g = gen_k24_prime();
    } else {
        fail(ErrorKind::InvalidInput, "unknown gadget family " + fam + " (try 'gadget list')");
    }
    Json out = graph_to_json(g);
    if (!parts.empty())
        out["parts"] = parts_to_json(parts);
    for (auto& [key, value] : extra.items())
        out[key] = value;
    emit(out);
    emit_dot(g, {}, parts);
    return exit_positive;
}

int Runner::strong()
{
    const LabeledGraph g = graph();
    if (o_.parts.empty())
        fail(ErrorKind::InvalidInput, "--parts is required");
    const Parts parts = parts_from_json(read_json_file(o_.parts), g);
    const std::uint64_t nodes = budget();
    Json out;
    out["k"] = o_.k;
    try {
        if (o_.lists.empty()) {
            const auto oracle_fn = [nodes](const Graph& h, int colours) { return find_coloring(h, colours, nodes); };
            const auto col = strong_color_lift(g.graph, parts, o_.k, oracle_fn);
            Json cj = Json::object();
            for (Vertex v = 0; v < g.graph.num_vertices(); ++v)
                cj[std::to_string(g.labels[v])] = col[v];
            out["colouring"] = cj;
        } else {
            const ListAssignment l = lists(g);
            const auto chooser = [nodes](const Graph& h, const ListAssignment& s) { return find_choice(h, s, 1, nodes); };
            out["m"] = o_.m;
            out["choice"] = lists_to_json(strong_choice_scale(g.graph, parts, o_.k, o_.m, l, chooser), g.labels);
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OracleRefused && e.kind() != ErrorKind::ChooserRefused)
            throw;
        out["refused"] = e.what();
        emit(out);
        return exit_negative;
    }
    emit(out);
    return exit_positive;
}

int Runner::suite(const std::string& name)
{
    const auto ids = suite_criteria(name);
    Json results = Json::array();
    bool all = true;
    for (int id : ids) {
        const auto r = run_criterion(id, exec());
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title << "\n";
        all = all && r.pass;
        results.push_back(
            {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    }
    emit({{"suite", name}, {"pass", all}, {"criteria", results}});
    return all ? exit_positive : exit_negative;
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Exhausted:
        return exit_budget;
    case ErrorKind::Not2Choosable:
    case ErrorKind::OddCycle:
    case ErrorKind::OracleRefused:
    case ErrorKind::ChooserRefused:
        return exit_negative;
    default:
        return exit_usage;
    }
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"List colouring: (a:b)-choosability, kernel choosers, gadgets."};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--budget", o.budget, "search node budget (default: $ABCHOICE_BUDGET or 10000000)");
    app.add_option("--out", o.out, "write the JSON result to this file");
    app.add_flag("--parallel", o.parallel, "use OpenMP where available");

    auto graph_opt = [&](CLI::App* s, bool required = true) {
        auto* opt = s->add_option("--graph", o.graph, "graph JSON file")->check(CLI::ExistingFile);
        if (required)
            opt->required();
    };

    auto* check = app.add_subcommand("check", "decide (a:b)- or f-choosability");
    graph_opt(check);
    check->add_option("--a", o.a, "list size")->check(CLI::PositiveNumber);
    check->add_option("--b", o.b, "colours per vertex")->check(CLI::PositiveNumber);
    check->add_option("--f", o.sizes, "per-vertex list sizes, vertex:size,...");
    check->add_option("--enumeration", o.enumeration, "reduced | canonical | exhaustive");

    auto* chk = app.add_subcommand("chk", "smallest n with the graph (n:k)-choosable");
    graph_opt(chk);
    chk->add_option("--k", o.k)->check(CLI::PositiveNumber);
    chk->add_option("--enumeration", o.enumeration, "reduced | canonical | exhaustive");

    auto* choose = app.add_subcommand("choose", "choose k colours per vertex from given lists");
    graph_opt(choose);
    choose->add_option("--lists", o.lists, "list JSON file")->required()->check(CLI::ExistingFile);
    choose->add_option("--k", o.k)->check(CLI::PositiveNumber);
    choose->add_option("--method", o.method, "exact | kernel | chordal | brooks | 42 | random");
    choose->add_option("--seed", o.seed);
    choose->add_option("--max-attempts", o.max_attempts)->check(CLI::PositiveNumber);

    auto* kern = app.add_subcommand("kernel", "kernel of a digraph without odd directed cycles");
    kern->add_option("--digraph", o.digraph, "digraph JSON file")->required()->check(CLI::ExistingFile);

    auto* orient = app.add_subcommand("orient", "density and a low out-degree orientation");
    graph_opt(orient);
    orient->add_option("--d", o.d, "out-degree bound")->check(CLI::PositiveNumber);
    orient->add_flag("--acyclic", o.acyclic, "degeneracy orientation");

    auto* core = app.add_subcommand("core", "strip degree-1 vertices and classify the core");
    graph_opt(core);
    core->add_option("--dot", o.dot, "write the core as DOT");

    auto* two = app.add_subcommand("two-choosable", "2-choosability by core classification");
    graph_opt(two);

    auto* gadget = app.add_subcommand("gadget", "generate a graph family ('gadget list' for all)");
    gadget->add_option("family", o.family)->required();
    graph_opt(gadget, false);
    gadget->add_option("--a", o.a);
    gadget->add_option("--b", o.b);
    gadget->add_option("--c", o.c);
    gadget->add_option("--d", o.d);
    gadget->add_option("--k", o.k);
    gadget->add_option("--n", o.n);
    gadget->add_option("--f", o.sizes, "vertex:size list (bg23)");
    gadget->add_option("--sizes", o.sizes, "class sizes, e.g. 2,2,3 (complete-multipartite)");
    gadget->add_option("--dot", o.dot, "also write DOT");

    auto* strong = app.add_subcommand("strong", "colour or choose on [G, V1, ..., Vr]");
    graph_opt(strong);
    strong->add_option("--parts", o.parts, "JSON array of vertex lists")->required()->check(CLI::ExistingFile);
    strong->add_option("--k", o.k)->check(CLI::PositiveNumber);
    strong->add_option("--m", o.m)->check(CLI::PositiveNumber);
    strong->add_option("--lists", o.lists, "km-lists; without it, colour with k+1 colours")
        ->check(CLI::ExistingFile);

    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "run an acceptance bundle");
    suite->add_option("name", suite_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    Runner run(o);
    try {
        if (check->parsed())
            return run.check();
        if (chk->parsed())
            return run.chk();
        if (choose->parsed())
            return run.choose();
        if (kern->parsed())
            return run.kernel_verb();
        if (orient->parsed())
            return run.orient();
        if (core->parsed())
            return run.core_verb();
        if (two->parsed())
            return run.two_choosable();
        if (gadget->parsed())
            return run.gadget();
        if (strong->parsed())
            return run.strong();
        if (suite->parsed())
            return run.suite(suite_name);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
