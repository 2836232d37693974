#include <cstdio>
#include <fstream>

#include "abchoice/exact_oracle.hpp"
#include "abchoice/io.hpp"
#include "abchoice/orientation.hpp"
#include "abchoice/two_choice.hpp"
#include "support.hpp"

using namespace abchoice;
using test::lists_of;

TEST_SUITE("io") {

TEST_CASE("graph JSON with labels")
{
    const Json j = Json::parse(R"({"vertices":[10,20,30],"edges":[[10,20],[30,20]]})");
    const auto lg = graph_from_json(j);
    CHECK(lg.graph.num_vertices() == 3);
    CHECK(lg.labels == std::vector<Label>{10, 20, 30});
    CHECK(lg.id(30) == 2);
    CHECK(lg.graph.adjacent(1, 2));
    const Json back = graph_to_json(lg.graph, lg.labels);
    CHECK(back.dump() == R"({"vertices":[10,20,30],"edges":[[10,20],[20,30]]})");
    CHECK(graph_from_json(back).graph == lg.graph);
}

TEST_CASE("graph JSON vertex forms")
{
    const auto counted = graph_from_json(Json::parse(R"({"vertices":4,"edges":[[0,1]]})"));
    CHECK(counted.graph.num_vertices() == 4);
    const auto implied = graph_from_json(Json::parse(R"({"edges":[[7,3],[3,5]]})"));
    CHECK(implied.labels == std::vector<Label>{3, 5, 7});
    CHECK(graph_to_json(make_cycle(3)).dump() == R"({"vertices":[0,1,2],"edges":[[0,1],[0,2],[1,2]]})");
}

TEST_CASE("graph JSON errors")
{
    auto kind = [](const char* text) {
        return test::error_kind([&] { graph_from_json(Json::parse(text)); });
    };
    CHECK(kind(R"({"vertices":[1,1],"edges":[]})") == ErrorKind::InvalidInput);
    CHECK(kind(R"({"vertices":[1,2],"edges":[[1,3]]})") == ErrorKind::InvalidInput);
    CHECK(kind(R"({"vertices":[1,2],"edges":[[1,1]]})") == ErrorKind::InvalidInput);
    CHECK(kind(R"({"vertices":[1,2],"edges":[[1,2,3]]})") == ErrorKind::InvalidInput);
    CHECK(kind(R"({"vertices":-1})") == ErrorKind::InvalidInput);
    CHECK(kind(R"({"vertices":"x"})") == ErrorKind::InvalidInput);
}

TEST_CASE("digraph JSON round trip")
{
    const auto ld = digraph_from_json(Json::parse(R"({"vertices":[0,1,2],"arcs":[[0,1],[1,0],[2,1]]})"));
    CHECK(ld.digraph.num_arcs() == 3);
    CHECK(digraph_from_json(digraph_to_json(ld.digraph, ld.labels)).digraph == ld.digraph);
}

TEST_CASE("list JSON")
{
    const auto lg = graph_from_json(Json::parse(R"({"vertices":[5,6],"edges":[[5,6]]})"));
    const auto obj = lists_from_json(Json::parse(R"({"5":[3,1],"6":[2,1]})"), lg);
    CHECK(obj == lists_of({{1, 3}, {1, 2}}));
    const auto arr = lists_from_json(Json::parse(R"([[1,3],[1,2]])"), lg);
    CHECK(arr == obj);
    CHECK(lists_to_json(obj, lg.labels).dump() == R"({"5":[1,3],"6":[1,2]})");
    CHECK(test::error_kind([&] { lists_from_json(Json::parse(R"({"5":[1]})"), lg); }) == ErrorKind::InvalidInput);
    CHECK(test::error_kind([&] { lists_from_json(Json::parse(R"({"5":[1,1],"6":[2]})"), lg); }) ==
          ErrorKind::InvalidInput);
    CHECK(test::error_kind([&] { lists_from_json(Json::parse(R"({"5":[1],"6":[2],"9":[3]})"), lg); }) ==
          ErrorKind::InvalidInput);
}

TEST_CASE("size strings")
{
    const auto lg = graph_from_json(Json::parse(R"({"vertices":[1,2,3],"edges":[]})"));
    CHECK(sizes_from_string("1:2,2:3,3:2", lg) == std::vector<int>{2, 3, 2});
    CHECK(sizes_from_string(R"({"1":2,"2":3,"3":2})", lg) == std::vector<int>{2, 3, 2});
    CHECK(test::error_kind([&] { sizes_from_string("1:2,2:3", lg); }) == ErrorKind::InvalidInput);
    CHECK(test::error_kind([&] { sizes_from_string("1-2", lg); }) == ErrorKind::InvalidInput);
}

TEST_CASE("witness JSON")
{
    const auto r = is_ab_choosable(make_complete(2), 1, 1);
    const Json w = witness_to_json(r.witness());
    CHECK(w["verdict"] == "not-choosable");
    CHECK(w["assignment"].dump() == R"({"0":[0],"1":[0]})");
    CHECK_FALSE(w.contains("choice"));

    Witness ok;
    ok.choosable = true;
    ok.assignment = lists_of({{1, 2}});
    ok.choice = lists_of({{2}});
    const Json j = witness_to_json(ok, {9});
    CHECK(j.dump() == R"({"assignment":{"9":[1,2]},"verdict":"choosable","choice":{"9":[2]}})");
}

TEST_CASE("orientation and relation JSON")
{
    const auto o = orient_bounded_outdegree(make_cycle(4), 1);
    REQUIRE(o);
    const Json j = orientation_to_json(*o);
    CHECK(j["max_outdegree"] == 1);
    CHECK(j["arcs"].size() == 4);
    const auto rel = comp_sequence({{1, 2, 3, 4}, {1, 2, 3, 4}});
    const Json r = pair_relation_to_json(rel);
    CHECK(r.size() == 6);
    CHECK(r[0].dump() == "[[1,2],[3,4]]");
}

TEST_CASE("set families and parts")
{
    const SetFamily f = set_family_from_json(Json::parse("[[3,1],[2,4]]"));
    CHECK(f == SetFamily{{1, 3}, {2, 4}});
    CHECK(set_family_to_json(f).dump() == "[[1,3],[2,4]]");
    CHECK(test::error_kind([] { set_family_from_json(Json::parse("[[1,1]]")); }) == ErrorKind::InvalidInput);

    const auto lg = graph_from_json(Json::parse(R"({"vertices":[4,8,9],"edges":[]})"));
    const Parts p = parts_from_json(Json::parse("[[8,4]]"), lg);
    CHECK(p == Parts{{1, 0}});
    CHECK(parts_to_json(p, lg.labels).dump() == "[[8,4]]");
}

TEST_CASE("DOT export")
{
    const std::string dot = graph_to_dot(make_path(3), {}, {{0, 1}});
    CHECK(dot.find("graph") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("group=0") != std::string::npos);
    CHECK(dot == graph_to_dot(make_path(3), {}, {{0, 1}}));
}

TEST_CASE("files")
{
    const std::string path = "io_test_graph.json";
    {
        std::ofstream out(path);
        out << R"({"edges":[[0,1]]})";
    }
    CHECK(read_json_file(path)["edges"].size() == 1);
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK(test::error_kind([&] { read_json_file(path); }) == ErrorKind::InvalidInput);
    std::remove(path.c_str());
    CHECK(test::error_kind([&] { read_json_file(path); }) == ErrorKind::InvalidInput);
}

}
