#include <doctest.h>

#include "catpack/error.hpp"
#include "catpack/io.hpp"
#include "support/helpers.hpp"

using namespace catpack;

TEST_SUITE("io") {

TEST_CASE("matrix formats") {
  const auto m = testing::fixture(3).matrix;
  CHECK(parse_matrix(matrix_to_json(m).dump()) == m);
  CHECK(parse_matrix("[[1,1],[1,1]]") == testing::rows({{1, 1}, {1, 1}}));
  CHECK(parse_matrix("1 2 1\n\n2 1 1\n") == testing::rows({{1, 2, 1}, {2, 1, 1}}));
  CHECK(matrix_to_json(testing::rows({{1, 1}})).dump() == R"({"rows":[[1,1]]})");
}

TEST_CASE("graph formats") {
  const auto& f = testing::fixture(5);
  CHECK(parse_graph(graph_to_json(f.realization).dump()) == f.realization);
  CHECK(parse_graph(adjacency_text(f.realization)) == f.realization);
  const auto g = parse_graph(R"({"n": 3, "edges": [{"u": 0, "v": 2, "color": 1}]})");
  CHECK(g.color_of(2, 0) == 1);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_matrix(""), FormatError);
  CHECK_THROWS_AS(parse_matrix("1 x"), FormatError);
  CHECK_THROWS_AS(parse_matrix("{\"rows\": 3}"), FormatError);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[1]]"), FormatError);
  CHECK_THROWS_AS(parse_matrix("{\"rows\": [[1,"), FormatError);
  CHECK_THROWS_AS(parse_graph("0 1\n2 0"), FormatError);
  CHECK_THROWS_AS(parse_graph("0 1\n1 0 0"), FormatError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [{"u": 0, "v": 5, "color": 1}]})"), FormatError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [{"u": 0, "v": 1, "color": 1}, {"u": 1, "v": 0, "color": 2}]})"),
                  FormatError);
}

TEST_CASE("dot export") {
  const auto one = to_dot(testing::graph(2, {{1, 2, 1}}));
  CHECK(one.find("0 [label=\"1\"]") != std::string::npos);
  CHECK(one.find("1 [label=\"2\"]") != std::string::npos);
  CHECK(one.find("0 -- 1 [color=") != std::string::npos);

  const auto& f1 = testing::fixture(1);
  const auto dot = to_dot(f1.realization);
  std::size_t edges = 0;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 28);
  for (int c = 1; c <= 4; ++c) CHECK(dot.find("label=\"" + std::to_string(c) + "\"]") != std::string::npos);
  CHECK(to_dot(f1.realization) == dot);

  const auto empty = to_dot(ColoredGraph(3));
  CHECK(empty.find(" -- ") == std::string::npos);
  CHECK(empty.find("2 [label=\"3\"]") != std::string::npos);
}

TEST_CASE("outcome json") {
  const auto j = outcome_to_json(NotExists{"condition 3", "d_max=10 > |S|+4=9"}, false);
  CHECK(j["status"] == "not_exists");
  CHECK(outcome_to_json(Unknown{"budget"}, false)["reason"] == "budget");
  const auto& f = testing::fixture(2);
  ConstructionTrace t;
  t.base = "fixture";
  t.steps = {{1, 2, 3}};
  const auto e = outcome_to_json(Exists{f.realization, t}, true);
  CHECK(e["trace"]["steps"][0]["target"] == 3);
  CHECK(graph_from_json(e["graph"]) == f.realization);
}

}  // TEST_SUITE
