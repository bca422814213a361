#include "gcond/graph.hpp"

#include "gcond/errors.hpp"
#include "gcond/generators.hpp"
#include "gcond/graph_io.hpp"

#include <doctest.h>

using namespace gcond;

namespace {

PlaneGraph c4() {
  return PlaneGraph({"a", "b", "c", "d"},
                    {{EdgeKey("a", "b"), 1},
                     {EdgeKey("b", "c"), 1},
                     {EdgeKey("c", "d"), 1},
                     {EdgeKey("a", "d"), 1}},
                    {"a", "b", "c", "d"});
}

}  // namespace

TEST_CASE("construction validates the graph") {
  CHECK_THROWS_AS(PlaneGraph({"a"}, {{EdgeKey("a", "a"), 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph({"a", "b"}, {{EdgeKey("a", "b"), 0}}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph({"a", "b"}, {{EdgeKey("a", "x"), 1}}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph({"a", "b"},
                             {{EdgeKey("a", "b"), 1}, {EdgeKey("b", "a"), 2}}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph({"a", "a"}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PlaneGraph({"a"}, {}, {"z"}), std::invalid_argument);
}

TEST_CASE("delete_vertices produces induced subgraphs") {
  PlaneGraph g = c4();

  SUBCASE("opposite corners of C4 leave two isolated vertices") {
    PlaneGraph h = delete_vertices(g, {"a", "c"});
    CHECK(h.vertex_count() == 2);
    CHECK(h.edges().empty());
    CHECK(h.face_boundary() == std::vector<VertexId>{"b", "d"});
  }
  SUBCASE("deleting nothing is the identity") {
    CHECK(delete_vertices(g, {}) == g);
  }
  SUBCASE("unknown vertex is rejected") {
    CHECK_THROWS_AS(delete_vertices(g, {"nope"}), std::invalid_argument);
  }
  SUBCASE("corner of the 2x3 grid leaves an L with five edges") {
    PlaneGraph grid = make_grid(2, 3);
    PlaneGraph l = delete_vertices(grid, {"r0c0"});
    CHECK(l.vertex_count() == 5);
    CHECK(l.edges().size() == 5);
  }
}

TEST_CASE("deletion composes over disjoint sets") {
  PlaneGraph g = make_grid(3, 4);
  VertexSet x{"r0c0", "r1c2"}, y{"r2c3", "r0c1"};
  VertexSet both = x;
  both.insert(y.begin(), y.end());
  CHECK(delete_vertices(delete_vertices(g, x), y) == delete_vertices(g, both));
}

TEST_CASE("cyclic order checks accept rotations and reflections") {
  PlaneGraph g = c4();
  CHECK(validate_cyclic_order(g, {"a", "b", "c", "d"}));
  CHECK(validate_cyclic_order(g, {"b", "c", "d", "a"}));
  CHECK(validate_cyclic_order(g, {"d", "c", "b", "a"}));
  CHECK(validate_cyclic_order(g, {"c", "b", "a", "d"}));
  CHECK_FALSE(validate_cyclic_order(g, {"a", "c", "b", "d"}));
  CHECK(validate_cyclic_order(g, {"a", "c"}));
  CHECK(validate_cyclic_order(g, {}));

  auto bad = check_cyclic_order(g, {"a", "zz"});
  CHECK_FALSE(bad.ok);
  CHECK(bad.offending == VertexId("zz"));
  CHECK(bad.message.find("zz") != std::string::npos);

  auto repeated = check_cyclic_order(g, {"a", "a"});
  CHECK_FALSE(repeated.ok);
}

TEST_CASE("cyclic order works on boundary walks with repeats") {
  PlaneGraph p = make_path(4);   // face v0 v1 v2 v3 v2 v1
  CHECK(validate_cyclic_order(p, {"v0", "v1", "v3"}));
  CHECK(validate_cyclic_order(p, {"v0", "v3", "v2"}));   // uses the return pass
  CHECK(validate_cyclic_order(p, {"v0", "v2", "v1"}));
  CHECK_FALSE(validate_cyclic_order(p, {"v0", "v2", "v1", "v3"}));
}

TEST_CASE("subgraph face is the original order restricted to survivors") {
  PlaneGraph g = make_grid(2, 3);
  PlaneGraph h = delete_vertices(g, {"r0c1"});
  std::vector<VertexId> expect;
  for (const auto& v : g.face_boundary())
    if (v != "r0c1") expect.push_back(v);
  CHECK(h.face_boundary() == expect);
}

TEST_CASE("graph files round trip") {
  PlaneGraph g = make_grid(2, 3);
  RandomSource rng(7);
  g = apply_weights(g, WeightMode::random_rational, 5, rng);
  CHECK(parse_graph(graph_to_text(g)) == g);
}

TEST_CASE("graph files reject malformed input") {
  CHECK_THROWS_AS(parse_graph("not json"), ParseError);
  CHECK_THROWS_AS(parse_graph("{}"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","a",1]],"face":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_graph(R"({"vertices":["a","b"],"edges":[["a","b",1],["b","a",1]],"face":[]})"),
      ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","x",1]],"face":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b","1/0"]],"face":[]})"),
                  ParseError);

  // Parse errors carry the line number.
  try {
    parse_graph("{\n  \"vertices\": [,]\n}");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("weights parse as integers or p/q strings") {
  PlaneGraph g = parse_graph(
      R"({"vertices":["a","b","c","d"],
          "edges":[["a","b",3],["b","c","1/2"],["c","d","-2"],["a","d","7/3"]],
          "face":["a","b","c","d"]})");
  CHECK(*g.edge_weight("a", "b") == Rational(3));
  CHECK(*g.edge_weight("b", "c") == Rational(1, 2));
  CHECK(*g.edge_weight("c", "d") == Rational(-2));
  CHECK(*g.edge_weight("a", "d") == Rational(7, 3));
}
