#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "idcycle/error.hpp"
#include "idcycle/graph_io.hpp"

using namespace idcycle;

TEST_CASE("edge list parsing") {
  Graph t = parse_edge_list("0 1\n1 2\n2 0");
  CHECK(t == fixtures::complete(3));
  CHECK(parse_edge_list("# a comment\n\n0 1\n  \n1 2\n") == fixtures::make(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(parse_edge_list("0 0"), InvalidGraph);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), InvalidGraph);
  CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 -1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# n=2\n0 5"), ParseError);
}

TEST_CASE("edge list vertex count pragma keeps isolated vertices") {
  Graph g = parse_edge_list("# n=5\n0 1\n");
  CHECK(g.order() == 5);
  CHECK(parse_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("graph6 decoding") {
  CHECK(parse_graph6("C~") == fixtures::complete(4));
  CHECK(parse_graph6(">>graph6<<C~") == fixtures::complete(4));
  CHECK(parse_graph6("EFz_") == fixtures::k33());
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(to_graph6(fixtures::k33()) == "EFz_");
  CHECK(to_graph6(fixtures::complete(4)) == "C~");
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6(":Bw"), ParseError);  // sparse6
  CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 long header") {
  // n = 100 uses the four-byte size prefix.
  Graph g = fixtures::cycle(100);
  std::string text = to_graph6(g);
  CHECK(text.substr(0, 1) == "~");
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("load_graph dispatches on format") {
  std::istringstream a("C~\n");
  CHECK(load_graph(a, GraphFormat::Graph6) == fixtures::complete(4));
  std::istringstream b("0 1\n1 2\n2 0\n");
  CHECK(load_graph(b, GraphFormat::EdgeList) == fixtures::complete(3));
  CHECK(format_from_path("x/g.g6") == GraphFormat::Graph6);
  CHECK(format_from_path("g.graph6") == GraphFormat::Graph6);
  CHECK(format_from_path("g.el") == GraphFormat::EdgeList);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/g.g6", GraphFormat::Graph6), Error);
}

TEST_CASE("catalog reader names the bad line") {
  std::istringstream ok("C~\nBw\n\nEFz_\n");
  auto cat = read_graph6_catalog(ok);
  REQUIRE(cat.size() == 3);
  CHECK(cat[2] == fixtures::k33());
  std::istringstream bad("C~\nC~~\n");
  try {
    read_graph6_catalog(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
