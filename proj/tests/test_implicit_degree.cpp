#include "doctest.h"

#include "fixtures.hpp"
#include "idcycle/error.hpp"
#include "idcycle/implicit_degree.hpp"

using namespace idcycle;

TEST_CASE("complete graph takes the empty-N2 branch") {
  auto sheet = implicit_degree_worksheet(fixtures::complete(4), 0);
  CHECK(sheet.value == 3);
  CHECK(sheet.branch == ImplicitBranch::EmptySecondNeighborhood);
  CHECK_FALSE(sheet.second_max.has_value());
  CHECK(sheet.degree_sequence == std::vector<int>{3, 3, 3});
  CHECK(to_string(sheet.branch) == "empty-N2");
}

TEST_CASE("bowtie outer vertex") {
  auto sheet = implicit_degree_worksheet(fixtures::bowtie(), 0);
  CHECK(sheet.degree == 2);
  CHECK(sheet.degree_sequence == std::vector<int>{2, 2, 2, 4});
  CHECK(sheet.second_neighborhood_size == 2);
  CHECK(sheet.second_max == 2);
  CHECK(sheet.branch == ImplicitBranch::Otherwise);
  CHECK(sheet.value == 2);
  CHECK(implicit_degree_1(fixtures::bowtie(), 2) == 4);
}

TEST_CASE("paw triangle vertex uses d_{k+1}") {
  auto sheet = implicit_degree_worksheet(fixtures::paw(), 0);
  CHECK(sheet.degree_sequence == std::vector<int>{1, 2, 3});
  CHECK(sheet.second_max == 1);
  CHECK(sheet.branch == ImplicitBranch::AboveSecondMax);
  CHECK(sheet.value == 2);
  CHECK(to_string(sheet.branch) == "d_{k+1}>M2");
}

TEST_CASE("pendant vertex hits the degenerate k = 0 case") {
  auto sheet = implicit_degree_worksheet(fixtures::paw(), 3);
  CHECK(sheet.degree == 1);
  CHECK(sheet.branch == ImplicitBranch::DegenerateK0);
  CHECK(sheet.value == 1);
  CHECK(recompute_from_worksheet(sheet) == 1);
}

TEST_CASE("implicit degree exceeding the degree") {
  // 0 has neighbours 1,2 and the heavy vertices 3,4 at distance two.
  Graph g = fixtures::make(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {1, 4}, {2, 3}, {3, 4}});
  auto sheet = implicit_degree_worksheet(g, 0);
  CHECK(sheet.degree_sequence == std::vector<int>{3, 3, 3, 3});
  CHECK(sheet.value == 3);
  CHECK(sheet.value > sheet.degree);
}

TEST_CASE("vertex-transitive graphs") {
  for (Vertex v = 0; v < 5; ++v) CHECK(implicit_degree_1(fixtures::cycle(5), v) == 2);
  for (Vertex v = 0; v < 10; ++v) CHECK(implicit_degree_1(fixtures::petersen(), v) == 3);
}

TEST_CASE("heaviness thresholds") {
  CHECK(is_implicit_heavy(fixtures::complete(4), 0));
  CHECK(is_heavy(fixtures::complete(4), 0));
  for (Vertex v = 0; v < 5; ++v) CHECK_FALSE(is_implicit_heavy(fixtures::cycle(5), v));
  CHECK_FALSE(is_heavy(fixtures::cycle(5), 0));
  CHECK(is_implicit_heavy(fixtures::bowtie(), 2));
  CHECK(is_heavy(fixtures::bowtie(), 2));
  CHECK_FALSE(is_implicit_heavy(fixtures::bowtie(), 0));
  // Exactly n/2 counts as heavy.
  CHECK(is_heavy(fixtures::k33(), 0));
}

TEST_CASE("out-of-range vertices") {
  CHECK_THROWS_AS(implicit_degree_1(fixtures::paw(), 4), VertexOutOfRange);
  CHECK_THROWS_AS(is_heavy(fixtures::paw(), -1), VertexOutOfRange);
}

TEST_CASE("degree table") {
  DegreeTable t(fixtures::bowtie());
  CHECK(t.n == 5);
  CHECK(t.degree == std::vector<int>{2, 2, 4, 2, 2});
  CHECK(t.implicit == std::vector<int>{2, 2, 4, 2, 2});
  CHECK(t.heavy(2));
  CHECK_FALSE(t.implicit_heavy(0));
  CHECK(implicit_degrees_serial(fixtures::petersen()) ==
        implicit_degrees_parallel(fixtures::petersen()));
}
