#include "doctest.h"

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "idcycle/error.hpp"
#include "idcycle/graph_io.hpp"
#include "idcycle/oracle.hpp"

using namespace idcycle;
using fixtures::seq;

namespace {

std::vector<Graph> catalog_up_to(int n_max) {
  std::ifstream in(IDCYCLE_DEFAULT_CATALOG);
  REQUIRE(in);
  std::vector<Graph> out;
  for (auto& g : read_graph6_catalog(in))
    if (g.order() <= n_max) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST_CASE("cyclability oracle") {
  std::vector<Vertex> all{0, 1, 2, 3};
  auto k4 = cyclable_bruteforce(fixtures::complete(4), all);
  CHECK(k4.verdict == Verdict::Cyclable);
  REQUIRE(k4.witness.has_value());
  CHECK(*k4.witness == seq({0, 1, 2, 3}));

  std::vector<Vertex> wings{0, 1, 3, 4};
  auto bow = cyclable_bruteforce(fixtures::bowtie(), wings);
  CHECK(bow.verdict == Verdict::NotCyclable);
  CHECK_FALSE(bow.witness.has_value());

  std::vector<Vertex> pair{0, 2};
  auto c5 = cyclable_bruteforce(fixtures::cycle(5), pair);
  CHECK(c5.verdict == Verdict::Cyclable);
  REQUIRE(c5.witness.has_value());
  CHECK(c5.witness->size() == 5);
  CHECK(verify_cycle_through(fixtures::cycle(5), *c5.witness, pair));

  // Petersen is not Hamiltonian but drops to cyclable after one vertex.
  std::vector<Vertex> p10(10), p9(9);
  for (int i = 0; i < 10; ++i) p10[i] = i;
  for (int i = 0; i < 9; ++i) p9[i] = i;
  CHECK(cyclable_bruteforce(fixtures::petersen(), p10).verdict == Verdict::NotCyclable);
  CHECK(cyclable_bruteforce(fixtures::petersen(), p9).verdict == Verdict::Cyclable);

  std::vector<Vertex> none;
  std::vector<Vertex> bad{0, 9};
  CHECK_THROWS_AS(cyclable_bruteforce(fixtures::cycle(5), none), InvalidParams);
  CHECK_THROWS_AS(cyclable_bruteforce(fixtures::cycle(5), bad), InvalidParams);
  CHECK(to_string(Verdict::BudgetExceeded) == "budget-exceeded");
}

TEST_CASE("budget exhaustion is never a negative verdict") {
  std::vector<Vertex> p10(10);
  for (int i = 0; i < 10; ++i) p10[i] = i;
  auto r = cyclable_bruteforce(fixtures::petersen(), p10, 5);
  CHECK(r.verdict == Verdict::BudgetExceeded);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("edge verification rejects bad witnesses") {
  std::vector<Vertex> x{0, 1};
  CHECK(verify_cycle_through(fixtures::cycle(5), seq({0, 1, 2, 3, 4}), x));
  CHECK_FALSE(verify_cycle_through(fixtures::cycle(5), seq({0, 2, 1, 3, 4}), x));
  std::vector<Vertex> y{0, 4};
  CHECK_FALSE(verify_cycle_through(fixtures::complete(4), seq({0, 1, 2}), y));
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(seq({2, 0, 1})) == seq({0, 1, 2}));
  CHECK(canonical_form(seq({3, 2, 1, 0})) == seq({0, 1, 2, 3}));
  CHECK(canonical_form(seq({1, 4, 2, 0, 3})) == seq({0, 2, 4, 1, 3}));
}

TEST_CASE("id-cycle enumeration") {
  auto k4 = enumerate_id_cycles(fixtures::complete(4), 0, Enumeration::Mode::Exhaustive);
  // Four triangles plus three 4-cycles up to rotation and reflection.
  CHECK(k4.size() == 7);
  CHECK(std::find(k4.begin(), k4.end(), seq({0, 1, 2, 3})) != k4.end());

  auto c5 = enumerate_id_cycles(fixtures::cycle(5), 0, Enumeration::Mode::Exhaustive);
  REQUIRE(c5.size() == 1);
  CHECK(c5[0] == seq({0, 1, 2, 3, 4}));

  auto bow = enumerate_id_cycles(fixtures::bowtie(), 0, Enumeration::Mode::Exhaustive);
  CHECK(bow == std::vector<VertexSequence>{seq({0, 1, 2}), seq({2, 3, 4})});

  auto capped = enumerate_id_cycles(fixtures::complete(4), 3, Enumeration::Mode::Exhaustive);
  CHECK(capped.size() == 3);

  auto sampled = enumerate_id_cycles(fixtures::complete(5), 10, Enumeration::Mode::Sampled, 9);
  CHECK(sampled.size() <= 10);
  CHECK_FALSE(sampled.empty());
  for (const auto& s : sampled) {
    CHECK(satisfies(fixtures::complete(5), s, CycleClass::ImplicitDirac));
    CHECK(canonical_form(s) == s);
  }
  CHECK(sampled == enumerate_id_cycles(fixtures::complete(5), 10, Enumeration::Mode::Sampled, 9));

  CHECK_THROWS_AS(enumerate_id_cycles(fixtures::cycle(11), 0, Enumeration::Mode::Exhaustive),
                  InvalidParams);
}

TEST_CASE("derived seeds") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(5, 7) == derive_seed(5, 7));
}

TEST_CASE("verification harness on small catalogs") {
  VerifyOptions four;
  four.n_max = 4;
  four.seed = 42;
  auto small = catalog_up_to(4);
  REQUIRE(small.size() == 8);
  auto r4 = verify_theorem_small_serial(small, four);
  CHECK(r4.graphs_checked == 8);
  CHECK(r4.failures.empty());
  CHECK(r4.stuck == 0);
  CHECK(r4.certified == r4.sequences_checked);
  CHECK(r4.oracle_confirmed == r4.sequences_checked);

  VerifyOptions six;
  six.n_max = 6;
  six.per_graph_sample = 100;
  six.seed = 3;
  auto up6 = catalog_up_to(6);
  CHECK(up6.size() == 141);
  auto r6 = verify_theorem_small_parallel(up6, six);
  CHECK(r6.failures.empty());
  CHECK(r6.certified == r6.sequences_checked);
  CHECK(r6.descent_violations == 0);
  CHECK(r6.cap_violations == 0);
  CHECK(r6 == verify_theorem_small_serial(up6, six));
}

TEST_CASE("malformed catalog stream") {
  std::istringstream bad("C~\nnot-a-graph\n");
  CHECK_THROWS_AS(read_graph6_catalog(bad), ParseError);
}

TEST_CASE("trace descent checker") {
  auto r = certify_cyclable(fixtures::k33(), seq({0, 3, 1, 4, 2}));
  CHECK(trace_descends(r.trace()));
  auto bad = r.trace();
  bad.push_back(bad.front());
  CHECK_FALSE(trace_descends(bad));
}
