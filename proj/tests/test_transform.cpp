#include "doctest.h"

#include <cstdlib>

#include "fixtures.hpp"
#include "idcycle/error.hpp"
#include "idcycle/graph_io.hpp"
#include "idcycle/transform.hpp"

using namespace idcycle;
using fixtures::seq;

namespace {

MoveFailure failure_of(auto&& fn) {
  try {
    fn();
  } catch (const MoveNotApplicable& e) {
    return e.reason();
  }
  FAIL("move unexpectedly applied");
  return MoveFailure::PatternNotPresent;
}

// Path 0-1-2-3, vertex 7 adjacent to 0..6, vertices 4-6 pendant on 7.
Graph hub_graph() {
  std::vector<Graph::Edge> e{{0, 1}, {1, 2}, {2, 3}};
  for (int v = 0; v < 7; ++v) e.emplace_back(v, 7);
  return Graph(8, e);
}

}  // namespace

TEST_CASE("move kind names") {
  CHECK(to_string(MoveKind::CrossingChord) == "M2-crossing-chord");
  CHECK(move_kind_from_string("M3") == MoveKind::Rotation);
  CHECK(move_kind_from_string("M6-final-reconstruction") == MoveKind::FinalReconstruction);
  CHECK_FALSE(move_kind_from_string("M9").has_value());
}

TEST_CASE("index helpers") {
  auto s = seq({0, 1, 2, 3, 4, 5, 6});
  CHECK(reverse_prefix(s, 3) == seq({3, 2, 1, 0, 4, 5, 6}));
  CHECK(reverse_prefix(s, 1) == seq({1, 0, 2, 3, 4, 5, 6}));
  CHECK(rotate_to_break(s, 2) == seq({3, 4, 5, 6, 0, 1, 2}));
}

TEST_CASE("M1 external insert") {
  Graph g = fixtures::k33();
  Move m = move_external_insert(g, seq({0, 3, 1, 4, 2}), 4);
  CHECK(m.kind == MoveKind::ExternalInsert);
  CHECK(m.after == seq({5, 0, 3, 1, 4, 2}));
  CHECK(m.parameter("w") == 5);
  CHECK(m.potential_before == Potential{1, 0});
  CHECK(m.potential_after == Potential{0, 0});
  CHECK(failure_of([&] { move_external_insert(g, seq({0, 3, 1, 4, 2}), 0); }) ==
        MoveFailure::NotABreak);
  CHECK(failure_of([&] { move_external_insert(fixtures::complete(4), seq({0, 1, 2, 3}), 3); }) ==
        MoveFailure::NotABreak);
  // (4, 0) is the only missing pair and no vertex lies outside the sequence.
  CHECK(failure_of([&] { move_external_insert(fixtures::bowtie(), seq({0, 1, 2, 3, 4}), 4); }) ==
        MoveFailure::NoWitness);
}

TEST_CASE("M2 crossing chord") {
  Graph g = fixtures::chord_six();
  auto s = seq({0, 1, 2, 3, 4, 5});
  CHECK(predecessor_neighborhood(g, s, 0) == std::vector<Vertex>{0, 1, 3});
  Move a = move_crossing_chord(g, s, 5, 1);
  CHECK(a.after == seq({0, 2, 3, 4, 5, 1}));
  CHECK(a.potential_after.deficit == 0);
  Move b = move_crossing_chord(g, s, 5, 3);
  CHECK(b.after == seq({0, 4, 5, 3, 2, 1}));
  CHECK(b.potential_after.deficit == 0);
  CHECK(move_crossing_chord(g, s, 5).parameter("w") == 1);
  CHECK(failure_of([&] { move_crossing_chord(g, s, 5, 4); }) == MoveFailure::NoChord);

  // N^-(0) = {0, 1} and N(2) on the sequence is {3, 4}: no chord.
  CHECK(failure_of([&] { move_crossing_chord(fixtures::k33(), seq({0, 3, 1, 4, 2}), 4); }) ==
        MoveFailure::NoChord);
}

TEST_CASE("M3 rotation") {
  // First state of the small-graph scan where M1, M2 and M4 all fail.
  Graph g = parse_graph6("Eju?");
  auto s = seq({0, 1, 3, 2});
  CHECK(applicable_moves(g, s, MoveKind::ExternalInsert).empty());
  CHECK(applicable_moves(g, s, MoveKind::CrossingChord).empty());
  CHECK(applicable_moves(g, s, MoveKind::PathJoin).empty());
  auto moves = applicable_moves(g, s, MoveKind::Rotation);
  REQUIRE_FALSE(moves.empty());
  const Move& m = moves.front();
  CHECK(m.after == seq({3, 2, 1, 0}));
  CHECK(m.parameter("s") == 1);
  CHECK(m.parameter("u") == 3);
  CHECK(heavy_index(g, s) == 1);
  CHECK(heavy_index(g, m.after) == 2);
  CHECK(deficit_degree(g, m.after) == 1);
  CHECK(satisfies(g, m.after, CycleClass::ImplicitDirac));

  // Break (1, 3) of 0,1,3 in C5: the only candidate successor is 1, not a neighbour of 3.
  CHECK(failure_of([&] { move_rotation(fixtures::cycle(5), seq({0, 1, 3}), 1); }) ==
        MoveFailure::NoHeavyPredecessorNeighbor);
}

TEST_CASE("M4 path join") {
  Graph g = fixtures::two_triangles();
  auto s = seq({0, 1, 2, 3, 4, 5});
  auto d = decompose(g, s);
  REQUIRE(d.paths == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}});
  Move m = move_path_join(g, s, {0, 1, PathEnd::Head, PathEnd::Head});
  CHECK(m.after == seq({2, 1, 0, 3, 4, 5}));
  CHECK(m.potential_after.deficit == 1);
  CHECK(failure_of([&] {
          move_path_join(g, s, {0, 1, PathEnd::Tail, PathEnd::Tail});
        }) == MoveFailure::NoJoiningEdge);

  // Singleton paths of C5 joined along the edge 0-1.
  Graph c5 = fixtures::cycle(5);
  auto t = seq({0, 2, 4, 1, 3});
  auto dc = decompose(c5, t);
  REQUIRE(dc.paths[0] == std::vector<Vertex>{0});
  REQUIRE(dc.paths[3] == std::vector<Vertex>{1});
  Move j = move_path_join(c5, t, {0, 3, PathEnd::Head, PathEnd::Head});
  CHECK(j.after == seq({0, 1, 2, 4, 3}));
  CHECK(deficit_degree(c5, j.after) == 2);

  // Earliest two-path instance in the scan: C4 listed as 0,1,3,2.
  Graph c4 = parse_graph6("Cl");
  auto moves = applicable_moves(c4, seq({0, 1, 3, 2}), MoveKind::PathJoin);
  REQUIRE_FALSE(moves.empty());
  CHECK(moves.front().after == seq({1, 0, 3, 2}));
  CHECK(moves.front().potential_after == Potential{0, 0});
}

TEST_CASE("M5 heavy insert") {
  Graph hub = hub_graph();
  Move m = move_heavy_insert(hub, seq({0, 1, 2, 3}), 3);
  CHECK(m.after == seq({7, 0, 1, 2, 3}));
  CHECK(m.parameter("v") == 7);

  Move k = move_heavy_insert(fixtures::k33(), seq({0, 3, 1, 4, 2}), 4);
  CHECK(k.after == seq({5, 0, 3, 1, 4, 2}));
  CHECK(k.potential_after.deficit == 0);

  // Earliest hb-only gain in the scan.
  Graph g = parse_graph6("Eju?");
  auto s = seq({0, 1, 2});
  auto moves = applicable_moves(g, s, MoveKind::HeavyInsert);
  REQUIRE_FALSE(moves.empty());
  const Move& h = moves.front();
  CHECK(h.after == seq({3, 2, 1, 0}));
  CHECK(h.parameter("v") == 3);
  CHECK(deficit_degree(g, h.after) == deficit_degree(g, s));
  CHECK(heavy_index(g, h.after) == heavy_index(g, s) + 1);

  CHECK(failure_of([&] { move_heavy_insert(fixtures::complete(4), seq({0, 1, 2}), 2); }) ==
        MoveFailure::NotABreak);
  CHECK(failure_of([&] { move_heavy_insert(fixtures::cycle(5), seq({0, 2, 4, 1, 3}), 0); }) ==
        MoveFailure::NoHeavyExternalNeighbor);
}

TEST_CASE("M6 final reconstruction") {
  // P_1 = a b c d e f, P_2 = g h with a..h = 0..7, w = d, chords d-g and e-a.
  Graph g = fixtures::make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {3, 6}, {0, 4}});
  Move m = move_final_reconstruction(g, seq({0, 1, 2, 3, 4, 5, 6, 7}));
  CHECK(m.after == seq({7, 6, 3, 2, 1, 0, 4, 5}));
  CHECK(m.parameter("w") == 3);
  CHECK(m.potential_after.deficit == 1);

  // w^- = x_1: P_1 = 0 1 2 3, P_2 = 4 5, w = 1.
  Graph h = fixtures::make(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {1, 4}, {0, 2}});
  Move d = move_final_reconstruction(h, seq({0, 1, 2, 3, 4, 5}));
  CHECK(d.after == seq({5, 4, 1, 0, 2, 3}));

  // Earliest instance in the scan.
  Graph f = parse_graph6("D]w");
  Move s = move_final_reconstruction(f, seq({0, 1, 2, 4, 3}));
  CHECK(s.after == seq({3, 0, 2, 4, 1}));
  CHECK(s.potential_after == Potential{0, 0});

  CHECK(failure_of([&] { move_final_reconstruction(fixtures::k33(), seq({0, 3, 1, 4, 2})); }) ==
        MoveFailure::PatternNotPresent);
}

TEST_CASE("M0 reorder") {
  Graph c4 = parse_graph6("Cl");
  Move m = move_reorder(c4, seq({0, 1, 3, 2}), 0, 2);
  CHECK(m.kind == MoveKind::Reorder);
  CHECK(m.after == seq({2, 1, 0, 3}));
  CHECK(m.potential_after == Potential{0, 0});
  CHECK_THROWS_AS(move_reorder(c4, seq({0, 1, 3, 2}), 0, 1), Error);
}

TEST_CASE("certify") {
  auto k4 = certify_cyclable(fixtures::complete(4), seq({0, 1, 2, 3}));
  REQUIRE(k4.certified());
  CHECK(k4.trace().empty());
  CHECK(k4.cycle().cycle == seq({0, 1, 2, 3}));

  auto k33 = certify_cyclable(fixtures::k33(), seq({0, 3, 1, 4, 2}));
  REQUIRE(k33.certified());
  REQUIRE(k33.trace().size() == 1);
  CHECK(k33.trace()[0].kind == MoveKind::ExternalInsert);
  CHECK(k33.cycle().cycle == seq({5, 0, 3, 1, 4, 2}));

  CHECK_THROWS_AS(certify_cyclable(fixtures::cycle(5), seq({0, 2, 4, 1, 3})), NotAnIdCycle);
  MovePolicy strict;
  strict.strict = true;
  // io-cycle that is not an id-cycle.
  Graph io = parse_graph6("FavFG");
  CHECK_THROWS_AS(certify_cyclable(io, seq({6, 3, 1, 0, 5}), strict), NotAnIdCycle);
}

TEST_CASE("stuck id-cycle is fatal") {
  MovePolicy none;
  none.order.clear();
  try {
    certify_cyclable(fixtures::k33(), seq({0, 3, 1, 4, 2}), none);
    FAIL("expected StuckOnIdCycle");
  } catch (const StuckOnIdCycle& e) {
    CHECK(e.report().final_sequence == seq({0, 3, 1, 4, 2}));
    CHECK(e.report().input_class == "id-cycle");
  }
  CHECK_THROWS_AS(certify_cyclable(fixtures::k33(), seq({0, 3, 1, 4, 2}), none),
                  FatalInconsistency);
}

TEST_CASE("stuck io-cycle is reported") {
  // Found by the hunt harness; the oracle says the set is cyclable.
  Graph g = parse_graph6("FavFG");
  auto s = seq({6, 3, 1, 0, 5});
  REQUIRE(satisfies(g, s, CycleClass::ImplicitOre));
  REQUIRE_FALSE(satisfies(g, s, CycleClass::ImplicitDirac));
  auto r = certify_cyclable(g, s);
  REQUIRE_FALSE(r.certified());
  const StuckReport& rep = r.stuck().report;
  CHECK(rep.final_sequence == s);
  CHECK(rep.input_class == "io-cycle");
  CHECK(rep.break_pairs.size() == static_cast<std::size_t>(deficit_degree(g, s)));
  CHECK(rep.paths.size() == rep.break_pairs.size());
  CHECK(rep.unavailable_moves.size() == std::size(kAllMoves));
}

TEST_CASE("stuck analysis needs a break") {
  CHECK_THROWS_AS(analyze_stuck_state(fixtures::complete(4), seq({0, 1, 2, 3})),
                  PreconditionViolated);
}

TEST_CASE("debug revalidation from the environment") {
  setenv("IDCYCLE_DEBUG", "1", 1);
  CHECK(MovePolicy::from_environment().revalidate);
  auto r = certify_cyclable(fixtures::k33(), seq({0, 3, 1, 4, 2}), MovePolicy::from_environment());
  CHECK(r.certified());
  setenv("IDCYCLE_DEBUG", "0", 1);
  CHECK_FALSE(MovePolicy::from_environment().revalidate);
  unsetenv("IDCYCLE_DEBUG");
}
