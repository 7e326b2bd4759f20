#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "idcycle/error.hpp"
#include "idcycle/sequence.hpp"

namespace idcycle {

enum class MoveKind {
  Reorder,              // M0: reorder paths so two heavy endpoints meet, then close
  ExternalInsert,       // M1: splice a common outside neighbour into a break
  CrossingChord,        // M2: v_0 w^+ .. v_{p-1} w .. v_1
  Rotation,             // M3: reverse v_0..v_s towards a heavy predecessor-neighbour
  PathJoin,             // M4: merge two paths along an endpoint edge
  HeavyInsert,          // M5: prepend a heavy outside neighbour of v_0
  FinalReconstruction,  // M6: y_2 P_2 x_2 w w^- P_1 x_1 w^+ P_1 y_1
};
inline constexpr MoveKind kAllMoves[] = {MoveKind::Reorder,  MoveKind::ExternalInsert,
                                         MoveKind::CrossingChord, MoveKind::Rotation,
                                         MoveKind::PathJoin, MoveKind::HeavyInsert,
                                         MoveKind::FinalReconstruction};

std::string_view to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(std::string_view name);

// One applied move. Parameters are named integers (break index, witness ids, ...).
struct Move {
  MoveKind kind;
  std::vector<std::pair<std::string, int>> parameters;
  VertexSequence before;
  VertexSequence after;
  Potential potential_before;
  Potential potential_after;

  std::optional<int> parameter(std::string_view name) const;
};

enum class MoveFailure {
  NotABreak,
  NoWitness,
  NoChord,
  NoHeavyPredecessorNeighbor,
  NoJoiningEdge,
  NoHeavyExternalNeighbor,
  PatternNotPresent,
};
std::string_view to_string(MoveFailure failure);

class MoveNotApplicable : public Error {
 public:
  MoveNotApplicable(MoveFailure reason, const std::string& what)
      : Error(what), reason_(reason) {}
  MoveFailure reason() const { return reason_; }

 private:
  MoveFailure reason_;
};

// Rotates seq so the missing pair (v_i, v_{i+1}) becomes (v_{p-1}, v_0).
VertexSequence rotate_to_break(const VertexSequence& seq, std::size_t i);

// v_s v_{s-1} .. v_0 v_{s+1} .. v_{p-1}.
VertexSequence reverse_prefix(const VertexSequence& seq, std::size_t s);

// The individual moves. Break-indexed moves take i with (v_i, v_{i+1})
// missing and act with v_0 := v_{i+1}, v_{p-1} := v_i; call them on the
// reversed sequence to act on the other side of the break. Ties go to the
// smallest witness id. All throw MoveNotApplicable.
Move move_external_insert(const GraphContext& ctx, const VertexSequence& seq, std::size_t i);
Move move_crossing_chord(const GraphContext& ctx, const VertexSequence& seq, std::size_t i,
                         std::optional<Vertex> chord = std::nullopt);
Move move_rotation(const GraphContext& ctx, const VertexSequence& seq, std::size_t i);
Move move_heavy_insert(const GraphContext& ctx, const VertexSequence& seq, std::size_t i);

enum class PathEnd { Head, Tail };
struct PathJoinSpec {
  std::size_t path_a, path_b;  // indices into decompose(seq)
  PathEnd end_a, end_b;        // the joined endpoints
};
// P_a oriented to finish at end_a, then P_b starting at end_b, then the
// remaining paths in their original cyclic order and orientation.
Move move_path_join(const GraphContext& ctx, const VertexSequence& seq, PathJoinSpec spec);

// Reorders the paths so the heavy endpoints a and b become consecutive and
// closes the new break with an external insert or a crossing chord.
Move move_reorder(const GraphContext& ctx, const VertexSequence& seq, Vertex a, Vertex b);

// Two paths only: finds w interior to P_1 with w x_2 and w^+ x_1 edges
// across the four labelings (which path is P_1, which orientation).
Move move_final_reconstruction(const GraphContext& ctx, const VertexSequence& seq);

// Every applicable instance of a move kind on seq, in driver priority order
// (break index, then orientation, then witness id). Instances that would not
// lower the potential are excluded.
std::vector<Move> applicable_moves(const GraphContext& ctx, const VertexSequence& seq,
                                   MoveKind kind);

struct MovePolicy {
  // Priority order: def-decreasing moves first, then hb-increasing ones.
  std::vector<MoveKind> order{MoveKind::ExternalInsert, MoveKind::CrossingChord,
                              MoveKind::PathJoin,       MoveKind::Reorder,
                              MoveKind::FinalReconstruction, MoveKind::Rotation,
                              MoveKind::HeavyInsert};
  bool strict = false;       // require an id-cycle input
  bool revalidate = false;   // recheck class membership after every move
  std::size_t max_moves = 0; // 0: 4 p^2

  // revalidate set from IDCYCLE_DEBUG=1.
  static MovePolicy from_environment();
};

struct BreakDiagnosis {
  Vertex vertex;
  bool heavy;
  bool strange;
  std::string failed_conditions;
  std::optional<bool> containment;  // N2 within N^- within V(P_i), strange only
};

struct BreakPairDiagnosis {
  Vertex tail, head;  // the missing pair (v_{p-1}, v_0)
  bool degree_sum_at_least_n;
  bool external_common_neighbor;
  bool chord_available;
};

struct ClaimCheck {
  std::string name;
  bool holds;
};

struct StuckReport {
  VertexSequence final_sequence;
  BreakSets breaks;
  std::string input_class;  // "id-cycle" or "io-cycle"
  std::vector<std::vector<Vertex>> paths;
  std::vector<BreakDiagnosis> break_vertices;
  std::vector<BreakPairDiagnosis> break_pairs;
  std::vector<std::pair<Vertex, Vertex>> joining_edges;  // endpoint edges across paths
  bool break_vertices_heavy_or_strange;
  std::vector<ClaimCheck> claims;
  std::vector<std::string> unavailable_moves;
  std::vector<std::string> class_breaking_moves;  // applicable but leave the class
};

// Throws PreconditionViolated when seq is a cycle.
StuckReport analyze_stuck_state(const GraphContext& ctx, const VertexSequence& seq);

// Engine stuck on an id-cycle; carries the full diagnostic report.
class StuckOnIdCycle : public FatalInconsistency {
 public:
  StuckOnIdCycle(StuckReport report, const std::string& what)
      : FatalInconsistency(what), report_(std::move(report)) {}
  const StuckReport& report() const { return report_; }

 private:
  StuckReport report_;
};

struct Certified {
  VertexSequence cycle;
  std::vector<Move> trace;
};

struct Stuck {
  StuckReport report;
  std::vector<Move> trace;
};

struct CertificationResult {
  std::variant<Certified, Stuck> outcome;

  bool certified() const { return std::holds_alternative<Certified>(outcome); }
  const Certified& cycle() const { return std::get<Certified>(outcome); }
  const Stuck& stuck() const { return std::get<Stuck>(outcome); }
  const std::vector<Move>& trace() const;
};

// Drives (def, 2 def - hb) to (0, 0). Throws NotAnIdCycle when the input is
// not an io-cycle (or, in strict mode, not an id-cycle) and FatalInconsistency
// when an id-cycle input gets stuck.
CertificationResult certify_cyclable(const GraphContext& ctx, const VertexSequence& seq,
                                     const MovePolicy& policy = {});

}  // namespace idcycle
