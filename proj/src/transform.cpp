#include "idcycle/transform.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

namespace idcycle {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Reorder:
      return "M0-reorder";
    case MoveKind::ExternalInsert:
      return "M1-external-insert";
    case MoveKind::CrossingChord:
      return "M2-crossing-chord";
    case MoveKind::Rotation:
      return "M3-rotation";
    case MoveKind::PathJoin:
      return "M4-path-join";
    case MoveKind::HeavyInsert:
      return "M5-heavy-insert";
    case MoveKind::FinalReconstruction:
      return "M6-final-reconstruction";
  }
  return "?";
}

std::optional<MoveKind> move_kind_from_string(std::string_view name) {
  for (MoveKind k : kAllMoves) {
    auto full = to_string(k);
    if (name == full || name == full.substr(0, 2)) return k;
  }
  return std::nullopt;
}

std::string_view to_string(MoveFailure failure) {
  switch (failure) {
    case MoveFailure::NotABreak:
      return "NotABreak";
    case MoveFailure::NoWitness:
      return "NoWitness";
    case MoveFailure::NoChord:
      return "NoChord";
    case MoveFailure::NoHeavyPredecessorNeighbor:
      return "NoHeavyPredecessorNeighbor";
    case MoveFailure::NoJoiningEdge:
      return "NoJoiningEdge";
    case MoveFailure::NoHeavyExternalNeighbor:
      return "NoHeavyExternalNeighbor";
    case MoveFailure::PatternNotPresent:
      return "PatternNotPresent";
  }
  return "?";
}

std::optional<int> Move::parameter(std::string_view name) const {
  for (const auto& [key, value] : parameters)
    if (key == name) return value;
  return std::nullopt;
}

const std::vector<Move>& CertificationResult::trace() const {
  if (certified()) return cycle().trace;
  return stuck().trace;
}

VertexSequence rotate_to_break(const VertexSequence& seq, std::size_t i) {
  return seq.rotated((i + 1) % seq.size());
}

VertexSequence reverse_prefix(const VertexSequence& seq, std::size_t s) {
  auto v = seq.vertices();
  std::reverse(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s + 1));
  return VertexSequence(std::move(v));
}

namespace {

using Visitor = std::function<bool(Move&&)>;  // return true to stop

Move make_move(const GraphContext& ctx, MoveKind kind,
               std::vector<std::pair<std::string, int>> params, const VertexSequence& before,
               VertexSequence after) {
  Potential pb = potential(ctx, before);
  Potential pa = potential(ctx, after);
  return Move{kind, std::move(params), before, std::move(after), pb, pa};
}

bool is_break(const GraphContext& ctx, const VertexSequence& seq, std::size_t i) {
  return !ctx.adjacent(seq[i], seq.next(i));
}

std::vector<std::size_t> break_indices(const GraphContext& ctx, const VertexSequence& seq) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (is_break(ctx, seq, i)) out.push_back(i);
  return out;
}

// Common outside neighbours of the break ends, ascending.
std::vector<Vertex> external_common_neighbors(const GraphContext& ctx, const VertexSequence& r,
                                              const std::vector<int>& pos) {
  std::vector<Vertex> out;
  const Vertex head = r[0], tail = r[r.size() - 1];
  for (Vertex w : ctx.graph().neighbors(head))
    if (pos[w] < 0 && ctx.adjacent(w, tail)) out.push_back(w);
  return out;
}

// Chord candidates on a sequence rotated so the break is (r[p-1], r[0]): the
// positions t of w = r[t] with w r[p-1] and r[t+1] r[0] edges, ordered by w.
std::vector<std::size_t> chord_positions(const GraphContext& ctx, const VertexSequence& r) {
  const std::size_t p = r.size();
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t + 1 < p; ++t)
    if (ctx.adjacent(r[p - 1], r[t]) && ctx.adjacent(r[0], r[t + 1])) out.push_back(t);
  std::sort(out.begin(), out.end(), [&](auto a, auto b) { return r[a] < r[b]; });
  return out;
}

// v_0 w^+ C' v_{p-1} w reverse(C') v_1, with w = r[t].
VertexSequence apply_chord(const VertexSequence& r, std::size_t t) {
  const std::size_t p = r.size();
  std::vector<Vertex> out{r[0]};
  for (std::size_t k = t + 1; k < p; ++k) out.push_back(r[k]);
  for (std::size_t k = t; k >= 1; --k) out.push_back(r[k]);
  return VertexSequence(std::move(out));
}

VertexSequence prepend(Vertex w, const VertexSequence& r) {
  std::vector<Vertex> out{w};
  out.insert(out.end(), r.vertices().begin(), r.vertices().end());
  return VertexSequence(std::move(out));
}

// Counting guarantee: when the break ends have degree sum at
// least n and no common outside neighbour, a chord must exist.
void assert_chord_counting(const GraphContext& ctx, const VertexSequence& r,
                           bool has_external, bool has_chord) {
  const Vertex head = r[0], tail = r[r.size() - 1];
  if (ctx.degree(head) + ctx.degree(tail) >= ctx.n() && !has_external && !has_chord)
    throw FatalInconsistency("chord counting failed at break (" + std::to_string(tail) + ", " +
                             std::to_string(head) + ") of " + format_sequence(r));
}

// Orientations: 0 keeps seq, 1 acts on seq.reversed(). Break indices are
// relative to the oriented sequence.
template <typename PerBreak>
bool for_each_break(const GraphContext& ctx, const VertexSequence& seq, bool both_orientations,
                    PerBreak&& per_break) {
  for (int orientation = 0; orientation < (both_orientations ? 2 : 1); ++orientation) {
    const VertexSequence oriented = orientation ? seq.reversed() : seq;
    for (std::size_t i : break_indices(ctx, oriented))
      if (per_break(oriented, i, orientation)) return true;
  }
  return false;
}

bool visit_external_insert(const GraphContext& ctx, const VertexSequence& seq,
                           const VertexSequence& oriented, std::size_t i, int orientation,
                           const Visitor& visit) {
  auto r = rotate_to_break(oriented, i);
  auto pos = positions(ctx, r);
  for (Vertex w : external_common_neighbors(ctx, r, pos)) {
    if (visit(make_move(ctx, MoveKind::ExternalInsert,
                        {{"orientation", orientation}, {"break_index", int(i)}, {"w", w}}, seq,
                        prepend(w, r))))
      return true;
  }
  return false;
}

bool visit_crossing_chord(const GraphContext& ctx, const VertexSequence& seq,
                          const VertexSequence& oriented, std::size_t i, int orientation,
                          const Visitor& visit) {
  auto r = rotate_to_break(oriented, i);
  auto chords = chord_positions(ctx, r);
  auto pos = positions(ctx, r);
  assert_chord_counting(ctx, r, !external_common_neighbors(ctx, r, pos).empty(),
                        !chords.empty());
  for (std::size_t t : chords) {
    if (visit(make_move(ctx, MoveKind::CrossingChord,
                        {{"orientation", orientation},
                         {"break_index", int(i)},
                         {"w", r[t]},
                         {"w_plus", r[t + 1]}},
                        seq, apply_chord(r, t))))
      return true;
  }
  return false;
}

bool visit_rotation(const GraphContext& ctx, const VertexSequence& seq,
                    const VertexSequence& oriented, std::size_t i, int orientation,
                    const Visitor& visit) {
  auto r = rotate_to_break(oriented, i);
  const std::size_t p = r.size();
  const Vertex head = r[0];
  const int def = deficit_degree(ctx, r);
  std::vector<std::size_t> pivots;
  for (std::size_t s = 1; s + 1 < p; ++s)
    if (ctx.adjacent(head, r[s + 1]) && ctx.degree(r[s]) >= ctx.implicit_degree(head))
      pivots.push_back(s);
  std::sort(pivots.begin(), pivots.end(), [&](auto a, auto b) { return r[a] < r[b]; });
  for (std::size_t s : pivots) {
    auto after = reverse_prefix(r, s);
    // A heavy v_0 leaves hb unchanged, so only a def drop would help.
    if (ctx.heavy(head) && deficit_degree(ctx, after) >= def) continue;
    if (visit(make_move(ctx, MoveKind::Rotation,
                        {{"orientation", orientation},
                         {"break_index", int(i)},
                         {"s", int(s)},
                         {"u", r[s]}},
                        seq, std::move(after))))
      return true;
  }
  return false;
}

bool visit_heavy_insert(const GraphContext& ctx, const VertexSequence& seq,
                        const VertexSequence& oriented, std::size_t i, int orientation,
                        const Visitor& visit) {
  auto r = rotate_to_break(oriented, i);
  auto pos = positions(ctx, r);
  const Vertex head = r[0], tail = r[r.size() - 1];
  for (Vertex v : ctx.graph().neighbors(head)) {
    if (pos[v] >= 0 || ctx.degree(v) < ctx.implicit_degree(head)) continue;
    if (ctx.heavy(head) && !ctx.adjacent(v, tail)) continue;
    if (visit(make_move(ctx, MoveKind::HeavyInsert,
                        {{"orientation", orientation}, {"break_index", int(i)}, {"v", v}}, seq,
                        prepend(v, r))))
      return true;
  }
  return false;
}

std::vector<Vertex> oriented_path(const std::vector<Vertex>& path, bool reverse) {
  return reverse ? std::vector<Vertex>(path.rbegin(), path.rend()) : path;
}

Vertex endpoint(const PathDecomposition& dec, std::size_t i, PathEnd end) {
  return end == PathEnd::Head ? dec.head(i) : dec.tail(i);
}

// P_a finishing at end_a, P_b starting at end_b, then the other paths.
VertexSequence join_paths(const PathDecomposition& dec, PathJoinSpec spec) {
  std::vector<Vertex> out = oriented_path(dec.paths[spec.path_a], spec.end_a == PathEnd::Head);
  auto second = oriented_path(dec.paths[spec.path_b], spec.end_b == PathEnd::Tail);
  out.insert(out.end(), second.begin(), second.end());
  const std::size_t s = dec.count();
  for (std::size_t k = 1; k < s; ++k) {
    std::size_t idx = (spec.path_a + k) % s;
    if (idx == spec.path_b) continue;
    out.insert(out.end(), dec.paths[idx].begin(), dec.paths[idx].end());
  }
  return VertexSequence(std::move(out));
}

struct EndpointRef {
  std::size_t path;
  PathEnd end;
  Vertex vertex;
};

std::vector<EndpointRef> endpoints(const PathDecomposition& dec) {
  std::vector<EndpointRef> out;
  for (std::size_t i = 0; i < dec.count(); ++i) {
    out.push_back({i, PathEnd::Head, dec.head(i)});
    if (dec.paths[i].size() > 1) out.push_back({i, PathEnd::Tail, dec.tail(i)});
  }
  return out;
}

// Endpoint pairs on distinct paths ordered by (smaller id, larger id).
template <typename Pred>
std::vector<std::pair<EndpointRef, EndpointRef>> endpoint_pairs(const PathDecomposition& dec,
                                                                Pred&& pred) {
  auto ends = endpoints(dec);
  std::vector<std::pair<EndpointRef, EndpointRef>> out;
  for (std::size_t a = 0; a < ends.size(); ++a)
    for (std::size_t b = a + 1; b < ends.size(); ++b)
      if (ends[a].path != ends[b].path && pred(ends[a].vertex, ends[b].vertex)) {
        auto lo = ends[a], hi = ends[b];
        if (hi.vertex < lo.vertex) std::swap(lo, hi);
        out.emplace_back(lo, hi);
      }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair{x.first.vertex, x.second.vertex} <
           std::pair{y.first.vertex, y.second.vertex};
  });
  return out;
}

bool visit_path_join(const GraphContext& ctx, const VertexSequence& seq, const Visitor& visit) {
  if (deficit_degree(ctx, seq) < 2) return false;
  auto dec = decompose(ctx, seq);
  auto pairs = endpoint_pairs(dec, [&](Vertex u, Vertex v) { return ctx.adjacent(u, v); });
  for (const auto& [a, b] : pairs) {
    PathJoinSpec spec{a.path, b.path, a.end, b.end};
    if (visit(make_move(ctx, MoveKind::PathJoin,
                        {{"path_a", int(a.path)},
                         {"path_b", int(b.path)},
                         {"a", a.vertex},
                         {"b", b.vertex}},
                        seq, join_paths(dec, spec))))
      return true;
  }
  return false;
}

// Closes the break (v_{p-1}, v_0) of r with the first external insert or
// chord; nullopt when neither exists.
std::optional<std::pair<VertexSequence, std::vector<std::pair<std::string, int>>>> close_break(
    const GraphContext& ctx, const VertexSequence& r) {
  auto pos = positions(ctx, r);
  auto external = external_common_neighbors(ctx, r, pos);
  if (!external.empty())
    return std::pair{prepend(external.front(), r),
                     std::vector<std::pair<std::string, int>>{{"closing", 1},
                                                              {"w", external.front()}}};
  for (int orientation = 0; orientation < 2; ++orientation) {
    // Reversal keeps the break at the seam, as (r[0], r[p-1]).
    auto oriented = orientation ? r.reversed() : r;
    auto chords = chord_positions(ctx, oriented);
    if (!chords.empty())
      return std::pair{apply_chord(oriented, chords.front()),
                       std::vector<std::pair<std::string, int>>{
                           {"closing", 2}, {"w", oriented[chords.front()]}}};
  }
  return std::nullopt;
}

bool visit_reorder(const GraphContext& ctx, const VertexSequence& seq, const Visitor& visit) {
  if (deficit_degree(ctx, seq) < 2) return false;
  auto dec = decompose(ctx, seq);
  auto pairs = endpoint_pairs(
      dec, [&](Vertex u, Vertex v) { return ctx.degree(u) + ctx.degree(v) >= ctx.n(); });
  for (const auto& [a, b] : pairs) {
    // a finishes its path, b starts the next: the seam (a, b) is the new break.
    PathJoinSpec spec{a.path, b.path, a.end, b.end};
    auto joined = join_paths(dec, spec);
    std::vector<std::pair<std::string, int>> params{{"a", a.vertex}, {"b", b.vertex}};
    std::optional<VertexSequence> after;
    if (ctx.adjacent(a.vertex, b.vertex)) {
      params.emplace_back("closing", 0);
      after = joined;
    } else {
      auto r = rotate_to_break(joined, dec.paths[a.path].size() - 1);
      auto closed = close_break(ctx, r);
      if (!closed)
        throw FatalInconsistency("chord counting failed at reordered break (" +
                                 std::to_string(a.vertex) + ", " + std::to_string(b.vertex) +
                                 ") of " + format_sequence(r));
      params.insert(params.end(), closed->second.begin(), closed->second.end());
      after = std::move(closed->first);
    }
    if (visit(make_move(ctx, MoveKind::Reorder, std::move(params), seq, std::move(*after))))
      return true;
  }
  return false;
}

bool visit_final_reconstruction(const GraphContext& ctx, const VertexSequence& seq,
                                const Visitor& visit) {
  if (deficit_degree(ctx, seq) != 2) return false;
  for (int orientation = 0; orientation < 2; ++orientation) {
    auto oriented = orientation ? seq.reversed() : seq;
    auto dec = decompose(ctx, oriented);
    for (std::size_t first = 0; first < 2; ++first) {
      const auto& p1 = dec.paths[first];
      const auto& p2 = dec.paths[1 - first];
      const Vertex x1 = p1.front(), x2 = p2.front();
      std::vector<std::size_t> spots;
      for (std::size_t t = 1; t + 1 < p1.size(); ++t)
        if (ctx.adjacent(x2, p1[t]) && ctx.adjacent(x1, p1[t + 1])) spots.push_back(t);
      std::sort(spots.begin(), spots.end(), [&](auto a, auto b) { return p1[a] < p1[b]; });
      for (std::size_t t : spots) {
        std::vector<Vertex> out(p2.rbegin(), p2.rend());
        for (std::size_t k = t + 1; k-- > 0;) out.push_back(p1[k]);
        out.insert(out.end(), p1.begin() + static_cast<std::ptrdiff_t>(t + 1), p1.end());
        if (visit(make_move(ctx, MoveKind::FinalReconstruction,
                            {{"orientation", orientation},
                             {"first_path", int(first)},
                             {"x1", x1},
                             {"x2", x2},
                             {"w", p1[t]}},
                            seq, VertexSequence(std::move(out)))))
          return true;
      }
    }
  }
  return false;
}

bool visit_moves(const GraphContext& ctx, const VertexSequence& seq, MoveKind kind,
                 const Visitor& visit) {
  auto per_break = [&](auto fn, bool both) {
    return for_each_break(ctx, seq, both, [&](const VertexSequence& o, std::size_t i, int ori) {
      return fn(ctx, seq, o, i, ori, visit);
    });
  };
  switch (kind) {
    case MoveKind::ExternalInsert:
      return per_break(visit_external_insert, false);
    case MoveKind::CrossingChord:
      return per_break(visit_crossing_chord, true);
    case MoveKind::Rotation:
      return per_break(visit_rotation, true);
    case MoveKind::HeavyInsert:
      return per_break(visit_heavy_insert, true);
    case MoveKind::PathJoin:
      return visit_path_join(ctx, seq, visit);
    case MoveKind::Reorder:
      return visit_reorder(ctx, seq, visit);
    case MoveKind::FinalReconstruction:
      return visit_final_reconstruction(ctx, seq, visit);
  }
  return false;
}

using BreakVisitor = bool (*)(const GraphContext&, const VertexSequence&, const VertexSequence&,
                              std::size_t, int, const Visitor&);

Move first_at_break(const GraphContext& ctx, const VertexSequence& seq, std::size_t i,
                    BreakVisitor fn, MoveFailure failure, std::string_view what) {
  seq.validate_for(ctx.graph());
  if (i >= seq.size() || !is_break(ctx, seq, i))
    throw MoveNotApplicable(MoveFailure::NotABreak,
                            "position " + std::to_string(i) + " is not a break");
  std::optional<Move> found;
  fn(ctx, seq, seq, i, 0, [&](Move&& m) {
    found = std::move(m);
    return true;
  });
  if (!found) throw MoveNotApplicable(failure, std::string(what));
  return std::move(*found);
}

}  // namespace

Move move_external_insert(const GraphContext& ctx, const VertexSequence& seq, std::size_t i) {
  return first_at_break(ctx, seq, i, visit_external_insert, MoveFailure::NoWitness,
                        "no outside vertex adjacent to both break ends");
}

Move move_crossing_chord(const GraphContext& ctx, const VertexSequence& seq, std::size_t i,
                         std::optional<Vertex> chord) {
  if (!chord)
    return first_at_break(ctx, seq, i, visit_crossing_chord, MoveFailure::NoChord,
                          "no chord w with w^+ v_0 and w v_{p-1} edges");
  seq.validate_for(ctx.graph());
  if (i >= seq.size() || !is_break(ctx, seq, i))
    throw MoveNotApplicable(MoveFailure::NotABreak,
                            "position " + std::to_string(i) + " is not a break");
  auto r = rotate_to_break(seq, i);
  for (std::size_t t : chord_positions(ctx, r))
    if (r[t] == *chord)
      return make_move(ctx, MoveKind::CrossingChord,
                       {{"orientation", 0}, {"break_index", int(i)}, {"w", r[t]},
                        {"w_plus", r[t + 1]}},
                       seq, apply_chord(r, t));
  throw MoveNotApplicable(MoveFailure::NoChord,
                          "vertex " + std::to_string(*chord) + " is not a chord");
}

Move move_rotation(const GraphContext& ctx, const VertexSequence& seq, std::size_t i) {
  return first_at_break(ctx, seq, i, visit_rotation, MoveFailure::NoHeavyPredecessorNeighbor,
                        "no predecessor-neighbour u with d(u) >= d1(v_0)");
}

Move move_heavy_insert(const GraphContext& ctx, const VertexSequence& seq, std::size_t i) {
  return first_at_break(ctx, seq, i, visit_heavy_insert, MoveFailure::NoHeavyExternalNeighbor,
                        "no outside neighbour v of v_0 with d(v) >= d1(v_0)");
}

Move move_path_join(const GraphContext& ctx, const VertexSequence& seq, PathJoinSpec spec) {
  auto dec = decompose(ctx, seq);
  if (spec.path_a >= dec.count() || spec.path_b >= dec.count() || spec.path_a == spec.path_b)
    throw MoveNotApplicable(MoveFailure::NoJoiningEdge, "path indices must be distinct");
  Vertex a = endpoint(dec, spec.path_a, spec.end_a);
  Vertex b = endpoint(dec, spec.path_b, spec.end_b);
  if (!ctx.adjacent(a, b))
    throw MoveNotApplicable(MoveFailure::NoJoiningEdge, "endpoints " + std::to_string(a) +
                                                            " and " + std::to_string(b) +
                                                            " are not adjacent");
  return make_move(ctx, MoveKind::PathJoin,
                   {{"path_a", int(spec.path_a)}, {"path_b", int(spec.path_b)}, {"a", a},
                    {"b", b}},
                   seq, join_paths(dec, spec));
}

Move move_reorder(const GraphContext& ctx, const VertexSequence& seq, Vertex a, Vertex b) {
  std::optional<Move> found;
  visit_reorder(ctx, seq, [&](Move&& m) {
    auto ma = m.parameter("a"), mb = m.parameter("b");
    if ((ma == a && mb == b) || (ma == b && mb == a)) {
      found = std::move(m);
      return true;
    }
    return false;
  });
  if (!found)
    throw MoveNotApplicable(MoveFailure::PatternNotPresent,
                            "endpoints " + std::to_string(a) + " and " + std::to_string(b) +
                                " are not a heavy pair on distinct paths");
  return std::move(*found);
}

Move move_final_reconstruction(const GraphContext& ctx, const VertexSequence& seq) {
  std::optional<Move> found;
  visit_final_reconstruction(ctx, seq, [&](Move&& m) {
    found = std::move(m);
    return true;
  });
  if (!found)
    throw MoveNotApplicable(MoveFailure::PatternNotPresent,
                            "no two-path reconstruction pattern in " + format_sequence(seq));
  return std::move(*found);
}

std::vector<Move> applicable_moves(const GraphContext& ctx, const VertexSequence& seq,
                                   MoveKind kind) {
  seq.validate_for(ctx.graph());
  std::vector<Move> out;
  visit_moves(ctx, seq, kind, [&](Move&& m) {
    if (m.potential_after < m.potential_before) out.push_back(std::move(m));
    return false;
  });
  return out;
}

MovePolicy MovePolicy::from_environment() {
  MovePolicy policy;
  const char* debug = std::getenv("IDCYCLE_DEBUG");
  policy.revalidate = debug != nullptr && std::string_view(debug) == "1";
  return policy;
}

StuckReport analyze_stuck_state(const GraphContext& ctx, const VertexSequence& seq) {
  seq.validate_for(ctx.graph());
  const int def = deficit_degree(ctx, seq);
  if (def == 0)
    throw PreconditionViolated("stuck-state analysis needs a break; " + format_sequence(seq) +
                               " is a cycle");
  auto cls = classify(ctx, seq);
  auto dec = decompose(ctx, seq);
  StuckReport report{seq, break_sets(ctx, seq),
                     cls.is_id_cycle ? "id-cycle" : (cls.is_io_cycle ? "io-cycle" : "none"),
                     dec.paths, {}, {}, {}, false, {}, {}, {}};

  for (Vertex v : report.breaks.bre) {
    auto test = is_strange_vertex(ctx, seq, v);
    BreakDiagnosis d{v, ctx.heavy(v), test.strange, test.failed, std::nullopt};
    if (test.strange) d.containment = second_neighborhood_contained(ctx, seq, v);
    report.break_vertices.push_back(std::move(d));
  }
  report.break_vertices_heavy_or_strange =
      std::all_of(report.break_vertices.begin(), report.break_vertices.end(),
                  [](const BreakDiagnosis& d) { return d.heavy || d.strange; });

  for (std::size_t i : break_indices(ctx, seq)) {
    auto r = rotate_to_break(seq, i);
    auto pos = positions(ctx, r);
    BreakPairDiagnosis pair{r[r.size() - 1], r[0],
                            ctx.degree(r[0]) + ctx.degree(r[r.size() - 1]) >= ctx.n(),
                            !external_common_neighbors(ctx, r, pos).empty(),
                            !chord_positions(ctx, r).empty() ||
                                !chord_positions(ctx, r.reversed()).empty()};
    report.break_pairs.push_back(pair);
  }

  for (const auto& [a, b] :
       endpoint_pairs(dec, [&](Vertex u, Vertex v) { return ctx.adjacent(u, v); }))
    report.joining_edges.emplace_back(a.vertex, b.vertex);

  int heavy_heads = 0, strange_heads = 0;
  for (std::size_t i = 0; i < dec.count(); ++i) {
    if (ctx.heavy(dec.head(i))) ++heavy_heads;
    if (is_strange_vertex(ctx, seq, dec.head(i)).strange) ++strange_heads;
  }
  report.claims = {{"deficit_at_least_two", def >= 2},
                   {"at_most_one_heavy_head", heavy_heads <= 1},
                   {"at_most_one_strange_head", strange_heads <= 1},
                   {"deficit_exactly_two", def == 2}};

  const CycleClass target =
      cls.is_id_cycle ? CycleClass::ImplicitDirac : CycleClass::ImplicitOre;
  for (MoveKind kind : kAllMoves) {
    auto moves = applicable_moves(ctx, seq, kind);
    bool preserving = std::any_of(moves.begin(), moves.end(), [&](const Move& m) {
      return satisfies(ctx, m.after, target);
    });
    if (!preserving) report.unavailable_moves.emplace_back(to_string(kind));
    if (!moves.empty() && !preserving)
      report.class_breaking_moves.emplace_back(to_string(kind));
  }
  return report;
}

namespace {

bool contains_all(const GraphContext& ctx, const VertexSequence& before,
                  const VertexSequence& after) {
  auto pos = positions(ctx, after);
  return std::all_of(before.vertices().begin(), before.vertices().end(),
                     [&](Vertex v) { return pos[v] >= 0; });
}

}  // namespace

CertificationResult certify_cyclable(const GraphContext& ctx, const VertexSequence& seq,
                                     const MovePolicy& policy) {
  auto cls = classify(ctx, seq);
  if (policy.strict && !cls.is_id_cycle)
    throw NotAnIdCycle(format_sequence(seq) + " is not an id-cycle");
  if (!cls.is_io_cycle)
    throw NotAnIdCycle(format_sequence(seq) + " is not even an io-cycle");

  const bool id_input = cls.is_id_cycle;
  const CycleClass target = id_input ? CycleClass::ImplicitDirac : CycleClass::ImplicitOre;
  const bool check_class = !id_input || policy.revalidate;

  std::vector<Move> trace;
  VertexSequence current = seq;
  Potential pot = potential(ctx, current);
  while (pot.deficit > 0) {
    const std::size_t p = current.size();
    const std::size_t cap = policy.max_moves ? policy.max_moves : 4 * p * p;
    if (trace.size() >= cap)
      throw FatalInconsistency("trace exceeded " + std::to_string(cap) + " moves");

    std::optional<Move> chosen;
    for (MoveKind kind : policy.order) {
      visit_moves(ctx, current, kind, [&](Move&& m) {
        if (!(m.potential_after < pot)) {
          // Off the id-cycle class the heaviness guarantees of M3/M5 lapse.
          if (!id_input) return false;
          throw FatalInconsistency(std::string(to_string(kind)) +
                                   " did not lower the potential on " + format_sequence(current));
        }
        if (!contains_all(ctx, current, m.after))
          throw FatalInconsistency(std::string(to_string(kind)) + " dropped a vertex");
        if (check_class && !satisfies(ctx, m.after, target)) {
          if (id_input)
            throw FatalInconsistency(std::string(to_string(kind)) +
                                     " left the id-cycle class on " + format_sequence(current));
          return false;
        }
        chosen = std::move(m);
        return true;
      });
      if (chosen) break;
    }
    if (!chosen) {
      auto report = analyze_stuck_state(ctx, current);
      if (id_input)
        throw StuckOnIdCycle(std::move(report),
                             "engine stuck on id-cycle " + format_sequence(current));
      return {Stuck{std::move(report), std::move(trace)}};
    }
    current = chosen->after;
    pot = chosen->potential_after;
    trace.push_back(std::move(*chosen));
  }
  // Edge-by-edge soundness check of the final cycle.
  for (std::size_t i = 0; i < current.size(); ++i)
    if (!ctx.adjacent(current[i], current.next(i)))
      throw FatalInconsistency("certified sequence is not a cycle");
  return {Certified{std::move(current), std::move(trace)}};
}

}  // namespace idcycle
