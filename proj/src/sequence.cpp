#include "idcycle/sequence.hpp"

#include <algorithm>
#include <charconv>

#include "idcycle/error.hpp"

namespace idcycle {

VertexSequence::VertexSequence(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3)
    throw InvalidSequence("sequence needs at least 3 vertices, got " +
                          std::to_string(vertices_.size()));
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw InvalidSequence("negative vertex id");
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw InvalidSequence("vertex " + std::to_string(*dup) + " repeated");
}

VertexSequence VertexSequence::rotated(std::size_t start) const {
  std::vector<Vertex> out(vertices_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[start + i];
  return VertexSequence(std::move(out));
}

VertexSequence VertexSequence::reversed() const {
  return VertexSequence(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

void VertexSequence::validate_for(const Graph& g) const {
  for (Vertex v : vertices_)
    if (v >= g.order())
      throw InvalidSequence("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(g.order()));
}

VertexSequence parse_sequence(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("bad vertex id '" + std::string(token) + "' in sequence");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return VertexSequence(std::move(out));
}

std::string format_sequence(const VertexSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out;
}

std::string_view to_string(CycleClass c) {
  switch (c) {
    case CycleClass::Cycle:
      return "cycle";
    case CycleClass::Dirac:
      return "d-cycle";
    case CycleClass::Ore:
      return "o-cycle";
    case CycleClass::ImplicitDirac:
      return "id-cycle";
    case CycleClass::ImplicitOre:
      return "io-cycle";
  }
  return "?";
}

bool pair_satisfies(const GraphContext& ctx, Vertex u, Vertex v, CycleClass c) {
  if (ctx.adjacent(u, v)) return true;
  const int n = ctx.n();
  switch (c) {
    case CycleClass::Cycle:
      return false;
    case CycleClass::Dirac:
      return ctx.heavy(u) && ctx.heavy(v);
    case CycleClass::Ore:
      return ctx.degree(u) + ctx.degree(v) >= n;
    case CycleClass::ImplicitDirac:
      return ctx.implicit_heavy(u) && ctx.implicit_heavy(v);
    case CycleClass::ImplicitOre:
      return ctx.implicit_degree(u) + ctx.implicit_degree(v) >= n;
  }
  return false;
}

bool SequenceClass::has(CycleClass c) const {
  switch (c) {
    case CycleClass::Cycle:
      return is_cycle;
    case CycleClass::Dirac:
      return is_d_cycle;
    case CycleClass::Ore:
      return is_o_cycle;
    case CycleClass::ImplicitDirac:
      return is_id_cycle;
    case CycleClass::ImplicitOre:
      return is_io_cycle;
  }
  return false;
}

SequenceClass classify(const GraphContext& ctx, const VertexSequence& seq) {
  seq.validate_for(ctx.graph());
  SequenceClass out;
  bool* flags[5] = {&out.is_cycle, &out.is_d_cycle, &out.is_o_cycle, &out.is_id_cycle,
                    &out.is_io_cycle};
  for (int c = 0; c < 5; ++c) {
    *flags[c] = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!pair_satisfies(ctx, seq[i], seq.next(i), kAllClasses[c])) {
        *flags[c] = false;
        out.witness[c] = std::pair{seq[i], seq.next(i)};
        break;
      }
    }
  }
  // Containments between the condition strengths.
  if ((out.is_cycle && !out.is_d_cycle) || (out.is_d_cycle && !out.is_id_cycle) ||
      (out.is_id_cycle && !out.is_io_cycle) || (out.is_d_cycle && !out.is_o_cycle) ||
      (out.is_o_cycle && !out.is_io_cycle))
    throw FatalInconsistency("class containment violated for " + format_sequence(seq));
  return out;
}

bool satisfies(const GraphContext& ctx, const VertexSequence& seq, CycleClass c) {
  seq.validate_for(ctx.graph());
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!pair_satisfies(ctx, seq[i], seq.next(i), c)) return false;
  return true;
}

int deficit_degree(const GraphContext& ctx, const VertexSequence& seq) {
  seq.validate_for(ctx.graph());
  int def = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!ctx.adjacent(seq[i], seq.next(i))) ++def;
  return def;
}

BreakSets break_sets(const GraphContext& ctx, const VertexSequence& seq) {
  seq.validate_for(ctx.graph());
  BreakSets out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!ctx.adjacent(seq[i], seq.next(i))) {
      out.bre_plus.push_back(seq[i]);
      out.bre_minus.push_back(seq.next(i));
    }
  }
  std::sort(out.bre_plus.begin(), out.bre_plus.end());
  std::sort(out.bre_minus.begin(), out.bre_minus.end());
  std::set_union(out.bre_plus.begin(), out.bre_plus.end(), out.bre_minus.begin(),
                 out.bre_minus.end(), std::back_inserter(out.bre));
  for (Vertex v : out.bre) {
    if (ctx.heavy(v)) out.hb.push_back(v);
    if (is_strange_vertex(ctx, seq, v).strange) out.str.push_back(v);
  }
  return out;
}

int heavy_index(const GraphContext& ctx, const VertexSequence& seq) {
  return 2 * deficit_degree(ctx, seq) - potential(ctx, seq).slack;
}

Potential potential(const GraphContext& ctx, const VertexSequence& seq) {
  seq.validate_for(ctx.graph());
  int def = 0, hb = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex u = seq[i], v = seq.next(i);
    if (!ctx.adjacent(u, v)) {
      ++def;
      hb += ctx.heavy(u) + ctx.heavy(v);
    }
  }
  return {def, 2 * def - hb};
}

std::vector<int> positions(const GraphContext& ctx, const VertexSequence& seq) {
  std::vector<int> pos(static_cast<std::size_t>(ctx.n()), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
  return pos;
}

PathDecomposition decompose(const GraphContext& ctx, const VertexSequence& seq) {
  seq.validate_for(ctx.graph());
  const std::size_t p = seq.size();
  std::size_t start = p;
  for (std::size_t i = 0; i < p; ++i) {
    if (!ctx.adjacent(seq.prev(i), seq[i])) {
      start = i;
      break;
    }
  }
  if (start == p) throw NoBreaks("sequence " + format_sequence(seq) + " is a cycle");

  PathDecomposition out;
  out.path_of.assign(static_cast<std::size_t>(ctx.n()), PathDecomposition::npos);
  for (std::size_t k = 0; k < p; ++k) {
    Vertex v = seq[start + k];
    if (k == 0 || !ctx.adjacent(seq[start + k - 1], v)) out.paths.emplace_back();
    out.paths.back().push_back(v);
    out.path_of[v] = out.paths.size() - 1;
  }
  return out;
}

std::vector<Vertex> predecessor_neighborhood(const GraphContext& ctx,
                                             const VertexSequence& seq, Vertex v) {
  seq.validate_for(ctx.graph());
  auto pos = positions(ctx, seq);
  if (v < 0 || v >= ctx.n() || pos[v] < 0)
    throw NotOnSequence("vertex " + std::to_string(v) + " is not on the sequence");
  std::vector<Vertex> out;
  for (Vertex u : ctx.graph().neighbors(v))
    if (pos[u] >= 0) out.push_back(seq.prev(static_cast<std::size_t>(pos[u])));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Strangeness of the head x_i of path i.
StrangeTest strange_as_head(const GraphContext& ctx, const PathDecomposition& dec,
                            std::size_t i) {
  StrangeTest out;
  const Vertex u = dec.head(i);
  const auto& path = dec.paths[i];
  if (ctx.heavy(u)) out.failed += 'a';
  bool b_ok = true, c_ok = true;
  for (Vertex v : ctx.graph().neighbors(u)) {
    std::size_t owner = dec.path_of[v];
    if (owner == PathDecomposition::npos) {
      if (ctx.degree(v) >= ctx.implicit_degree(u)) b_ok = false;
    } else if (owner != i) {
      c_ok = false;
    }
  }
  if (!b_ok) out.failed += 'b';
  if (!c_ok) out.failed += 'c';
  if (path.size() < 3 || !ctx.adjacent(u, path.back())) out.failed += 'd';
  out.strange = out.failed.empty();
  return out;
}

// Locates u as an endpoint; returns the sequence orientation in which u is the
// head of its path, plus that decomposition and path index.
struct HeadView {
  VertexSequence seq;
  PathDecomposition dec;
  std::size_t path;
};

HeadView head_view(const GraphContext& ctx, const VertexSequence& seq, Vertex u) {
  auto dec = decompose(ctx, seq);
  if (u < 0 || u >= ctx.n() || dec.path_of[u] == PathDecomposition::npos)
    throw NotAnEndpoint("vertex " + std::to_string(u) + " is not on the sequence");
  std::size_t i = dec.path_of[u];
  if (dec.head(i) == u) return {seq, std::move(dec), i};
  if (dec.tail(i) != u)
    throw NotAnEndpoint("vertex " + std::to_string(u) + " is interior to its path");
  auto rev = seq.reversed();
  auto rdec = decompose(ctx, rev);
  std::size_t j = rdec.path_of[u];
  return {rev, std::move(rdec), j};
}

}  // namespace

StrangeTest is_strange_vertex(const GraphContext& ctx, const VertexSequence& seq, Vertex u) {
  auto view = head_view(ctx, seq, u);
  return strange_as_head(ctx, view.dec, view.path);
}

bool second_neighborhood_contained(const GraphContext& ctx, const VertexSequence& seq,
                                   Vertex u) {
  auto view = head_view(ctx, seq, u);
  auto second = second_neighborhood(ctx.graph(), u);
  auto pred = predecessor_neighborhood(ctx, view.seq, u);
  if (!std::includes(pred.begin(), pred.end(), second.begin(), second.end())) return false;
  return std::all_of(pred.begin(), pred.end(),
                     [&](Vertex w) { return view.dec.path_of[w] == view.path; });
}

}  // namespace idcycle
