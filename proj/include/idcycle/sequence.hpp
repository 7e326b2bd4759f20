#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idcycle/graph.hpp"
#include "idcycle/implicit_degree.hpp"

namespace idcycle {

// Oriented cyclic sequence v_0 .. v_{p-1} of distinct vertices, p >= 3.
class VertexSequence {
 public:
  // Throws InvalidSequence on repeats, p < 3 or negative ids.
  explicit VertexSequence(std::vector<Vertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Vertex next(std::size_t i) const { return (*this)[i + 1]; }
  Vertex prev(std::size_t i) const { return (*this)[i + size() - 1]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  // Sequence starting at v_start, same orientation.
  VertexSequence rotated(std::size_t start) const;
  VertexSequence reversed() const;

  // Throws InvalidSequence when an id lies outside the graph.
  void validate_for(const Graph& g) const;

  bool operator==(const VertexSequence&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

// "0,3,1,4,2" <-> VertexSequence.
VertexSequence parse_sequence(std::string_view text);
std::string format_sequence(const VertexSequence& seq);

// A graph plus its degree and first implicit-degree tables. Converts
// implicitly from Graph so every query below also accepts a bare Graph; pass
// a GraphContext explicitly to amortize the table over many queries.
class GraphContext {
 public:
  GraphContext(const Graph& g) : graph_(&g), degrees_(g) {}  // NOLINT

  const Graph& graph() const { return *graph_; }
  const DegreeTable& degrees() const { return degrees_; }
  int n() const { return degrees_.n; }
  bool heavy(Vertex v) const { return degrees_.heavy(v); }
  bool implicit_heavy(Vertex v) const { return degrees_.implicit_heavy(v); }
  int degree(Vertex v) const { return degrees_.degree[v]; }
  int implicit_degree(Vertex v) const { return degrees_.implicit[v]; }
  bool adjacent(Vertex u, Vertex v) const { return graph_->has_edge(u, v); }

 private:
  const Graph* graph_;
  DegreeTable degrees_;
};

enum class CycleClass { Cycle, Dirac, Ore, ImplicitDirac, ImplicitOre };
inline constexpr CycleClass kAllClasses[] = {CycleClass::Cycle, CycleClass::Dirac,
                                             CycleClass::Ore, CycleClass::ImplicitDirac,
                                             CycleClass::ImplicitOre};
std::string_view to_string(CycleClass c);

// Whether the consecutive pair (u, v) satisfies the class condition.
bool pair_satisfies(const GraphContext& ctx, Vertex u, Vertex v, CycleClass c);

struct SequenceClass {
  bool is_cycle = false;
  bool is_d_cycle = false;
  bool is_o_cycle = false;
  bool is_id_cycle = false;
  bool is_io_cycle = false;
  // First offending consecutive pair for each failed class, indexed by CycleClass.
  std::optional<std::pair<Vertex, Vertex>> witness[5];

  bool none() const { return !is_io_cycle; }
  bool has(CycleClass c) const;
};

// Throws InvalidSequence via validate_for.
SequenceClass classify(const GraphContext& ctx, const VertexSequence& seq);
bool satisfies(const GraphContext& ctx, const VertexSequence& seq, CycleClass c);

int deficit_degree(const GraphContext& ctx, const VertexSequence& seq);

struct BreakSets {
  std::vector<Vertex> bre_plus;   // v_i with v_i v_{i+1} missing
  std::vector<Vertex> bre_minus;  // v_i with v_{i-1} v_i missing
  std::vector<Vertex> bre;
  std::vector<Vertex> hb;         // heavy break vertices
  std::vector<Vertex> str;        // strange break vertices
};

BreakSets break_sets(const GraphContext& ctx, const VertexSequence& seq);

int heavy_index(const GraphContext& ctx, const VertexSequence& seq);

// Lexicographic (def, 2 def - hb) potential driven to (0, 0) by the engine.
struct Potential {
  int deficit = 0;
  int slack = 0;
  auto operator<=>(const Potential&) const = default;
};

Potential potential(const GraphContext& ctx, const VertexSequence& seq);

// x_1 P_1 y_1 ... x_s P_s y_s: maximal runs of sequence-consecutive adjacent
// vertices. y_i x_{i+1} are exactly the missing consecutive pairs.
struct PathDecomposition {
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::size_t> path_of;  // indexed by vertex; npos off the sequence

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t count() const { return paths.size(); }
  Vertex head(std::size_t i) const { return paths[i].front(); }
  Vertex tail(std::size_t i) const { return paths[i].back(); }
};

// P_1 starts at the first index i with v_{i-1} v_i missing. Throws NoBreaks
// for a genuine cycle.
PathDecomposition decompose(const GraphContext& ctx, const VertexSequence& seq);

// Predecessors along seq of the neighbours of v that lie on seq, ascending.
// Throws NotOnSequence.
std::vector<Vertex> predecessor_neighborhood(const GraphContext& ctx,
                                             const VertexSequence& seq, Vertex v);

struct StrangeTest {
  bool strange = false;
  std::string failed;  // subset of "abcd", in order
};

// Conditions (a)-(d) for a path endpoint u. Tail endpoints are tested on the
// reversed sequence, where they become heads. Throws NotAnEndpoint.
StrangeTest is_strange_vertex(const GraphContext& ctx, const VertexSequence& seq, Vertex u);

// Containment N2(u) within N_seq(u)^- within V(P_i) for the endpoint u.
bool second_neighborhood_contained(const GraphContext& ctx, const VertexSequence& seq,
                                   Vertex u);

// Position of every vertex on seq (-1 when absent), sized n.
std::vector<int> positions(const GraphContext& ctx, const VertexSequence& seq);

}  // namespace idcycle
