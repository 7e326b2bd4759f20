#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "idcycle/graph.hpp"

namespace idcycle {

enum class ImplicitBranch {
  EmptySecondNeighborhood,  // N2(v) empty: value is d(v)
  AboveSecondMax,           // d_{k+1} > M2: max(d_{k+1}, k+1)
  Otherwise,                // max(d_k, k+1)
  DegenerateK0,             // d(v) = 1 with N2(v) nonempty; d_0 taken as 0
};

std::string_view to_string(ImplicitBranch branch);

// Every intermediate quantity of the first implicit-degree computation.
struct ImplicitDegreeWorksheet {
  Vertex v = 0;
  int degree = 0;                    // d(v) = k + 1
  std::vector<int> degree_sequence;  // nondecreasing degrees over N(v) and N2(v)
  std::size_t second_neighborhood_size = 0;
  std::optional<int> second_max;     // M2, absent when N2(v) is empty
  ImplicitBranch branch = ImplicitBranch::EmptySecondNeighborhood;
  int value = 0;
};

ImplicitDegreeWorksheet implicit_degree_worksheet(const Graph& g, Vertex v);

int implicit_degree_1(const Graph& g, Vertex v);

// Re-derives the value from the worksheet fields alone.
int recompute_from_worksheet(const ImplicitDegreeWorksheet& sheet);

// 2 * d1(v) >= n.
bool is_implicit_heavy(const Graph& g, Vertex v);

// 2 * d(v) >= n.
bool is_heavy(const Graph& g, Vertex v);

// d1 for every vertex. The parallel variant splits vertices across OpenMP
// threads; the serial one is the reference it is tested against.
std::vector<int> implicit_degrees_serial(const Graph& g);
std::vector<int> implicit_degrees_parallel(const Graph& g);

// Precomputed per-vertex degree data shared by the cycle model and engine.
struct DegreeTable {
  int n = 0;
  std::vector<int> degree;
  std::vector<int> implicit;

  explicit DegreeTable(const Graph& g);

  bool heavy(Vertex v) const { return 2 * degree[v] >= n; }
  bool implicit_heavy(Vertex v) const { return 2 * implicit[v] >= n; }
};

}  // namespace idcycle
