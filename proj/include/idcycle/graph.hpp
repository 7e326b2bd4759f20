#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace idcycle {

using Vertex = int;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists are
// sorted and duplicate-free; the constructor enforces symmetry.
class Graph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  // Throws InvalidGraph on self-loops or repeated edges, VertexOutOfRange on
  // ids outside [0, n).
  Graph(int n, std::span<const Edge> edges);
  explicit Graph(int n) : Graph(n, std::span<const Edge>{}) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Vertices at shortest-path distance exactly 2 from v, ascending.
std::vector<Vertex> second_neighborhood(const Graph& g, Vertex v);

// Unweighted shortest-path distances from source; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

// Articulation points, ascending.
std::vector<Vertex> cut_vertices(const Graph& g);

// Connected, at least three vertices and no cut vertex.
bool is_two_connected(const Graph& g);

// Vertex sets of the biconnected components (blocks), each sorted. Isolated
// vertices form singleton blocks; a bridge forms a two-vertex block.
std::vector<std::vector<Vertex>> blocks(const Graph& g);

// Subgraph induced by the given vertices, relabelled in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace idcycle
