#pragma once

#include <initializer_list>
#include <vector>

#include "idcycle/graph.hpp"
#include "idcycle/sequence.hpp"

namespace fixtures {

using idcycle::Graph;
using idcycle::Vertex;

inline Graph make(int n, std::initializer_list<Graph::Edge> edges) {
  std::vector<Graph::Edge> e(edges);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Graph::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Graph::Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

// Triangles 0-1-2 and 2-3-4 sharing vertex 2.
inline Graph bowtie() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Triangle 0-1-2 with pendant edge 1-3.
inline Graph paw() { return make(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}}); }

// Parts {0,1,2} and {3,4,5}.
inline Graph k33() {
  std::vector<Graph::Edge> e;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) e.emplace_back(u, v);
  return Graph(6, e);
}

inline Graph petersen() {
  std::vector<Graph::Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

// Path 0-1-2-3-4-5 with chords 0-2, 0-4, 5-1, 5-3.
inline Graph chord_six() {
  return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}, {0, 4}, {1, 5}, {3, 5}});
}

// Triangles {0,1,2}, {3,4,5} joined by 0-3.
inline Graph two_triangles() {
  return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}});
}

inline idcycle::VertexSequence seq(std::initializer_list<Vertex> v) {
  return idcycle::VertexSequence(std::vector<Vertex>(v));
}

}  // namespace fixtures
