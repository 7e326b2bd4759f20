#include "idcycle/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "idcycle/error.hpp"

namespace idcycle {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw InvalidGraph("graph needs at least one vertex");
  adjacency_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    check(u);
    check(v);
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw InvalidGraph("duplicate edge " + std::to_string(v) + " " +
                         std::to_string(*dup));
    }
  }
  edge_count_ = edges.size();
}

void Graph::check(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw VertexOutOfRange("vertex " + std::to_string(v) +
                           " outside [0, " + std::to_string(order()) + ")");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check(v);
  return adjacency_[v];
}

int Graph::degree(Vertex v) const {
  check(v);
  return static_cast<int>(adjacency_[v].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  g.neighbors(source);  // range check
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> second_neighborhood(const Graph& g, Vertex v) {
  auto direct = g.neighbors(v);
  std::vector<char> mark(static_cast<std::size_t>(g.order()), 0);
  mark[v] = 1;
  for (Vertex u : direct) mark[u] = 1;
  std::vector<Vertex> out;
  for (Vertex u : direct) {
    for (Vertex w : g.neighbors(u)) {
      if (!mark[w]) {
        mark[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

// Hopcroft-Tarjan lowpoint search; reports articulation points and blocks.
struct BlockSearch {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<Graph::Edge> stack;
  std::vector<std::vector<Vertex>> found;
  int timer = 0;

  explicit BlockSearch(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0),
        is_cut(static_cast<std::size_t>(graph.order()), 0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (disc[v] >= 0) continue;
      if (g.degree(v) == 0) {
        disc[v] = timer++;
        found.push_back({v});
        continue;
      }
      visit(v);
    }
  }

  void pop_block(Vertex u, Vertex w) {
    std::vector<Vertex> block;
    while (true) {
      auto e = stack.back();
      stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e.first == u && e.second == w) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    found.push_back(std::move(block));
  }

  // Iterative DFS so deep paths do not exhaust the call stack.
  void visit(Vertex root) {
    struct Frame {
      Vertex v, parent;
      std::size_t next;
    };
    std::vector<Frame> frames{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        Vertex w = adj[f.next++];
        if (disc[w] < 0) {
          stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v, parent = f.parent;
      frames.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) is_cut[parent] = 1;
        pop_block(parent, v);
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
};

}  // namespace

std::vector<Vertex> cut_vertices(const Graph& g) {
  BlockSearch search(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (search.is_cut[v]) out.push_back(v);
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

std::vector<std::vector<Vertex>> blocks(const Graph& g) {
  BlockSearch search(g);
  auto out = std::move(search.found);
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[w]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

}  // namespace idcycle
