#include "idcycle/implicit_degree.hpp"

#include <algorithm>

#include "idcycle/error.hpp"

namespace idcycle {

std::string_view to_string(ImplicitBranch branch) {
  switch (branch) {
    case ImplicitBranch::EmptySecondNeighborhood:
      return "empty-N2";
    case ImplicitBranch::AboveSecondMax:
      return "d_{k+1}>M2";
    case ImplicitBranch::Otherwise:
      return "otherwise";
    case ImplicitBranch::DegenerateK0:
      return "degenerate-k0";
  }
  return "?";
}

ImplicitDegreeWorksheet implicit_degree_worksheet(const Graph& g, Vertex v) {
  ImplicitDegreeWorksheet sheet;
  sheet.v = v;
  sheet.degree = g.degree(v);
  auto second = second_neighborhood(g, v);
  sheet.second_neighborhood_size = second.size();

  for (Vertex u : g.neighbors(v)) sheet.degree_sequence.push_back(g.degree(u));
  for (Vertex u : second) sheet.degree_sequence.push_back(g.degree(u));
  std::sort(sheet.degree_sequence.begin(), sheet.degree_sequence.end());

  if (second.empty()) {
    sheet.branch = ImplicitBranch::EmptySecondNeighborhood;
    sheet.value = sheet.degree;
    return sheet;
  }

  int m2 = 0;
  for (Vertex u : second) m2 = std::max(m2, g.degree(u));
  sheet.second_max = m2;
  sheet.value = recompute_from_worksheet(sheet);
  const int k = sheet.degree - 1;
  if (sheet.degree_sequence[k] > m2)
    sheet.branch = ImplicitBranch::AboveSecondMax;
  else
    sheet.branch = k == 0 ? ImplicitBranch::DegenerateK0 : ImplicitBranch::Otherwise;
  return sheet;
}

int recompute_from_worksheet(const ImplicitDegreeWorksheet& sheet) {
  if (!sheet.second_max) return sheet.degree;
  const int k = sheet.degree - 1;
  // 1-based d_j is degree_sequence[j - 1]; d_0 reads as 0.
  auto d = [&](int j) { return j == 0 ? 0 : sheet.degree_sequence[j - 1]; };
  if (d(k + 1) > *sheet.second_max) return std::max(d(k + 1), k + 1);
  return std::max(d(k), k + 1);
}

int implicit_degree_1(const Graph& g, Vertex v) {
  return implicit_degree_worksheet(g, v).value;
}

bool is_implicit_heavy(const Graph& g, Vertex v) {
  return 2 * implicit_degree_1(g, v) >= g.order();
}

bool is_heavy(const Graph& g, Vertex v) { return 2 * g.degree(v) >= g.order(); }

std::vector<int> implicit_degrees_serial(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[v] = implicit_degree_1(g, v);
  return out;
}

std::vector<int> implicit_degrees_parallel(const Graph& g) {
  const int n = g.order();
  std::vector<int> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
  for (Vertex v = 0; v < n; ++v) out[v] = implicit_degree_1(g, v);
  return out;
}

DegreeTable::DegreeTable(const Graph& g)
    : n(g.order()), degree(static_cast<std::size_t>(g.order())) {
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  implicit = n >= 512 ? implicit_degrees_parallel(g) : implicit_degrees_serial(g);
}

}  // namespace idcycle
