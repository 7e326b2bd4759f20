#include "idcycle/workbench.hpp"

#include <algorithm>
#include <numeric>

#include "idcycle/error.hpp"
#include "idcycle/graph_io.hpp"
#include "idcycle/implicit_degree.hpp"
#include "idcycle/transform.hpp"

namespace idcycle {

namespace {

class DenseBuilder {
 public:
  explicit DenseBuilder(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), deg_(n, 0) {}

  bool has(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
  void add(int u, int v) {
    adj_[static_cast<std::size_t>(u) * n_ + v] = adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    ++deg_[u];
    ++deg_[v];
  }
  int degree(int v) const { return deg_[v]; }

  Graph build() const {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (has(u, v)) edges.emplace_back(u, v);
    return Graph(n_, edges);
  }

 private:
  int n_;
  std::vector<char> adj_;
  std::vector<int> deg_;
};

DenseBuilder gnp_builder(int n, double p, std::mt19937_64& rng) {
  DenseBuilder b(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) b.add(u, v);
  return b;
}

template <typename T>
const T& pick(const std::vector<T>& items, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> index(0, items.size() - 1);
  return items[index(rng)];
}

}  // namespace

Graph gen_random_graph(const GraphSpec& spec, std::uint64_t seed) {
  const int n = spec.n;
  if (n < 3) throw InvalidParams("random graphs need n >= 3");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InvalidParams("edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  DenseBuilder b = gnp_builder(n, spec.p, rng);

  if (spec.model == GraphModel::Dirac) {
    const int target = (n + 1) / 2;
    while (true) {
      std::vector<int> short_of;
      for (int v = 0; v < n; ++v)
        if (b.degree(v) < target) short_of.push_back(v);
      if (short_of.empty()) break;
      int v = pick(short_of, rng);
      std::vector<int> free;
      for (int u = 0; u < n; ++u)
        if (u != v && !b.has(u, v)) free.push_back(u);
      b.add(v, pick(free, rng));
    }
  } else if (spec.model == GraphModel::Ore) {
    while (true) {
      std::vector<std::pair<int, int>> failing;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!b.has(u, v) && b.degree(u) + b.degree(v) < n) failing.emplace_back(u, v);
      if (failing.empty()) break;
      auto [u, v] = pick(failing, rng);
      b.add(u, v);
    }
  }

  Graph g = b.build();
  // Postconditions of the biased models.
  for (Vertex u = 0; u < n; ++u) {
    if (spec.model == GraphModel::Dirac && 2 * g.degree(u) < n)
      throw FatalInconsistency("dirac generator left a vertex below n/2");
    if (spec.model == GraphModel::Ore)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n)
          throw FatalInconsistency("ore generator left a failing pair");
  }
  return g;
}

VertexSequence build_zhu_witness(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw HypothesisViolated("Zhu's condition needs n >= 3");
  if (!is_connected(g)) throw HypothesisViolated("graph is not connected");
  auto cuts = cut_vertices(g);
  if (!cuts.empty())
    throw HypothesisViolated("graph is not 2-connected: cut vertex " + std::to_string(cuts.front()));

  DegreeTable table(g);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && table.implicit[u] + table.implicit[v] < n)
        throw HypothesisViolated("nonadjacent pair (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ") has d1 sum " +
                                 std::to_string(table.implicit[u] + table.implicit[v]) + " < " +
                                 std::to_string(n));

  std::vector<Vertex> light, heavy;  // A and B
  for (Vertex v = 0; v < n; ++v) (table.implicit_heavy(v) ? heavy : light).push_back(v);
  for (std::size_t i = 0; i < light.size(); ++i)
    for (std::size_t j = i + 1; j < light.size(); ++j)
      if (!g.has_edge(light[i], light[j]))
        throw FatalInconsistency("light vertices do not form a clique");

  std::vector<Vertex> order;
  if (light.empty() || heavy.empty()) {
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
  } else if (light.size() == 1 || heavy.size() == 1) {
    // The lone vertex sits between two of its neighbours on the other side.
    const bool lone_light = light.size() == 1;
    const Vertex lone = lone_light ? light.front() : heavy.front();
    const auto& rest = lone_light ? heavy : light;
    std::vector<Vertex> attach;
    for (Vertex w : g.neighbors(lone)) attach.push_back(w);
    if (attach.size() < 2)
      throw HypothesisViolated("vertex " + std::to_string(lone) + " has fewer than two neighbours");
    order = {attach[0], lone, attach[1]};
    for (Vertex w : rest)
      if (w != attach[0] && w != attach[1]) order.push_back(w);
  } else {
    // Two disjoint light-heavy edges a1 b1, a2 b2.
    std::vector<Graph::Edge> cross;
    for (Vertex a : light)
      for (Vertex b : g.neighbors(a))
        if (table.implicit_heavy(b)) cross.emplace_back(a, b);
    std::optional<std::pair<Graph::Edge, Graph::Edge>> found;
    for (std::size_t i = 0; i < cross.size() && !found; ++i)
      for (std::size_t j = i + 1; j < cross.size() && !found; ++j)
        if (cross[i].first != cross[j].first && cross[i].second != cross[j].second)
          found = std::pair{cross[i], cross[j]};
    if (!found) throw HypothesisViolated("no two disjoint edges between A and B");
    auto [a1, b1] = found->first;
    auto [a2, b2] = found->second;
    order.push_back(b1);
    order.push_back(a1);
    for (Vertex a : light)
      if (a != a1 && a != a2) order.push_back(a);
    order.push_back(a2);
    order.push_back(b2);
    for (Vertex b : heavy)
      if (b != b1 && b != b2) order.push_back(b);
  }
  VertexSequence witness(std::move(order));
  if (!satisfies(g, witness, CycleClass::ImplicitDirac))
    throw FatalInconsistency("Zhu witness " + format_sequence(witness) + " is not an id-cycle");
  return witness;
}

VertexSequence build_shi_witness(const Graph& g) {
  DegreeTable table(g);
  std::vector<Vertex> s;
  for (Vertex v = 0; v < g.order(); ++v)
    if (table.implicit_heavy(v)) s.push_back(v);
  if (s.size() < 3)
    throw TooSmall("only " + std::to_string(s.size()) + " implicit-heavy vertices; need 3");
  if (!is_two_connected(g)) {
    auto cuts = cut_vertices(g);
    throw NotTwoConnected(cuts.empty() ? std::string("graph is not connected")
                                       : "cut vertex " + std::to_string(cuts.front()));
  }
  return VertexSequence(std::move(s));
}

std::optional<VertexSequence> sample_io_not_id(const GraphContext& ctx, std::mt19937_64& rng,
                                               std::size_t attempts, std::size_t& id_filtered) {
  const int n = ctx.n();
  if (n < 3) return std::nullopt;
  std::uniform_int_distribution<int> length_dist(3, n), start_dist(0, n - 1);
  std::bernoulli_distribution prefer_gap(0.5);
  for (std::size_t a = 0; a < attempts; ++a) {
    const int length = length_dist(rng);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> walk{start_dist(rng)};
    used[walk.front()] = 1;
    while (static_cast<int>(walk.size()) < length) {
      // Edges, gaps between implicit-heavy vertices, and io-only gaps.
      std::vector<Vertex> edges, id_gaps, io_gaps;
      for (Vertex u = 0; u < n; ++u) {
        if (used[u] || !pair_satisfies(ctx, walk.back(), u, CycleClass::ImplicitOre)) continue;
        if (ctx.adjacent(walk.back(), u))
          edges.push_back(u);
        else if (pair_satisfies(ctx, walk.back(), u, CycleClass::ImplicitDirac))
          id_gaps.push_back(u);
        else
          io_gaps.push_back(u);
      }
      const std::vector<Vertex>* from = nullptr;
      if (!io_gaps.empty() && prefer_gap(rng))
        from = &io_gaps;
      else if (!id_gaps.empty() && prefer_gap(rng))
        from = &id_gaps;
      else if (!edges.empty())
        from = &edges;
      else if (!io_gaps.empty())
        from = &io_gaps;
      else if (!id_gaps.empty())
        from = &id_gaps;
      if (!from) break;
      Vertex next = pick(*from, rng);
      used[next] = 1;
      walk.push_back(next);
    }
    if (walk.size() < 3) continue;
    VertexSequence seq(std::move(walk));
    if (!satisfies(ctx, seq, CycleClass::ImplicitOre)) continue;
    if (satisfies(ctx, seq, CycleClass::ImplicitDirac)) {
      ++id_filtered;
      continue;
    }
    return seq;
  }
  return std::nullopt;
}

HuntReport hunt_instance(std::size_t index, const HuntOptions& opts) {
  HuntReport report;
  report.options = opts;
  report.instances = 1;
  std::mt19937_64 rng(derive_seed(opts.seed, index));
  const int n = std::uniform_int_distribution<int>(opts.n_min, opts.n_max)(rng);
  const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  Graph g = gen_random_graph({GraphModel::Gnp, n, p}, rng());
  GraphContext ctx(g);

  auto seq = sample_io_not_id(ctx, rng, opts.sample_attempts, report.id_filtered);
  if (!seq) return report;
  report.sampled = 1;

  const std::string g6 = to_graph6(g);
  try {
    auto result = certify_cyclable(ctx, *seq);
    for (const auto& m : result.trace()) ++report.move_histogram[std::string(to_string(m.kind))];
    if (result.certified()) {
      ++report.certified;
      return report;
    }
    ++report.stuck;
    auto oracle = cyclable_bruteforce(g, seq->vertices(), opts.oracle_budget);
    switch (oracle.verdict) {
      case Verdict::Cyclable:
        ++report.stuck_oracle_true;
        break;
      case Verdict::NotCyclable:
        ++report.stuck_oracle_false;
        break;
      case Verdict::BudgetExceeded:
        ++report.stuck_oracle_unknown;
        break;
    }
    const std::string text = format_sequence(*seq);
    report.stuck_instances.push_back(
        {index, g6, text, format_sequence(result.stuck().report.final_sequence), oracle.verdict,
         "idcycle certify --graph6 '" + g6 + "' -s " + text});
  } catch (const Error& e) {
    ++report.engine_errors;
    report.errors.push_back("instance " + std::to_string(index) + " (" + g6 + ", " +
                            format_sequence(*seq) + "): " + e.what());
  }
  return report;
}

void merge_into(HuntReport& a, const HuntReport& b) {
  a.instances += b.instances;
  a.sampled += b.sampled;
  a.id_filtered += b.id_filtered;
  a.certified += b.certified;
  a.stuck += b.stuck;
  a.stuck_oracle_true += b.stuck_oracle_true;
  a.stuck_oracle_false += b.stuck_oracle_false;
  a.stuck_oracle_unknown += b.stuck_oracle_unknown;
  a.engine_errors += b.engine_errors;
  for (const auto& [k, v] : b.move_histogram) a.move_histogram[k] += v;
  a.stuck_instances.insert(a.stuck_instances.end(), b.stuck_instances.begin(),
                           b.stuck_instances.end());
  a.errors.insert(a.errors.end(), b.errors.begin(), b.errors.end());
}

namespace {

void check_hunt_options(const HuntOptions& opts) {
  if (opts.n_min < 3 || opts.n_max < opts.n_min)
    throw InvalidParams("hunt needs 3 <= n_min <= n_max");
}

}  // namespace

HuntReport hunt_io_counterexamples_serial(const HuntOptions& opts) {
  check_hunt_options(opts);
  HuntReport total;
  total.options = opts;
  for (std::size_t i = 0; i < opts.budget; ++i) merge_into(total, hunt_instance(i, opts));
  return total;
}

HuntReport hunt_io_counterexamples_parallel(const HuntOptions& opts) {
  check_hunt_options(opts);
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(opts.budget);
  std::vector<HuntReport> partial(opts.budget);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    partial[i] = hunt_instance(static_cast<std::size_t>(i), opts);
  HuntReport total;
  total.options = opts;
  for (const auto& r : partial) merge_into(total, r);
  return total;
}

}  // namespace idcycle
