#include "idcycle/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "idcycle/error.hpp"
#include "idcycle/graph_io.hpp"

namespace idcycle {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Cyclable:
      return "cyclable";
    case Verdict::NotCyclable:
      return "not-cyclable";
    case Verdict::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

namespace {

struct BudgetHit {};

class CycleSearch {
 public:
  CycleSearch(const Graph& h, std::vector<Vertex> targets, std::uint64_t budget)
      : h_(h),
        targets_(std::move(targets)),
        budget_(budget),
        is_target_(static_cast<std::size_t>(h.order()), 0),
        on_path_(static_cast<std::size_t>(h.order()), 0),
        seen_(static_cast<std::size_t>(h.order()), 0) {
    for (Vertex t : targets_) is_target_[t] = 1;
  }

  std::optional<std::vector<Vertex>> run() {
    start_ = targets_.front();
    push(start_);
    if (extend(start_)) return path_;
    return std::nullopt;
  }

  std::uint64_t expansions() const { return expansions_; }

 private:
  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
    covered_ += is_target_[v];
  }
  void pop() {
    Vertex v = path_.back();
    path_.pop_back();
    on_path_[v] = 0;
    covered_ -= is_target_[v];
  }

  // Every uncovered target, and a way back to the start, must be reachable
  // from cur through vertices off the path.
  bool still_feasible(Vertex cur) {
    ++stamp_;
    std::vector<Vertex> stack{cur};
    seen_[cur] = stamp_;
    std::size_t reached_targets = 0;
    bool back_to_start = false;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : h_.neighbors(u)) {
        if (w == start_ && (u != cur || path_.size() >= 3)) back_to_start = true;
        if (on_path_[w] || seen_[w] == stamp_) continue;
        seen_[w] = stamp_;
        reached_targets += is_target_[w];
        stack.push_back(w);
      }
    }
    return back_to_start && covered_ + reached_targets == targets_.size();
  }

  bool extend(Vertex cur) {
    if (++expansions_ > budget_) throw BudgetHit{};
    if (covered_ == targets_.size() && path_.size() >= 3 && h_.has_edge(cur, start_))
      return true;
    for (Vertex w : h_.neighbors(cur)) {
      if (on_path_[w]) continue;
      push(w);
      if (still_feasible(w) && extend(w)) return true;
      pop();
    }
    return false;
  }

  const Graph& h_;
  std::vector<Vertex> targets_;
  std::uint64_t budget_;
  std::vector<char> is_target_, on_path_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> path_;
  std::size_t covered_ = 0;
  Vertex start_ = 0;
  std::uint64_t expansions_ = 0;
};

}  // namespace

CyclabilityResult cyclable_bruteforce(const Graph& g, std::span<const Vertex> targets,
                                      std::uint64_t budget) {
  std::vector<Vertex> want(targets.begin(), targets.end());
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  if (want.empty()) throw InvalidParams("cyclability query needs a target vertex");
  if (want.front() < 0 || want.back() >= g.order())
    throw InvalidParams("cyclability target outside the graph");

  // A cycle lives inside one block; find the block holding every target.
  const std::vector<Vertex>* home = nullptr;
  auto all_blocks = blocks(g);
  for (const auto& block : all_blocks) {
    if (block.size() >= 3 && std::includes(block.begin(), block.end(), want.begin(), want.end())) {
      home = &block;
      break;
    }
  }
  CyclabilityResult result;
  if (!home) return result;

  Graph h = induced_subgraph(g, *home);
  std::vector<Vertex> local;
  for (Vertex t : want)
    local.push_back(static_cast<Vertex>(std::lower_bound(home->begin(), home->end(), t) -
                                        home->begin()));
  CycleSearch search(h, local, budget);
  try {
    auto found = search.run();
    result.expansions = search.expansions();
    if (found) {
      std::vector<Vertex> cycle;
      for (Vertex v : *found) cycle.push_back((*home)[v]);
      result.verdict = Verdict::Cyclable;
      result.witness = VertexSequence(std::move(cycle));
      if (!verify_cycle_through(g, *result.witness, want))
        throw FatalInconsistency("oracle witness failed edge verification");
    }
  } catch (const BudgetHit&) {
    result.verdict = Verdict::BudgetExceeded;
    result.expansions = budget;
  }
  return result;
}

bool verify_cycle_through(const Graph& g, const VertexSequence& cycle,
                          std::span<const Vertex> targets) {
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex u = cycle[i], v = cycle.next(i);
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.has_edge(u, v)) return false;
    on[u] = 1;
  }
  return std::all_of(targets.begin(), targets.end(),
                     [&](Vertex t) { return t >= 0 && t < g.order() && on[t]; });
}

VertexSequence canonical_form(const VertexSequence& seq) {
  auto best = seq.vertices();
  for (const auto& oriented : {seq, seq.reversed()}) {
    for (std::size_t start = 0; start < oriented.size(); ++start) {
      auto candidate = oriented.rotated(start).vertices();
      if (candidate < best) best = std::move(candidate);
    }
  }
  return VertexSequence(std::move(best));
}

namespace {

void enumerate_from(const GraphContext& ctx, CycleClass cls, std::vector<Vertex>& path,
                    std::vector<char>& used, std::size_t max_count,
                    std::vector<VertexSequence>& out) {
  const Vertex start = path.front();
  const Vertex last = path.back();
  if (path.size() >= 3 && path[1] < last && pair_satisfies(ctx, last, start, cls)) {
    out.emplace_back(path);
    if (max_count && out.size() >= max_count) return;
  }
  for (Vertex w = start + 1; w < ctx.n(); ++w) {
    if (used[w] || !pair_satisfies(ctx, last, w, cls)) continue;
    used[w] = 1;
    path.push_back(w);
    enumerate_from(ctx, cls, path, used, max_count, out);
    path.pop_back();
    used[w] = 0;
    if (max_count && out.size() >= max_count) return;
  }
}

}  // namespace

std::vector<VertexSequence> enumerate_cycles_of_class(const GraphContext& ctx,
                                                      const Enumeration& how) {
  const int n = ctx.n();
  std::vector<VertexSequence> out;
  if (how.mode == Enumeration::Mode::Exhaustive) {
    if (n > 10) throw InvalidParams("exhaustive enumeration supports n <= 10");
    // Canonical forms start at their minimum vertex with v_1 < v_{p-1}.
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> path;
    for (Vertex s = 0; s < n; ++s) {
      path = {s};
      used.assign(used.size(), 0);
      used[s] = 1;
      enumerate_from(ctx, how.cls, path, used, how.max_count, out);
      if (how.max_count && out.size() >= how.max_count) break;
    }
    return out;
  }

  if (how.max_count == 0) throw InvalidParams("sampled enumeration needs max_count > 0");
  if (n < 3) return out;
  std::mt19937_64 rng(how.seed);
  std::set<std::vector<Vertex>> found;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const std::size_t attempts = std::max<std::size_t>(1000, 50 * how.max_count);
  std::uniform_int_distribution<int> length(3, n);
  for (std::size_t a = 0; a < attempts && found.size() < how.max_count; ++a) {
    std::shuffle(order.begin(), order.end(), rng);
    VertexSequence candidate(
        std::vector<Vertex>(order.begin(), order.begin() + length(rng)));
    if (satisfies(ctx, candidate, how.cls)) found.insert(canonical_form(candidate).vertices());
  }
  for (const auto& v : found) out.emplace_back(v);
  return out;
}

std::vector<VertexSequence> enumerate_id_cycles(const GraphContext& ctx, std::size_t max_count,
                                                Enumeration::Mode mode, std::uint64_t seed) {
  return enumerate_cycles_of_class(ctx, {mode, seed, max_count, CycleClass::ImplicitDirac});
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined key.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool trace_descends(const std::vector<Move>& trace) {
  for (std::size_t k = 0; k < trace.size(); ++k) {
    if (!(trace[k].potential_after < trace[k].potential_before)) return false;
    if (k > 0 && !(trace[k].before == trace[k - 1].after)) return false;
  }
  return true;
}

VerifyReport verify_graph(const Graph& g, std::size_t graph_index, const VerifyOptions& opts) {
  VerifyReport report;
  report.options = opts;
  if (g.order() < 3 || g.order() > opts.n_max || !is_connected(g)) return report;
  report.graphs_checked = 1;

  GraphContext ctx(g);
  const std::uint64_t seed = derive_seed(opts.seed, graph_index);
  std::vector<VertexSequence> sequences;
  if (g.order() <= 10) {
    sequences = enumerate_id_cycles(ctx, 0, Enumeration::Mode::Exhaustive);
    if (opts.per_graph_sample && sequences.size() > opts.per_graph_sample) {
      std::vector<std::size_t> pick(sequences.size());
      std::iota(pick.begin(), pick.end(), 0);
      std::mt19937_64 rng(seed);
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(opts.per_graph_sample);
      std::sort(pick.begin(), pick.end());
      std::vector<VertexSequence> chosen;
      for (std::size_t i : pick) chosen.push_back(sequences[i]);
      sequences = std::move(chosen);
    }
  } else {
    sequences = enumerate_id_cycles(ctx, std::max<std::size_t>(opts.per_graph_sample, 1),
                                    Enumeration::Mode::Sampled, seed);
  }

  const std::string g6 = to_graph6(g);
  MovePolicy policy;
  policy.strict = true;
  for (const auto& seq : sequences) {
    ++report.sequences_checked;
    auto fail = [&](std::string reason) {
      report.failures.push_back({graph_index, g6, format_sequence(seq), std::move(reason)});
    };
    std::optional<CertificationResult> result;
    try {
      result = certify_cyclable(ctx, seq, policy);
    } catch (const StuckOnIdCycle& e) {
      ++report.stuck;
      fail(std::string("stuck: ") + e.what());
      continue;
    } catch (const Error& e) {
      fail(std::string("engine error: ") + e.what());
      continue;
    }
    ++report.certified;
    const auto& done = result->cycle();
    const std::size_t p = seq.size();
    report.max_trace_length = std::max(report.max_trace_length, done.trace.size());
    ++report.trace_length_histogram[done.trace.size()];
    for (const auto& m : done.trace) ++report.move_histogram[std::string(to_string(m.kind))];
    if (!trace_descends(done.trace)) ++report.descent_violations;
    if (done.trace.size() > 4 * p * p) ++report.cap_violations;
    if (!verify_cycle_through(g, done.cycle, seq.vertices())) {
      fail("certified cycle misses an input vertex or uses a non-edge");
      continue;
    }
    auto oracle = cyclable_bruteforce(g, seq.vertices(), opts.oracle_budget);
    if (oracle.verdict == Verdict::Cyclable)
      ++report.oracle_confirmed;
    else
      fail(std::string("oracle verdict ") + std::string(to_string(oracle.verdict)));
  }
  return report;
}

void merge_into(VerifyReport& a, const VerifyReport& b) {
  a.graphs_checked += b.graphs_checked;
  a.sequences_checked += b.sequences_checked;
  a.certified += b.certified;
  a.oracle_confirmed += b.oracle_confirmed;
  a.stuck += b.stuck;
  a.max_trace_length = std::max(a.max_trace_length, b.max_trace_length);
  a.descent_violations += b.descent_violations;
  a.cap_violations += b.cap_violations;
  for (const auto& [k, v] : b.move_histogram) a.move_histogram[k] += v;
  for (const auto& [k, v] : b.trace_length_histogram) a.trace_length_histogram[k] += v;
  a.failures.insert(a.failures.end(), b.failures.begin(), b.failures.end());
}

VerifyReport verify_theorem_small_serial(std::span<const Graph> catalog,
                                         const VerifyOptions& opts) {
  VerifyReport total;
  total.options = opts;
  total.graphs_in_catalog = catalog.size();
  for (std::size_t i = 0; i < catalog.size(); ++i) merge_into(total, verify_graph(catalog[i], i, opts));
  return total;
}

VerifyReport verify_theorem_small_parallel(std::span<const Graph> catalog,
                                           const VerifyOptions& opts) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(catalog.size());
  std::vector<VerifyReport> partial(catalog.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    partial[i] = verify_graph(catalog[i], static_cast<std::size_t>(i), opts);

  VerifyReport total;
  total.options = opts;
  total.graphs_in_catalog = catalog.size();
  for (const auto& r : partial) merge_into(total, r);
  return total;
}

}  // namespace idcycle
