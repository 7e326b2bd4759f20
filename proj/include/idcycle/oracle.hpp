#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idcycle/graph.hpp"
#include "idcycle/sequence.hpp"
#include "idcycle/transform.hpp"

namespace idcycle {

enum class Verdict { Cyclable, NotCyclable, BudgetExceeded };
std::string_view to_string(Verdict v);

struct CyclabilityResult {
  Verdict verdict = Verdict::NotCyclable;
  std::optional<VertexSequence> witness;  // set iff Cyclable
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

// Backtracking search for a cycle through every target. Restricted to the
// block holding all targets, pruned by reachability of the remaining targets.
// NotCyclable only after exhausting the search; hitting the budget yields
// BudgetExceeded. Throws InvalidParams for an empty or out-of-range target set.
CyclabilityResult cyclable_bruteforce(const Graph& g, std::span<const Vertex> targets,
                                      std::uint64_t budget = kDefaultOracleBudget);

// Edge-by-edge check that cycle is a cycle of g visiting every target.
bool verify_cycle_through(const Graph& g, const VertexSequence& cycle,
                          std::span<const Vertex> targets);

// Least rotation of the smaller orientation.
VertexSequence canonical_form(const VertexSequence& seq);

struct Enumeration {
  enum class Mode { Exhaustive, Sampled } mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t max_count = 0;  // 0: unlimited (exhaustive only)
  CycleClass cls = CycleClass::ImplicitDirac;
};

// Distinct canonical sequences of the requested class (id-cycles by default).
// Exhaustive mode lists them in lexicographic order and needs n <= 10;
// sampled mode filters random orderings of random subsets.
std::vector<VertexSequence> enumerate_cycles_of_class(const GraphContext& ctx,
                                                      const Enumeration& how);

std::vector<VertexSequence> enumerate_id_cycles(const GraphContext& ctx, std::size_t max_count,
                                                Enumeration::Mode mode, std::uint64_t seed = 0);

// Deterministic per-item substream seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct VerifyOptions {
  int n_max = 7;
  std::size_t per_graph_sample = 100;
  std::uint64_t seed = 0;
  std::uint64_t oracle_budget = kDefaultOracleBudget;

  bool operator==(const VerifyOptions&) const = default;
};

struct VerifyFailure {
  std::size_t graph_index;
  std::string graph6;
  std::string sequence;
  std::string reason;

  bool operator==(const VerifyFailure&) const = default;
};

struct VerifyReport {
  VerifyOptions options;
  std::size_t graphs_in_catalog = 0;
  std::size_t graphs_checked = 0;  // connected, 3 <= n <= n_max
  std::size_t sequences_checked = 0;
  std::size_t certified = 0;
  std::size_t oracle_confirmed = 0;
  std::size_t stuck = 0;
  std::size_t max_trace_length = 0;
  std::size_t descent_violations = 0;  // potential not strictly decreasing
  std::size_t cap_violations = 0;      // trace longer than 4 p^2
  std::map<std::string, std::size_t> move_histogram;
  std::map<std::size_t, std::size_t> trace_length_histogram;
  std::vector<VerifyFailure> failures;

  bool operator==(const VerifyReport&) const = default;
};

// Per-graph kernel shared by both drivers.
VerifyReport verify_graph(const Graph& g, std::size_t graph_index, const VerifyOptions& opts);

// Folds b into a (order-sensitive only in the failures list).
void merge_into(VerifyReport& a, const VerifyReport& b);

// Serial reference and OpenMP driver over a catalog; identical reports.
VerifyReport verify_theorem_small_serial(std::span<const Graph> catalog, const VerifyOptions& opts);
VerifyReport verify_theorem_small_parallel(std::span<const Graph> catalog,
                                           const VerifyOptions& opts);

// Potential strictly decreases along the trace and each move's before matches
// the previous move's after.
bool trace_descends(const std::vector<Move>& trace);

}  // namespace idcycle
