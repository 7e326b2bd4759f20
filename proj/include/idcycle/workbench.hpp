#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idcycle/graph.hpp"
#include "idcycle/oracle.hpp"
#include "idcycle/sequence.hpp"

namespace idcycle {

enum class GraphModel { Gnp, Dirac, Ore };

struct GraphSpec {
  GraphModel model = GraphModel::Gnp;
  int n = 0;
  double p = 0.3;  // edge probability; for dirac/ore the base graph density
};

// Erdos-Renyi G(n, p); dirac augments vertices with d(v) < ceil(n/2) by random
// edges; ore adds the edge of a random failing nonadjacent pair until
// d(u) + d(v) >= n holds for every nonadjacent pair. Deterministic per seed.
// Throws InvalidParams for n < 3 or p outside [0, 1].
Graph gen_random_graph(const GraphSpec& spec, std::uint64_t seed);

// Length-n id-cycle from the clique/heavy split of Zhu's condition: A (d1 <
// n/2) must be a clique, B the remaining vertices. Throws HypothesisViolated
// (naming the offending pair or cut vertex) when G is not 2-connected or a
// nonadjacent pair has d1 sum below n.
VertexSequence build_zhu_witness(const Graph& g);

// S = {v : 2 d1(v) >= n} in ascending order. Throws TooSmall when |S| < 3 and
// NotTwoConnected when G has a cut vertex.
VertexSequence build_shi_witness(const Graph& g);

struct HuntOptions {
  std::size_t budget = 10'000;   // instances
  int n_min = 5;
  int n_max = 12;
  std::uint64_t seed = 0;
  std::size_t sample_attempts = 200;  // sequence draws per instance
  std::uint64_t oracle_budget = kDefaultOracleBudget;

  bool operator==(const HuntOptions&) const = default;
};

// A Stuck io-cycle with everything needed to replay it.
struct HuntFixture {
  std::size_t instance;
  std::string graph6;
  std::string sequence;
  std::string final_sequence;
  Verdict oracle;
  std::string replay;  // CLI command line

  bool operator==(const HuntFixture&) const = default;
};

struct HuntReport {
  HuntOptions options;
  std::size_t instances = 0;
  std::size_t sampled = 0;        // instances that produced an io, non-id sequence
  std::size_t id_filtered = 0;    // draws that turned out to be id-cycles
  std::size_t certified = 0;
  std::size_t stuck = 0;
  std::size_t stuck_oracle_true = 0;
  std::size_t stuck_oracle_false = 0;
  std::size_t stuck_oracle_unknown = 0;
  std::size_t engine_errors = 0;
  std::map<std::string, std::size_t> move_histogram;
  std::vector<HuntFixture> stuck_instances;
  std::vector<std::string> errors;

  bool operator==(const HuntReport&) const = default;
};

// Random io-cycle draw that is not an id-cycle, guided so consecutive pairs
// satisfy the io condition. Counts id-cycle draws in id_filtered.
std::optional<VertexSequence> sample_io_not_id(const GraphContext& ctx, std::mt19937_64& rng,
                                               std::size_t attempts, std::size_t& id_filtered);

// One hunt instance; the drivers below fold these in instance order.
HuntReport hunt_instance(std::size_t index, const HuntOptions& opts);
void merge_into(HuntReport& a, const HuntReport& b);

HuntReport hunt_io_counterexamples_serial(const HuntOptions& opts);
HuntReport hunt_io_counterexamples_parallel(const HuntOptions& opts);

}  // namespace idcycle
