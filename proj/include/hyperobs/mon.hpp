#pragma once

#include "hyperobs/config.hpp"
#include "hyperobs/dynamics.hpp"
#include "hyperobs/hypergraph.hpp"
#include "hyperobs/observability.hpp"
#include "hyperobs/prime_field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperobs {

enum class MonMethod { greedy, exhaustive };

std::string method_name(MonMethod method);

struct GreedyStep {
  int node = 0;          // 1-based node added at this step
  std::size_t rank = 0;  // rank after adding it
};

/// Minimum observable node set found for one hypergraph.
struct MonReport {
  std::string hypergraph;
  MonMethod method = MonMethod::greedy;
  bool found = false;
  SensorSet sensors;
  std::vector<GreedyStep> trace;  // greedy only
  std::size_t rank_tests = 0;
  std::string note;
};

struct MonOptions {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes = default_primes();
  std::optional<int> depth;  // defaults to n
  Caps caps;
  bool verify = true;  // re-check the result with independent seeds
  std::size_t exhaustive_budget = 5000;
};

/// Per-node gradient rows of L^0 x_i .. L^depth x_i at one fixed random
/// point. The NOM of any sensor set is the stack of its nodes' blocks.
class NodeRowBlocks {
 public:
  NodeRowBlocks(const Hypergraph& g, const MonOptions& options);

  const PrimeField& field() const { return field_; }
  const std::vector<FieldMatrix>& blocks() const { return blocks_; }
  int n() const { return n_; }
  std::size_t rank_of(const SensorSet& sensors) const;

 private:
  int n_;
  PrimeField field_;
  std::vector<FieldMatrix> blocks_;
};

/// Adds, one at a time, the node that maximizes the NOM rank (lowest index
/// on ties) until the rank reaches n.
MonReport greedy_mon(const Hypergraph& g, const MonOptions& options = {}, const std::string& label = {});

/// Smallest observable set of size <= max_size, lexicographically first
/// among equals. Throws GuardError when the number of candidate sets
/// exceeds options.exhaustive_budget.
MonReport exhaustive_mon(const Hypergraph& g, int max_size, const MonOptions& options = {},
                         const std::string& label = {});

/// Greedy MON under growing 3-way structure: pairwise only, one added 3-way
/// edge, all 3-way edges of the family.
struct ExperimentRow {
  Family family = Family::chain;
  int n = 0;
  std::string column;  // "pairwise", "one_3way", "all_3way"
  bool skipped = false;
  MonReport mon;
};

std::vector<ExperimentRow> monotonicity_experiment(Family family, int n, const MonOptions& options = {});

/// The three experiment hypergraphs (some may be absent when n < 3).
struct ExperimentGraphs {
  Hypergraph pairwise;
  std::optional<Hypergraph> one_3way;
  std::optional<Hypergraph> all_3way;
};
ExperimentGraphs experiment_graphs(Family family, int n);

/// "n=3 edges=[[1,2],[1,3],[2,3]]"
std::string describe(const Hypergraph& g);

}  // namespace hyperobs
