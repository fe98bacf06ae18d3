#include "hyperobs/mon.hpp"

#include "hyperobs/errors.hpp"
#include "hyperobs/kernels.hpp"
#include "hyperobs/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperobs {

namespace {

constexpr std::uint64_t kVerifyStream = 1;

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

SensorSet to_sensor_set(const std::vector<int>& zero_based) {
  std::vector<int> ids;
  for (int v : zero_based) ids.push_back(v + 1);
  return SensorSet::of(std::move(ids));
}

void verify(const Hypergraph& g, const MonReport& report, const MonOptions& options) {
  if (!report.found || !options.verify) return;
  ObservabilityOptions check;
  check.depth = options.depth;
  check.caps = options.caps;
  check.rank.primes = options.primes;
  check.rank.seed = SplitMix64::derive(options.seed, kVerifyStream);
  auto verdict = is_locally_weakly_observable(g, sensor_matrix(report.sensors, g.node_count()), check);
  if (!verdict.observable) {
    throw std::logic_error("MON set failed its independent re-check for " + report.hypergraph);
  }
}

}  // namespace

std::string method_name(MonMethod method) { return method == MonMethod::greedy ? "greedy" : "exhaustive"; }

std::string describe(const Hypergraph& g) {
  std::string out = "n=" + std::to_string(g.node_count()) + " edges=[";
  bool first_edge = true;
  for (const auto& e : g.edges_one_based()) {
    if (!first_edge) out += ",";
    first_edge = false;
    out += "[";
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
    out += "]";
  }
  return out + "]";
}

NodeRowBlocks::NodeRowBlocks(const Hypergraph& g, const MonOptions& options)
    : n_(g.node_count()), field_(options.primes.at(0)) {
  const int depth = options.depth.value_or(n_);
  if (depth < 0) throw std::invalid_argument("derivative depth must be >= 0");
  const auto f = vector_field(g);
  const FieldRow point = random_point(trial_seed(options.seed, 0, 0), n_, field_);

  std::vector<Polynomial> level;
  for (int i = 0; i < n_; ++i) level.push_back(Polynomial::variable(i));
  blocks_.assign(static_cast<std::size_t>(n_), {});
  std::size_t total = 0;
  for (int j = 0;; ++j) {
    for (const auto& p : level) total += p.term_count();
    if (total > options.caps.terms) {
      throw GuardError("node Lie chains exceeded the term cap at depth " + std::to_string(j), total, options.caps.terms);
    }
    auto rows = kernels::parallel::gradient_rows(level, n_, field_, point);
    for (std::size_t i = 0; i < rows.size(); ++i) blocks_[i].push_back(std::move(rows[i]));
    if (j == depth) break;
    level = kernels::parallel::lie_step(level, f);
  }
}

std::size_t NodeRowBlocks::rank_of(const SensorSet& sensors) const {
  FieldMatrix rows;
  for (int id : sensors.nodes) {
    const auto& block = blocks_.at(static_cast<std::size_t>(id - 1));
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rank(std::move(rows), field_);
}

MonReport greedy_mon(const Hypergraph& g, const MonOptions& options, const std::string& label) {
  MonReport report;
  report.hypergraph = label.empty() ? describe(g) : label;
  report.method = MonMethod::greedy;
  const NodeRowBlocks blocks(g, options);
  const int n = g.node_count();

  std::vector<int> chosen;
  FieldMatrix base;
  std::size_t current = 0;
  while (static_cast<int>(current) < n) {
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    auto ranks = kernels::parallel::candidate_ranks(base, blocks.blocks(), candidates, blocks.field());
    report.rank_tests += candidates.size();
    // max_element keeps the first maximum, i.e. the lowest node index.
    auto best = static_cast<std::size_t>(std::max_element(ranks.begin(), ranks.end()) - ranks.begin());
    const int node = candidates[best];
    chosen.push_back(node);
    const auto& block = blocks.blocks()[static_cast<std::size_t>(node)];
    base.insert(base.end(), block.begin(), block.end());
    current = ranks[best];
    report.trace.push_back({node + 1, current});
  }
  report.found = static_cast<int>(current) == n;
  if (report.found) {
    report.sensors = to_sensor_set(chosen);
  } else {
    report.note = "rank " + std::to_string(current) + " < n even with every node observed";
  }
  verify(g, report, options);
  return report;
}

MonReport exhaustive_mon(const Hypergraph& g, int max_size, const MonOptions& options, const std::string& label) {
  const int n = g.node_count();
  if (max_size < 1) throw std::invalid_argument("exhaustive search needs max_size >= 1");
  max_size = std::min(max_size, n);
  std::size_t needed = 0;
  for (int s = 1; s <= max_size; ++s) needed += binomial(n, s);
  if (needed > options.exhaustive_budget) {
    throw GuardError("exhaustive MON search over too many sensor sets", needed, options.exhaustive_budget);
  }

  MonReport report;
  report.hypergraph = label.empty() ? describe(g) : label;
  report.method = MonMethod::exhaustive;
  const NodeRowBlocks blocks(g, options);
  for (int s = 1; s <= max_size && !report.found; ++s) {
    auto subsets = subsets_of_size(n, s);
    auto hit = kernels::parallel::first_full_rank(blocks.blocks(), subsets, static_cast<std::size_t>(n), blocks.field());
    if (hit == kernels::npos) {
      report.rank_tests += subsets.size();
      continue;
    }
    report.rank_tests += hit + 1;
    report.found = true;
    report.sensors = to_sensor_set(subsets[hit]);
  }
  if (!report.found) report.note = "no observable set with at most " + std::to_string(max_size) + " sensors";
  verify(g, report, options);
  return report;
}

ExperimentGraphs experiment_graphs(Family family, int n) {
  ExperimentGraphs graphs{generate(family, n, 2), std::nullopt, std::nullopt};
  if (n < 3) return graphs;
  const auto& present = graphs.pairwise.edges();
  for (const auto& subset : subsets_of_size(n, 3)) {
    Hyperedge e{subset};
    if (std::find(present.begin(), present.end(), e) != present.end()) continue;
    graphs.one_3way = hypergraph_union(graphs.pairwise,
                                       Hypergraph::create(n, {{subset[0] + 1, subset[1] + 1, subset[2] + 1}}));
    break;
  }
  graphs.all_3way = hypergraph_union(graphs.pairwise, generate(family, n, 3));
  return graphs;
}

std::vector<ExperimentRow> monotonicity_experiment(Family family, int n, const MonOptions& options) {
  const auto graphs = experiment_graphs(family, n);
  const std::string prefix = family_name(family) + "(n=" + std::to_string(n) + ")/";
  std::vector<ExperimentRow> rows;
  auto run = [&](const std::string& column, const std::optional<Hypergraph>& g) {
    ExperimentRow row{family, n, column, false, {}};
    if (g) {
      row.mon = greedy_mon(*g, options, prefix + column);
    } else {
      row.skipped = true;
      row.mon.hypergraph = prefix + column;
      row.mon.note = "skipped: n < 3 admits no 3-node hyperedge";
    }
    rows.push_back(std::move(row));
  };
  run("pairwise", graphs.pairwise);
  run("one_3way", graphs.one_3way);
  run("all_3way", graphs.all_3way);
  return rows;
}

}  // namespace hyperobs
