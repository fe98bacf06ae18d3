#include "hyperobs/errors.hpp"
#include "hyperobs/io.hpp"
#include "hyperobs/mon.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hyperobs;

namespace {

const std::vector<Family> kFamilies{Family::chain, Family::ring, Family::star, Family::complete};

bool observable_with(const Hypergraph& g, const SensorSet& s, std::uint64_t seed) {
  ObservabilityOptions opts;
  opts.rank.seed = seed;
  opts.rank.primes = {1000000007ULL, 998244353ULL};
  return is_locally_weakly_observable(g, sensor_matrix(s, g.node_count()), opts).observable;
}

}  // namespace

TEST_CASE("greedy examples") {
  auto hyper = greedy_mon(complete_hypergraph(3, 3));
  CHECK(hyper.found);
  CHECK(hyper.sensors.nodes == std::vector<int>{1});
  REQUIRE(hyper.trace.size() == 1);
  CHECK(hyper.trace[0].node == 1);
  CHECK(hyper.trace[0].rank == 3);

  auto triangle = greedy_mon(complete_hypergraph(3, 2));
  CHECK(triangle.sensors.size() == 2);
  REQUIRE(triangle.trace.size() == 2);
  CHECK(triangle.trace[0].rank == 2);
  CHECK(triangle.trace[1].rank == 3);

  auto single = greedy_mon(Hypergraph::create(1, {}));
  CHECK(single.sensors.nodes == std::vector<int>{1});

  auto edgeless = greedy_mon(Hypergraph::create(3, {}));
  CHECK(edgeless.sensors.nodes == std::vector<int>{1, 2, 3});
  CHECK(edgeless.rank_tests == 3 + 2 + 1);
  CHECK(edgeless.hypergraph == "n=3 edges=[]");
}

TEST_CASE("exhaustive examples") {
  auto triangle = exhaustive_mon(complete_hypergraph(3, 2), 3);
  CHECK(triangle.found);
  CHECK(triangle.sensors.nodes == std::vector<int>{1, 2});
  CHECK(triangle.rank_tests == 4);

  auto hyper = exhaustive_mon(complete_hypergraph(3, 3), 3);
  CHECK(hyper.sensors.nodes == std::vector<int>{1});

  auto edgeless = exhaustive_mon(Hypergraph::create(3, {}), 3);
  CHECK(edgeless.sensors.nodes == std::vector<int>{1, 2, 3});

  auto capped = exhaustive_mon(Hypergraph::create(3, {}), 2);
  CHECK_FALSE(capped.found);
  CHECK_FALSE(capped.note.empty());

  CHECK_THROWS_AS(exhaustive_mon(complete_hypergraph(3, 2), 0), std::invalid_argument);
}

TEST_CASE("exhaustive budget guard") {
  MonOptions opts;
  opts.exhaustive_budget = 10;
  CHECK_THROWS_AS(exhaustive_mon(hyperchain(5, 2), 5, opts), GuardError);
  CHECK_NOTHROW(exhaustive_mon(hyperchain(5, 2), 1, opts));
  CHECK_THROWS_AS(exhaustive_mon(hyperchain(14, 2), 14), GuardError);
}

TEST_CASE("term cap guard") {
  MonOptions opts;
  opts.caps.terms = 10;
  CHECK_THROWS_AS(greedy_mon(complete_hypergraph(5, 3), opts), GuardError);
}

TEST_CASE("returned sets are observable under fresh seeds") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    auto g = oracle::random_hypergraph(rng, n, 3, 0.35);
    auto greedy = greedy_mon(g);
    auto best = exhaustive_mon(g, n);
    REQUIRE(greedy.found);
    REQUIRE(best.found);
    CHECK(observable_with(g, greedy.sensors, 1000 + trial));
    CHECK(observable_with(g, best.sensors, 2000 + trial));
    CHECK(best.sensors.size() <= greedy.sensors.size());
    // Minimality: no smaller set is observable.
    if (best.sensors.size() > 1) CHECK_FALSE(exhaustive_mon(g, static_cast<int>(best.sensors.size()) - 1).found);
  }
}

TEST_CASE("greedy against exhaustive on the canonical families") {
  int gaps = 0;
  for (auto family : kFamilies) {
    for (int n = 3; n <= 5; ++n) {
      for (int k = 2; k <= 3; ++k) {
        auto g = generate(family, n, k);
        auto greedy = greedy_mon(g);
        auto best = exhaustive_mon(g, n);
        CHECK(best.sensors.size() <= greedy.sensors.size());
        if (best.sensors.size() != greedy.sensors.size()) {
          ++gaps;
          MESSAGE("greedy gap on " << family_name(family) << "(n=" << n << ", k=" << k << "): greedy "
                                   << greedy.sensors.size() << ", exhaustive " << best.sensors.size());
        }
      }
    }
  }
  MESSAGE("greedy/exhaustive gaps: " << gaps);
}

TEST_CASE("adding a max-cardinality edge: MON size changes are recorded") {
  std::mt19937_64 rng(52);
  int increases = 0, instances = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 5)(rng);
    auto g = oracle::random_hypergraph(rng, n, 3, 0.3);
    const int k = std::max(g.max_cardinality(), 2);
    auto missing = complete_hypergraph(n, k).edges_one_based();
    auto present = g.edges_one_based();
    std::erase_if(missing, [&](const auto& e) { return std::find(present.begin(), present.end(), e) != present.end(); });
    if (missing.empty()) continue;
    auto added = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
    auto h = hypergraph_union(g, Hypergraph::create(n, {added}));
    auto before = exhaustive_mon(g, n).sensors.size();
    auto after = exhaustive_mon(h, n).sensors.size();
    ++instances;
    if (after > before) {
      ++increases;
      MESSAGE("MON grew from " << before << " to " << after << " adding an edge to " << describe(g));
    }
  }
  MESSAGE(increases << " increases over " << instances << " edge additions");
  CHECK(instances > 0);
}

TEST_CASE("fixed seed gives identical reports") {
  MonOptions opts;
  opts.seed = 7;
  auto g = hyperring(5, 3);
  CHECK(io::mon_report_to_json(greedy_mon(g, opts), 7).dump() == io::mon_report_to_json(greedy_mon(g, opts), 7).dump());
  auto rows_a = monotonicity_experiment(Family::star, 4, opts);
  auto rows_b = monotonicity_experiment(Family::star, 4, opts);
  CHECK(io::experiment_csv(rows_a) == io::experiment_csv(rows_b));
}

TEST_CASE("experiment graphs") {
  auto graphs = experiment_graphs(Family::chain, 4);
  CHECK(graphs.pairwise == hyperchain(4, 2));
  REQUIRE(graphs.one_3way);
  CHECK(*graphs.one_3way == hypergraph_union(hyperchain(4, 2), Hypergraph::create(4, {{1, 2, 3}})));
  REQUIRE(graphs.all_3way);
  CHECK(*graphs.all_3way == hypergraph_union(hyperchain(4, 2), hyperchain(4, 3)));

  auto small = experiment_graphs(Family::ring, 2);
  CHECK_FALSE(small.one_3way);
  CHECK_FALSE(small.all_3way);
}

TEST_CASE("experiment on the complete family at n=3") {
  auto rows = monotonicity_experiment(Family::complete, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].column == "pairwise");
  CHECK(rows[0].mon.sensors.size() == 2);
  CHECK(rows[1].mon.sensors.size() == 1);
  CHECK(rows[2].mon.sensors.size() == 1);
}

TEST_CASE("experiment skips 3-way columns below three nodes") {
  auto rows = monotonicity_experiment(Family::chain, 2);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].skipped);
  CHECK(rows[0].mon.sensors.size() == 1);
  CHECK(rows[1].skipped);
  CHECK(rows[2].skipped);
  CHECK_FALSE(rows[1].mon.note.empty());
}

TEST_CASE("chain n=3 pairwise: greedy matches exhaustive") {
  auto g = hyperchain(3, 2);
  CHECK(greedy_mon(g).sensors.size() == exhaustive_mon(g, 3).sensors.size());
}

TEST_CASE("row blocks reproduce the verdict rank") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    auto g = oracle::random_hypergraph(rng, n, 3, 0.4);
    auto s = SensorSet::of(oracle::random_sensors(rng, n));
    NodeRowBlocks blocks(g, {});
    ObservabilityOptions opts;
    opts.early_exit = false;
    CHECK(blocks.rank_of(s) == is_locally_weakly_observable(g, sensor_matrix(s, n), opts).certificate.rank);
  }
}
