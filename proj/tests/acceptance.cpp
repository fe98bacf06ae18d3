// Acceptance suite: one PASS/FAIL line per criterion, with timing.
//
//   acceptance [--known-red N]...
//
// Exit status is the number of criteria whose outcome differs from the
// expectation: a criterion listed with --known-red is expected to fail and
// counts against the run if it passes.

#include "hyperobs/mon.hpp"
#include "hyperobs/kronecker.hpp"
#include "hyperobs/observability.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace hyperobs;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "    " << what << "\n";
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

OutputMatrix sensors(std::vector<int> nodes, int n) { return sensor_matrix(SensorSet::of(std::move(nodes)), n); }

Polynomial x(int i) { return Polynomial::variable(i - 1); }

// 1
void triangle_fields(Outcome& out) {
  auto graph = vector_field(complete_hypergraph(3, 2));
  auto hyper = vector_field(Hypergraph::create(3, {{1, 2, 3}}));
  out.require(graph.components == std::vector<Polynomial>{x(2) + x(3), x(1) + x(3), x(1) + x(2)},
              "triangle graph field: " + graph.components[0].to_string() + ", ...");
  out.require(hyper.components == std::vector<Polynomial>{x(2) * x(3), x(1) * x(3), x(1) * x(2)},
              "3-node hyperedge field: " + hyper.components[0].to_string() + ", ...");
}

// 2
void dual_path(Outcome& out) {
  std::vector<Hypergraph> corpus;
  const std::vector<std::vector<int>> pool{{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<int>> edges;
    for (unsigned b = 0; b < 4; ++b) {
      if (mask & (1u << b)) edges.push_back(pool[b]);
    }
    corpus.push_back(Hypergraph::create(3, edges));
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) corpus.push_back(oracle::random_hypergraph(rng, 4, 3, 0.35));

  std::size_t compared = 0, mismatches = 0;
  for (const auto& g : corpus) {
    const int n = g.node_count();
    std::vector<std::vector<int>> sensor_sets;
    if (n == 3) {
      for (unsigned m = 1; m < 8; ++m) {
        std::vector<int> s;
        for (int v = 0; v < 3; ++v) {
          if (m & (1u << v)) s.push_back(v + 1);
        }
        sensor_sets.push_back(s);
      }
    } else {
      sensor_sets.push_back(oracle::random_sensors(rng, n));
    }
    for (const auto& s : sensor_sets) {
      auto c = sensors(s, n);
      for (int r = 0; r <= 3; ++r) {
        ++compared;
        if (!(nom_kronecker(g, c, r) == nom_symbolic(observation_stack(g, c, r)))) {
          ++mismatches;
          if (mismatches <= 5) out.detail << "    mismatch on " << describe(g) << " r=" << r << "\n";
        }
      }
    }
  }
  out.detail << "    " << compared << " (hypergraph, sensors, depth) cases, " << mismatches << " mismatches\n";
  out.require(mismatches == 0, "Kronecker and polynomial NOMs differ");
}

// 3
void linear_specialization(Outcome& out) {
  std::mt19937_64 rng(77);
  int mismatches = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    auto g = oracle::random_hypergraph(rng, n, 2, 0.3);
    auto nodes = oracle::random_sensors(rng, n);
    oracle::RatMatrix c;
    for (int s : nodes) {
      std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
      row[static_cast<std::size_t>(s - 1)] = 1;
      c.push_back(row);
    }
    const auto expected = oracle::kalman_rank(oracle::adjacency_matrix(g), c);
    const auto got = generic_rank(nom_symbolic(observation_stack(g, sensors(nodes, n), n - 1)), {}).rank;
    if (got != expected) {
      ++mismatches;
      out.detail << "    " << describe(g) << ": generic " << got << ", Kalman " << expected << "\n";
    }
  }
  out.require(mismatches == 0, std::to_string(mismatches) + " rank mismatches");
}

// Instances shared by the stability check: everything the other criteria touch.
std::vector<std::pair<Hypergraph, std::vector<int>>> stability_corpus() {
  std::vector<std::pair<Hypergraph, std::vector<int>>> out;
  std::mt19937_64 rng(4);
  for (auto family : {Family::chain, Family::ring, Family::star, Family::complete}) {
    for (int n = 3; n <= 5; ++n) {
      auto graphs = experiment_graphs(family, n);
      for (const auto* g : {&graphs.pairwise, &*graphs.one_3way, &*graphs.all_3way}) {
        out.emplace_back(*g, std::vector<int>{1});
        out.emplace_back(*g, oracle::random_sensors(rng, n));
      }
    }
  }
  for (int i = 0; i < 40; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    out.emplace_back(oracle::random_hypergraph(rng, n, 4, 0.3), oracle::random_sensors(rng, n));
  }
  out.emplace_back(complete_hypergraph(3, 3), std::vector<int>{1});
  out.emplace_back(complete_hypergraph(3, 2), std::vector<int>{1});
  out.emplace_back(Hypergraph::create(3, {}), std::vector<int>{1, 2});
  return out;
}

// 4
void rank_stability(Outcome& out) {
  Rational expected_events = 0;
  std::size_t events = 0, trials = 0, unstable = 0;
  const auto corpus = stability_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& [g, s] = corpus[i];
    RankOptions opts;
    opts.points_per_prime = 5;
    opts.seed = 1000 + i;
    auto cert = generic_rank(nom_symbolic(observation_stack(g, sensors(s, g.node_count()))), opts);
    expected_events += cert.failure_bound;
    bool stable = true;
    for (const auto& t : cert.trials) {
      ++trials;
      if (t.rank != cert.rank) {
        ++events;
        stable = false;
      }
    }
    if (!stable) {
      ++unstable;
      out.detail << "    unstable rank on " << describe(g) << "\n";
    }
  }
  out.detail << "    " << corpus.size() << " instances, " << trials << " trials, " << events
             << " deficient trials; union bound on expected count " << expected_events.get_d() << "\n";
  out.require(unstable == 0, std::to_string(unstable) + " instances with differing ranks");
  out.require(Rational(events) <= expected_events, "deficiency events exceed the certified bound");
}

// 5
void restriction_implication(Outcome& out) {
  std::mt19937_64 rng(515);
  int tested = 0, violations = 0;
  while (tested < 120) {
    const int n = std::uniform_int_distribution<int>(3, 6)(rng);
    auto g = oracle::random_hypergraph(rng, n, 4, 0.25);
    std::set<std::size_t> cards;
    for (const auto& e : g.edges()) cards.insert(e.cardinality());
    if (cards.size() < 2) continue;  // nonuniform only
    auto report = check_proposition15(g, sensors(oracle::random_sensors(rng, n), n));
    ++tested;
    if (!report.implication_holds) {
      ++violations;
      out.detail << "    violation on " << describe(g) << "\n";
    }
  }
  out.detail << "    " << tested << " nonuniform hypergraphs, " << violations << " violations\n";
  out.require(violations == 0, "restricted-observable but full-unobservable instance found");
}

// 6
void mon_trend(Outcome& out) {
  bool strict = false;
  for (auto family : {Family::chain, Family::ring, Family::star, Family::complete}) {
    auto rows = monotonicity_experiment(family, 5);
    const auto a = rows[0].mon.sensors.size(), b = rows[1].mon.sensors.size(), c = rows[2].mon.sensors.size();
    out.detail << "    " << family_name(family) << ": pairwise " << a << ", one 3-way " << b << ", all 3-way " << c
               << "\n";
    out.require(c <= b && b <= a, family_name(family) + " sizes are not non-increasing");
    strict = strict || c < a;
  }
  out.require(strict, "no family shows a strict decrease");
}

// 7
void single_instances(Outcome& out) {
  using Clock = std::chrono::steady_clock;
  auto timed = [&](const std::string& name, const std::function<void()>& body) {
    auto t0 = Clock::now();
    body();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    out.detail << "    " << name << " " << s << " s\n";
    out.require(s < 1.0, name + " over 1 s");
  };

  timed("complete(3,3) from {1}", [&] {
    auto v = is_locally_weakly_observable(complete_hypergraph(3, 3), sensors({1}, 3));
    out.require(v.observable && v.certificate.rank == 3, "complete(3,3) from {1} should be observable with rank 3");
    auto nom = nom_symbolic(observation_stack(complete_hypergraph(3, 3), sensors({1}, 3), 2));
    auto det = oracle::det3(nom.rows);
    out.require(det == Rational(2) * x(1) * x(3) * x(3) - Rational(2) * x(1) * x(2) * x(2),
                "determinant oracle: " + det.to_string());
  });

  timed("triangle from {1}", [&] {
    auto v = is_locally_weakly_observable(complete_hypergraph(3, 2), sensors({1}, 3));
    out.require(!v.observable && v.certificate.rank == 2, "triangle from {1} should have rank 2");
    oracle::RatMatrix c{{1, 0, 0}};
    out.require(oracle::kalman_rank(oracle::adjacency_matrix(complete_hypergraph(3, 2)), c) == 2,
                "Kalman oracle disagrees");
  });

  timed("edgeless n=3", [&] {
    auto g = Hypergraph::create(3, {});
    auto mon = exhaustive_mon(g, 3);
    out.require(mon.found && mon.sensors.nodes == std::vector<int>{1, 2, 3}, "edgeless MON should be {1,2,3}");
    for (const auto& s : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
      auto v = is_locally_weakly_observable(g, sensors(s, 3));
      oracle::RatMatrix c;
      for (int id : s) {
        std::vector<Rational> row(3, Rational(0));
        row[static_cast<std::size_t>(id - 1)] = 1;
        c.push_back(row);
      }
      out.require(!v.observable && v.certificate.rank == oracle::rational_rank(c), "two sensors should not suffice");
    }
  });
}

// 8
void gradient_check(Outcome& out) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  int failures = 0, checks = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    auto p = oracle::random_polynomial(rng, n, 4, 8);
    auto grad = p.gradient(n);
    for (int k = 0; k < 5; ++k) {
      std::vector<double> pt;
      for (int v = 0; v < n; ++v) pt.push_back(coord(rng));
      for (int v = 0; v < n; ++v) {
        const double exact = grad[static_cast<std::size_t>(v)].evaluate(std::span<const double>(pt));
        const double approx = oracle::central_difference(p, pt, v, 1e-5);
        ++checks;
        if (std::abs(approx - exact) > 1e-6 * std::max(1.0, std::abs(exact))) ++failures;
      }
    }
  }
  out.detail << "    " << checks << " gradient components, " << failures << " outside tolerance\n";
  out.require(failures == 0, "finite differences disagree");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_red;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--known-red" && i + 1 < argc) {
      known_red.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--known-red N]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "triangle graph and 3-node hyperedge vector fields", 1, triangle_fields},
      {2, "Kronecker and polynomial NOMs agree (n <= 4, K <= 3, r <= 3)", 300, dual_path},
      {3, "graph NOM rank equals Kalman rank on 20 random graphs", 60, linear_specialization},
      {4, "rank stable over 3 primes x 5 points", 300, rank_stability},
      {5, "max-cardinality restriction observable implies full observable", 600, restriction_implication},
      {6, "greedy MON non-increasing as 3-way edges are added (n = 5)", 600, mon_trend},
      {7, "single-instance verdicts against oracles", 3, single_instances},
      {8, "gradients match central differences (200 polynomials)", 30, gradient_check},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    outcome.require(seconds < c.budget_seconds, "over the time budget");

    const bool expected_red = known_red.count(c.id) > 0;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %d %s (%.2f s)%s  %s", c.id, outcome.pass ? "PASS" : "FAIL", seconds,
                  expected_red ? " [known red]" : "", c.title.c_str());
    std::cout << line << "\n" << outcome.detail.str() << std::flush;
    if (outcome.pass == expected_red) ++unexpected;
  }
  return unexpected;
}
