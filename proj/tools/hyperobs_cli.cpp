// hyperobs: observability of hypergraph dynamics from the command line.
//
// Exit codes: 0 success / observable, 1 definite negative verdict,
// 2 usage, input or guard error.

#include "hyperobs/dynamics.hpp"
#include "hyperobs/errors.hpp"
#include "hyperobs/hypergraph.hpp"
#include "hyperobs/io.hpp"
#include "hyperobs/mon.hpp"
#include "hyperobs/observability.hpp"
#include "hyperobs/tensor.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace hyperobs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string input;
  std::string family;
  int n = 0;
  int k = 2;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--input", input, "hypergraph JSON file");
    cmd->add_option("--family", family, "generator family: chain|ring|star|complete");
    cmd->add_option("--n", n, "node count for the generator");
    cmd->add_option("--k", k, "edge cardinality for the generator")->capture_default_str();
  }

  Hypergraph load() const {
    const bool has_input = !input.empty();
    const bool has_spec = !family.empty();
    if (has_input == has_spec) throw UsageError("give exactly one of --input or --family/--n/--k");
    if (has_input) return io::read_hypergraph(input);
    if (n < 1) throw UsageError("--n is required with --family");
    return generate(parse_family(family), n, k);
  }
};

struct RankFlags {
  std::uint64_t seed = 0;
  int points = 2;
  std::vector<std::uint64_t> primes;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "root seed for every random choice")->capture_default_str();
    cmd->add_option("--trials", points, "random points per prime")->capture_default_str();
    cmd->add_option("--primes", primes, "field primes (default: three primes below 2^61)")->delimiter(',');
  }

  RankOptions options() const {
    RankOptions o;
    o.seed = seed;
    o.points_per_prime = points;
    if (!primes.empty()) o.primes = primes;
    return o;
  }
};

struct Output {
  std::string path;

  void add_to(CLI::App* cmd) { cmd->add_option("--output,-o", path, "write machine output here instead of stdout"); }

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
    } else {
      io::write_text(path, text);
    }
  }
};

SensorSet parse_sensors(const std::vector<int>& ids, int n) {
  if (ids.empty()) throw UsageError("--sensors is required");
  auto set = SensorSet::of(ids);
  sensor_matrix(set, n);  // range check
  return set;
}

std::vector<double> parse_state(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "' in --x0");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local weak observability of hypergraph dynamics"};
  app.require_subcommand(1);
  Output output;
  Caps caps;

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "write a canonical topology as hypergraph JSON");
  std::string gen_family;
  int gen_n = 0, gen_k = 2;
  generate_cmd->add_option("--family", gen_family, "chain|ring|star|complete")->required();
  generate_cmd->add_option("--n", gen_n, "node count")->required();
  generate_cmd->add_option("--k", gen_k, "edge cardinality")->capture_default_str();
  output.add_to(generate_cmd);

  // observable
  auto* observable_cmd = app.add_subcommand("observable", "decide local weak observability for a sensor set");
  GraphSource obs_source;
  RankFlags obs_rank;
  std::vector<int> obs_sensors;
  std::optional<int> obs_depth;
  bool obs_exact = false;
  obs_source.add_to(observable_cmd);
  obs_rank.add_to(observable_cmd);
  observable_cmd->add_option("--sensors", obs_sensors, "observed nodes, 1-based")->delimiter(',');
  observable_cmd->add_option("--depth", obs_depth, "Lie-derivative depth r (default n)");
  observable_cmd->add_flag("--exact", obs_exact, "also compute the exact rank by minors (n <= 3)");
  output.add_to(observable_cmd);

  // mon
  auto* mon_cmd = app.add_subcommand("mon", "find a minimum observable node set");
  GraphSource mon_source;
  RankFlags mon_rank;
  std::string mon_method = "greedy";
  int mon_max_size = 0;
  mon_source.add_to(mon_cmd);
  mon_rank.add_to(mon_cmd);
  mon_cmd->add_option("--method", mon_method, "greedy|exhaustive")->capture_default_str();
  mon_cmd->add_option("--max-size", mon_max_size, "largest set size for exhaustive search (default n)");
  output.add_to(mon_cmd);

  // prop15
  auto* prop_cmd = app.add_subcommand("prop15", "compare verdicts with and without lower-cardinality edges");
  GraphSource prop_source;
  RankFlags prop_rank;
  std::vector<int> prop_sensors;
  prop_source.add_to(prop_cmd);
  prop_rank.add_to(prop_cmd);
  prop_cmd->add_option("--sensors", prop_sensors, "observed nodes, 1-based")->delimiter(',');
  output.add_to(prop_cmd);

  // figure2
  auto* fig_cmd = app.add_subcommand("figure2", "greedy MON sizes as 3-way edges are added to each family");
  int fig_n = 5;
  std::uint64_t fig_seed = 0;
  std::string fig_format = "csv";
  std::vector<std::string> fig_families{"chain", "ring", "star", "complete"};
  fig_cmd->add_option("--n", fig_n, "node count")->capture_default_str();
  fig_cmd->add_option("--seed", fig_seed, "root seed")->capture_default_str();
  fig_cmd->add_option("--format", fig_format, "csv|json")->capture_default_str();
  fig_cmd->add_option("--families", fig_families, "subset of chain,ring,star,complete")->delimiter(',');
  output.add_to(fig_cmd);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "integrate the hypergraph dynamics with RK4");
  GraphSource sim_source;
  std::string sim_x0;
  double sim_dt = 0.01;
  int sim_steps = 100;
  sim_source.add_to(sim_cmd);
  sim_cmd->add_option("--x0", sim_x0, "initial state, comma separated")->required();
  sim_cmd->add_option("--dt", sim_dt, "step size")->capture_default_str();
  sim_cmd->add_option("--steps", sim_steps, "number of steps")->capture_default_str();
  output.add_to(sim_cmd);

  // unfold
  auto* unfold_cmd = app.add_subcommand("unfold", "dump a mode-p unfolded adjacency tensor as coordinates");
  GraphSource unfold_source;
  int unfold_order = 2, unfold_mode = 1;
  unfold_source.add_to(unfold_cmd);
  unfold_cmd->add_option("--order", unfold_order, "tensor order (edge cardinality)")->required();
  unfold_cmd->add_option("--mode", unfold_mode, "unfolding mode p")->capture_default_str();
  output.add_to(unfold_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    caps = Caps::from_env();

    if (*generate_cmd) {
      auto g = generate(parse_family(gen_family), gen_n, gen_k);
      output.emit(io::hypergraph_to_json(g).dump() + "\n");
      std::cerr << gen_family << "(n=" << gen_n << ", k=" << gen_k << "): " << g.edge_count() << " edges\n";
      return kExitOk;
    }

    if (*observable_cmd) {
      auto g = obs_source.load();
      auto sensors = parse_sensors(obs_sensors, g.node_count());
      ObservabilityOptions options;
      options.depth = obs_depth;
      options.rank = obs_rank.options();
      options.caps = caps;
      options.exact = obs_exact;
      auto verdict = is_locally_weakly_observable(g, sensor_matrix(sensors, g.node_count()), options);
      output.emit(io::verdict_to_json(verdict, sensors, obs_rank.seed).dump() + "\n");
      std::cerr << (verdict.observable ? "observable" : "not observable") << ": rank " << verdict.certificate.rank
                << " of " << g.node_count() << " at depth " << verdict.r_used << "\n";
      return verdict.observable ? kExitOk : kExitNegative;
    }

    if (*mon_cmd) {
      auto g = mon_source.load();
      MonOptions options;
      options.seed = mon_rank.seed;
      if (!mon_rank.primes.empty()) options.primes = mon_rank.primes;
      options.caps = caps;
      MonReport report;
      if (mon_method == "greedy") {
        report = greedy_mon(g, options);
      } else if (mon_method == "exhaustive") {
        report = exhaustive_mon(g, mon_max_size > 0 ? mon_max_size : g.node_count(), options);
      } else {
        throw UsageError("--method must be greedy or exhaustive");
      }
      output.emit(io::mon_report_to_json(report, options.seed).dump() + "\n");
      std::cerr << method_name(report.method) << " MON size " << report.sensors.size() << "\n";
      return report.found ? kExitOk : kExitNegative;
    }

    if (*prop_cmd) {
      auto g = prop_source.load();
      auto sensors = parse_sensors(prop_sensors, g.node_count());
      ObservabilityOptions options;
      options.rank = prop_rank.options();
      options.caps = caps;
      auto report = check_proposition15(g, sensor_matrix(sensors, g.node_count()), options);
      output.emit(io::prop15_to_json(report, sensors, prop_rank.seed).dump() + "\n");
      std::cerr << "restricted observable: " << report.restricted.observable
                << ", full observable: " << report.full.observable
                << (report.implication_holds ? "" : "  VIOLATION") << "\n";
      return report.implication_holds ? kExitOk : kExitNegative;
    }

    if (*fig_cmd) {
      if (fig_format != "csv" && fig_format != "json") throw UsageError("--format must be csv or json");
      MonOptions options;
      options.seed = fig_seed;
      options.caps = caps;
      std::vector<ExperimentRow> rows;
      for (const auto& name : fig_families) {
        auto part = monotonicity_experiment(parse_family(name), fig_n, options);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      output.emit(fig_format == "csv" ? io::experiment_csv(rows) : io::experiment_to_json(rows, fig_seed).dump(2) + "\n");
      std::cerr << "seed " << fig_seed << ", " << rows.size() << " rows\n";
      return kExitOk;
    }

    if (*sim_cmd) {
      auto g = sim_source.load();
      auto x0 = parse_state(sim_x0);
      if (static_cast<int>(x0.size()) != g.node_count()) throw UsageError("--x0 must have n entries");
      auto traj = simulate(vector_field(g), x0, sim_dt, sim_steps);
      output.emit(io::trajectory_csv(traj));
      return kExitOk;
    }

    if (*unfold_cmd) {
      auto g = unfold_source.load();
      output.emit(unfold(adjacency_tensor(g, unfold_order), unfold_mode).to_coordinate_text());
      return kExitOk;
    }
  } catch (const BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << "\n";
    return kExitError;
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitError;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
