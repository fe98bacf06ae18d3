#include "hyperobs/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyperobs::io {

namespace {

std::string sensors_text(const SensorSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) out += (i ? " " : "") + std::to_string(s.nodes[i]);
  return out;
}

Json certificate_trials(const RankCertificate& cert) {
  Json trials = Json::array();
  for (const auto& t : cert.trials) trials.push_back({{"prime", t.prime}, {"seed", t.seed}, {"rank", t.rank}});
  return trials;
}

Json verdict_body(const ObservabilityVerdict& v) {
  Json j;
  j["r_used"] = v.r_used;
  j["rank"] = v.certificate.rank;
  j["observable"] = v.observable;
  j["trials"] = certificate_trials(v.certificate);
  j["failure_bound"] = v.certificate.failure_bound.get_str();
  if (v.certificate.low_confidence) j["low_confidence"] = true;
  if (v.exact_rank) j["exact_rank"] = *v.exact_rank;
  return j;
}

}  // namespace

Json hypergraph_to_json(const Hypergraph& g) {
  Json j;
  j["n"] = g.node_count();
  j["edges"] = g.edges_one_based();
  return j;
}

Hypergraph hypergraph_from_json(const Json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
      throw std::invalid_argument("hypergraph document needs \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
    if (!doc["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    std::vector<std::vector<int>> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array()) throw std::invalid_argument("each edge must be an array of node ids");
      std::vector<int> ids;
      for (const auto& id : e) {
        if (!id.is_number_integer()) throw std::invalid_argument("node ids must be integers");
        ids.push_back(id.get<int>());
      }
      edges.push_back(std::move(ids));
    }
    return Hypergraph::create(doc["n"].get<int>(), edges);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed hypergraph document: ") + e.what());
  }
}

Hypergraph read_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return hypergraph_from_json(doc);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json verdict_to_json(const ObservabilityVerdict& verdict, const SensorSet& sensors, std::uint64_t seed) {
  Json j;
  j["n"] = verdict.certificate.n;
  j["sensors"] = sensors.nodes;
  const Json body = verdict_body(verdict);
  for (const auto& [key, value] : body.items()) j[key] = value;
  j["seed"] = seed;
  return j;
}

Json mon_report_to_json(const MonReport& report, std::uint64_t seed) {
  Json j;
  j["hypergraph"] = report.hypergraph;
  j["method"] = method_name(report.method);
  j["found"] = report.found;
  j["size"] = report.sensors.size();
  j["sensors"] = report.sensors.nodes;
  if (report.method == MonMethod::greedy) {
    Json trace = Json::array();
    for (const auto& step : report.trace) trace.push_back({{"node", step.node}, {"rank", step.rank}});
    j["trace"] = trace;
  }
  j["rank_tests"] = report.rank_tests;
  if (!report.note.empty()) j["note"] = report.note;
  j["seed"] = seed;
  return j;
}

Json prop15_to_json(const Prop15Report& report, const SensorSet& sensors, std::uint64_t seed) {
  Json j;
  j["sensors"] = sensors.nodes;
  j["max_cardinality"] = report.max_cardinality;
  j["restricted"] = verdict_body(report.restricted);
  j["full"] = verdict_body(report.full);
  j["restricted_observable"] = report.restricted.observable;
  j["full_observable"] = report.full.observable;
  j["implication_holds"] = report.implication_holds;
  j["seed"] = seed;
  return j;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream os;
  os << "family,n,column,mon_size,sensors\n";
  for (const auto& r : rows) {
    os << family_name(r.family) << ',' << r.n << ',' << r.column << ',';
    if (r.skipped) {
      os << "skipped,";
    } else {
      os << r.mon.sensors.size() << ',' << sensors_text(r.mon.sensors);
    }
    os << '\n';
  }
  return os.str();
}

Json experiment_to_json(const std::vector<ExperimentRow>& rows, std::uint64_t seed) {
  Json out;
  out["seed"] = seed;
  Json list = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["family"] = family_name(r.family);
    j["n"] = r.n;
    j["column"] = r.column;
    j["skipped"] = r.skipped;
    if (r.skipped) {
      j["note"] = r.mon.note;
    } else {
      j["mon"] = mon_report_to_json(r.mon, seed);
      j["mon"].erase("seed");
    }
    list.push_back(std::move(j));
  }
  out["rows"] = std::move(list);
  return out;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream os;
  os.precision(17);
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  os << 't';
  for (std::size_t i = 1; i <= n; ++i) os << ",x" << i;
  os << '\n';
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    os << static_cast<double>(s) * traj.dt;
    for (double v : traj.states[s]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace hyperobs::io
