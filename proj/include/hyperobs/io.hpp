#pragma once

#include "hyperobs/dynamics.hpp"
#include "hyperobs/hypergraph.hpp"
#include "hyperobs/mon.hpp"
#include "hyperobs/observability.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hyperobs::io {

using Json = nlohmann::ordered_json;

/// {"n": <int>, "edges": [[...], ...]} with edges in lexicographic order.
Json hypergraph_to_json(const Hypergraph& g);
/// Applies the same validation as Hypergraph::create; throws
/// std::invalid_argument on malformed documents.
Hypergraph hypergraph_from_json(const Json& doc);
Hypergraph read_hypergraph(const std::string& path);
void write_text(const std::string& path, const std::string& text);

Json verdict_to_json(const ObservabilityVerdict& verdict, const SensorSet& sensors, std::uint64_t seed);
Json mon_report_to_json(const MonReport& report, std::uint64_t seed);
Json prop15_to_json(const Prop15Report& report, const SensorSet& sensors, std::uint64_t seed);

/// family,n,column,mon_size,sensors  (sensors space-separated; empty when skipped)
std::string experiment_csv(const std::vector<ExperimentRow>& rows);
Json experiment_to_json(const std::vector<ExperimentRow>& rows, std::uint64_t seed);

/// Header t,x1,...,xn then one row per state.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace hyperobs::io
