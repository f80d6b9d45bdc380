#pragma once

#include "mmplan/metrics.hpp"
#include "mmplan/network.hpp"
#include "mmplan/plan.hpp"
#include "mmplan/planner.hpp"
#include "mmplan/poles.hpp"
#include "mmplan/scene.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmplan {

using Json = nlohmann::json;

/// Malformed input file; the message names the file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load_json(const std::filesystem::path& path);
/// Creates missing parent directories.
void save_json(const std::filesystem::path& path, const Json& doc);

// Problem file:
//   {sites: [{id, kind, x, y, cost, demand, sectors: [{id, cost, kind, reachable}]}],
//    arcs: [{from, to, throughput, quality, from_sector, to_sector}],
//    objective, alpha, max_hops, budget}
// An infinite budget is written as null.
Json to_json(const DesignProblem& problem);
DesignProblem problem_from_json(const Json& doc);  // validates; throws InvalidProblem

Json to_json(const Plan& plan);
Plan plan_from_json(const Json& doc);

Json to_json(const PlanMetrics& metrics);

/// FeatureCollection: a Point per site and a LineString per arc, with properties
/// {id, kind, active, flow, polarity}.
Json plan_geojson(const DesignProblem& problem, const Plan& plan);

// Detected sites: [{id, x, y, ground_z, mount_z, height}].
Json to_json(const std::vector<DetectedPole>& poles);
std::vector<LosSite> sites_from_json(const Json& doc);
Json to_json(const std::vector<LosSite>& sites);

// LoS edges: [{a, b, distance, obstructions, height}].
Json to_json(const std::vector<LosEdge>& edges);
std::vector<LosEdge> edges_from_json(const Json& doc);

// Street ways: [{id, nodes: [[x, y], ...]}].
Json to_json(const std::vector<StreetWay>& ways);
std::vector<StreetWay> ways_from_json(const Json& doc);

// Demand points: [{id, x, y, demand}].
std::vector<Site> demands_from_json(const Json& doc);

Json to_json(const SceneTruth& truth);
SceneTruth truth_from_json(const Json& doc);

Json to_json(const std::vector<SensitivityRow>& rows);
/// Fixed-width text table, one row per multiplier.
void write_sensitivity_table(std::ostream& out, const std::vector<SensitivityRow>& rows);

}  // namespace mmplan
