#pragma once

#include "mmplan/io.hpp"
#include "mmplan/los.hpp"
#include "mmplan/network.hpp"
#include "mmplan/pca.hpp"
#include "mmplan/planner.hpp"
#include "mmplan/poles.hpp"
#include "mmplan/scene.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mmplan {

/// File locations used by the stages. Relative paths in a config file resolve
/// against the file's directory. Empty means "not configured".
struct PipelinePaths {
  std::filesystem::path cloud;        // raw cloud (generate writes, classify reads)
  std::filesystem::path labeled;      // labeled cloud (classify writes, detect/los read)
  std::filesystem::path ways;         // street ways JSON, optional
  std::filesystem::path truth;        // generator ground truth
  std::filesystem::path sites;        // detected sites (detect writes, los/plan read)
  std::filesystem::path edges;        // LoS edges (los writes, plan reads)
  std::filesystem::path pops;         // ["site id", ...]
  std::filesystem::path demands;      // [{id, x, y, demand}]
  std::filesystem::path cns;          // CN sites, optional
  std::filesystem::path problem;      // plan/sensitivity/serve read it when set
  std::filesystem::path plan;         // plan output
  std::filesystem::path geojson;      // plan GeoJSON output, optional
  std::filesystem::path sensitivity;  // sensitivity table JSON
};

struct PipelineConfig {
  PcaParams pca;
  DetectionParams detection;
  LosParams los;
  NetworkConfig network;
  SolveControls controls;
  MipOptions mip;
  SceneSpec scene;
  double downsample = 0.1;  // classify thinning spacing in meters; 0 keeps every point
  double cell_size = HashedGrid::kDefaultCellSize;
  double street_distance = kDefaultStreetDistance;
  bool two_stage = false;  // plan runs two_stage_solve instead of the direct solve
  std::vector<double> multipliers{1.0, 2.0, 4.0, 8.0};
  PipelinePaths paths;

  /// Checks every parameter block; throws std::invalid_argument.
  void validate() const;
};

/// Reads a config document; unknown keys are errors. Relative paths resolve
/// against `base_dir`. Throws FormatError.
PipelineConfig config_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);
Json to_json(const PipelineConfig& config);

// Each stage reads its inputs, writes `out` (or the configured output path) and
// returns a one-line summary.
std::string cmd_generate(const PipelineConfig& config, const std::filesystem::path& out = {});
std::string cmd_classify(const PipelineConfig& config, const std::filesystem::path& out = {});
std::string cmd_detect(const PipelineConfig& config, const std::filesystem::path& out = {});
std::string cmd_los(const PipelineConfig& config, const std::filesystem::path& out = {});
std::string cmd_plan(const PipelineConfig& config, const std::filesystem::path& out = {});
std::string cmd_sensitivity(const PipelineConfig& config, std::ostream& table,
                            const std::filesystem::path& out = {});

/// The problem `plan`, `sensitivity` and `serve` work on: the problem file when
/// configured, otherwise one built from sites, edges, pops, demands and cns.
DesignProblem load_problem(const PipelineConfig& config);

/// Blocks serving the HTTP API on `port`; 0 picks a free port. Logs the bound port.
void serve(const PipelineConfig& config, int port, std::ostream& log);

}  // namespace mmplan
