#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logcave/barriers.hpp"
#include "logcave/eigensolver.hpp"
#include "logcave/geometry.hpp"
#include "logcave/verifier.hpp"

namespace logcave {

inline constexpr const char* kVersion = "0.3.0";

/// Names accepted in the "checks" list.
std::vector<std::string> check_names();

struct RunConfig {
  // chart
  ChartKind chart = ChartKind::Euclidean;
  double amplitude = 0.0;
  Bump bump;
  // domain; geodesic_radius > 0 places a geodesic ball at the chart origin
  Shape shape = Shape::Disk;
  Vec2 center{};
  double radius = 1.0;
  double geodesic_radius = 0.0;
  double semi_x = 1.0;
  double semi_y = 1.0;
  double width = 1.0;
  double height = 1.0;
  RadialProfile profile;
  // grid
  double level = 128.0;
  std::optional<double> h;
  SolverOptions solver;
  // constants
  Preset preset = Preset::Euclidean;
  double C = 1.0;
  double eps = 0.0;
  double alpha = 0.0;
  double d = 0.0;
  int n = 2;
  std::optional<double> lambda_override;  ///< evaluate constants without solving
  // checks
  std::vector<std::string> checks;
  int sweep_steps = 11;
  ProbeOptions probe;
  double tol_scale = 1.0;
  bool refinement = false;  ///< repeat the barrier inequality at h / 2 and compare margins
  bool heatmaps = true;
  std::string output = "out";

  Domain domain() const;
  MetricChart metric() const;
  double effective_level() const;
};

/// Strict parse: unknown keys and malformed values raise ConfigError.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
/// Fully resolved configuration including every default.
nlohmann::json to_json(const RunConfig& config);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const BarrierConstants& constants);
nlohmann::json to_json(const CurvatureBudget& budget);
nlohmann::json to_json(const ConvergenceStudy& study);

enum class Stage { Solve, Constants, Verify, ProbeBoundary, Sweep };

std::string to_string(Stage stage);

struct RunResult {
  int exit_code = 0;
  nlohmann::json report;  ///< deterministic
  std::string text;       ///< aligned human-readable summary
};

/// Runs the stage and writes manifest.json, report.json, report.txt and CSV/SVG artifacts
/// into config.output. Errors are caught and reported with the documented exit codes.
RunResult run(const RunConfig& config, Stage stage, const std::string& fixtures_file, const std::string& command_line);

/// Same computation without touching the filesystem.
RunResult evaluate(const RunConfig& config, Stage stage);

/// Lower-case hex SHA-256 of a file's bytes; empty string if the file cannot be read.
std::string sha256_file(const std::string& path);

}  // namespace logcave
