#ifndef PLATEWAVE_SCENARIO_HPP
#define PLATEWAVE_SCENARIO_HPP

#include "platewave/coefficient.hpp"
#include "platewave/mesh.hpp"
#include "platewave/time_schemes.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace platewave {

/// Axis-aligned sensor rectangle (cx - l, cx + l) x (cy - l, cy + l).
struct SensorRegion {
  double cx = 0.75;
  double cy = 0.0;
  double half_width = 1.0 / 32.0;

  Rect rect() const {
    return {cx - half_width, cx + half_width, cy - half_width, cy + half_width};
  }
};

struct CoefficientSpec {
  std::string kind = "constant";  // constant | step_y
  double value = 1.0;             // constant
  double y0 = 0.2;                // step_y interface
  double below = 1.0;
  double above = 9.0;

  CoefficientField make() const;
};

struct ScenarioConfig {
  Rect domain;
  int nx = 32;
  int ny = 32;
  double final_time = 0.03;
  int steps = 30;
  SchemeKind scheme = SchemeKind::gc3;
  CoefficientSpec coefficient;
  std::string initial = "zero";
  std::string forcing = "zero";
  bool sensor_enabled = true;
  SensorRegion sensor;
  int sample_per_step = 1;  // m > 1 adds m-1 interior sensor samples per step
  std::vector<double> snapshot_times;
  std::string output_dir = ".";
};

/// INI-style parser ([section] + key = value). Errors carry file and line.
ScenarioConfig parse_scenario_config(std::istream& in, const std::string& filename);
ScenarioConfig load_scenario_config(const std::filesystem::path& path);

/// Integral of the discrete deflection over the sensor rectangle at time t.
/// The rectangle is clipped against the mesh grid lines and each fragment is
/// integrated with a 4-point tensor Gauss rule (exact for the bicubic field).
double sensor_value(const TensorMesh& mesh, const DofMap& dofmap, const SolutionTrajectory& traj,
                    const SensorRegion& region, double t);

struct RunArtifacts {
  std::filesystem::path sensor_csv;
  std::vector<std::filesystem::path> snapshots;
  std::filesystem::path counts_report;
  RunReport report;
};

/// Executes a configured run and writes the sensor CSV, grid snapshots and
/// the dof/nnz report into the output directory. Deterministic: identical
/// configs produce identical bytes.
RunArtifacts run_scenario(const ScenarioConfig& config);

}  // namespace platewave

#endif
