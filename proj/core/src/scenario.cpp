#include "platewave/scenario.hpp"

#include "platewave/assembly.hpp"
#include "platewave/cases.hpp"
#include "platewave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace platewave {

namespace fs = std::filesystem;

CoefficientField CoefficientSpec::make() const {
  if (kind == "constant") return CoefficientField::constant(value);
  if (kind == "step_y") return CoefficientField::step_y(y0, below, above);
  throw ConfigError("unknown coefficient kind '" + kind + "' (expected constant or step_y)");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct IniEntry {
  std::string value;
  int line = 0;
};

// section -> key -> entry
using IniData = std::map<std::string, std::map<std::string, IniEntry>>;

class IniFile {
public:
  IniFile(std::istream& in, std::string filename) : filename_(std::move(filename)) {
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string s = trim(line);
      if (s.empty() || s[0] == '#' || s[0] == ';') continue;
      if (s.front() == '[') {
        if (s.back() != ']') fail(lineno, "unterminated section header");
        section = trim(s.substr(1, s.size() - 2));
        if (section.empty()) fail(lineno, "empty section name");
        continue;
      }
      const auto eq = s.find('=');
      if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
      const std::string key = trim(s.substr(0, eq));
      if (key.empty()) fail(lineno, "empty key");
      if (section.empty()) fail(lineno, "key '" + key + "' outside any [section]");
      data_[section][key] = {trim(s.substr(eq + 1)), lineno};
    }
  }

  bool has(const std::string& section, const std::string& key) const {
    const auto s = data_.find(section);
    return s != data_.end() && s->second.count(key) > 0;
  }

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
    return has(section, key) ? data_.at(section).at(key).value : fallback;
  }

  double get_double(const std::string& section, const std::string& key, double fallback) const {
    if (!has(section, key)) return fallback;
    return parse_double(data_.at(section).at(key), section, key);
  }

  int get_int(const std::string& section, const std::string& key, int fallback) const {
    if (!has(section, key)) return fallback;
    const IniEntry& e = data_.at(section).at(key);
    try {
      std::size_t pos = 0;
      const int v = std::stoi(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(e.line, "expected integer for '" + key + "' in [" + section + "], got '" + e.value + "'");
    }
  }

  bool get_bool(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const IniEntry& e = data_.at(section).at(key);
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    fail(e.line, "expected boolean for '" + key + "' in [" + section + "], got '" + e.value + "'");
  }

  std::vector<double> get_double_list(const std::string& section, const std::string& key) const {
    std::vector<double> out;
    if (!has(section, key)) return out;
    const IniEntry& e = data_.at(section).at(key);
    std::string item;
    std::istringstream ss(e.value);
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      out.push_back(parse_double({item, e.line}, section, key));
    }
    return out;
  }

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw ConfigError(filename_ + ":" + std::to_string(line) + ": " + message);
  }

private:
  double parse_double(const IniEntry& e, const std::string& section, const std::string& key) const {
    try {
      std::size_t pos = 0;
      const double v = std::stod(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(e.line, "expected number for '" + key + "' in [" + section + "], got '" + e.value + "'");
    }
  }

  std::string filename_;
  IniData data_;
};

void validate_sensor(const ScenarioConfig& cfg) {
  if (!cfg.sensor_enabled) return;
  const Rect r = cfg.sensor.rect();
  const double tol = 1e-12 * std::max(cfg.domain.width(), cfg.domain.height());
  if (r.x_min < cfg.domain.x_min - tol || r.x_max > cfg.domain.x_max + tol ||
      r.y_min < cfg.domain.y_min - tol || r.y_max > cfg.domain.y_max + tol)
    throw ConfigError("sensor region lies outside the domain");
  if (!(cfg.sensor.half_width > 0.0)) throw ConfigError("sensor half_width must be positive");
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ScenarioConfig parse_scenario_config(std::istream& in, const std::string& filename) {
  const IniFile ini(in, filename);
  ScenarioConfig cfg;

  cfg.domain.x_min = ini.get_double("domain", "x_min", -1.0);
  cfg.domain.x_max = ini.get_double("domain", "x_max", 1.0);
  cfg.domain.y_min = ini.get_double("domain", "y_min", -1.0);
  cfg.domain.y_max = ini.get_double("domain", "y_max", 1.0);

  cfg.nx = ini.get_int("mesh", "nx", 32);
  cfg.ny = ini.get_int("mesh", "ny", 32);

  cfg.final_time = ini.get_double("time", "final_time", 0.03);
  cfg.steps = ini.get_int("time", "steps", 30);

  cfg.scheme = scheme_from_string(ini.get_string("scheme", "kind", "gc3"));

  cfg.coefficient.kind = ini.get_string("coefficient", "kind", "constant");
  cfg.coefficient.value = ini.get_double("coefficient", "value", 1.0);
  cfg.coefficient.y0 = ini.get_double("coefficient", "y0", 0.2);
  cfg.coefficient.below = ini.get_double("coefficient", "below", 1.0);
  cfg.coefficient.above = ini.get_double("coefficient", "above", 9.0);

  cfg.initial = ini.get_string("initial", "case", "zero");
  cfg.forcing = ini.get_string("forcing", "kind", "zero");

  cfg.sensor_enabled = ini.get_bool("sensor", "enabled", true);
  cfg.sensor.cx = ini.get_double("sensor", "center_x", 0.75);
  cfg.sensor.cy = ini.get_double("sensor", "center_y", 0.0);
  cfg.sensor.half_width = ini.get_double("sensor", "half_width", 1.0 / 32.0);
  cfg.sample_per_step = ini.get_int("sensor", "sample_per_step", 1);

  cfg.snapshot_times = ini.get_double_list("output", "snapshot_times");
  cfg.output_dir = ini.get_string("output", "dir", ".");

  // Constructor-level checks run again later; validate the cross-field
  // constraints that only the config knows about.
  validate_sensor(cfg);
  if (cfg.sample_per_step < 1) throw ConfigError("sensor sample_per_step must be >= 1");
  for (const double t : cfg.snapshot_times)
    if (t < 0.0 || t > cfg.final_time)
      throw ConfigError("snapshot time " + std::to_string(t) + " outside [0, T]");
  // Validate names and mesh/time parameters eagerly for better diagnostics.
  (void)cfg.coefficient.make();
  (void)initial_by_name(cfg.initial, CoefficientField::constant(1.0));
  (void)forcing_by_name(cfg.forcing);
  (void)TensorMesh(cfg.domain, cfg.nx, cfg.ny);
  (void)TimePartition(cfg.final_time, cfg.steps);
  return cfg;
}

ScenarioConfig load_scenario_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_scenario_config(in, path.string());
}

double sensor_value(const TensorMesh& mesh, const DofMap& dofmap, const SolutionTrajectory& traj,
                    const SensorRegion& region, double t) {
  const Rect r = region.rect();
  const Rect& d = mesh.domain();
  const double tol = 1e-12 * std::max(d.width(), d.height());
  if (r.x_min < d.x_min - tol || r.x_max > d.x_max + tol || r.y_min < d.y_min - tol ||
      r.y_max > d.y_max + tol)
    throw ConfigError("sensor region lies outside the domain");

  const Vector u = traj.evaluate(t, SolutionTrajectory::Field::deflection);

  // Grid-line cuts so that each fragment lies in a single cell.
  auto cuts = [tol](double a, double b, double origin, double h, int n) {
    std::vector<double> v{a};
    const int i0 = std::max(0, static_cast<int>(std::ceil((a - origin) / h - 1e-12)));
    const int i1 = std::min(n, static_cast<int>(std::floor((b - origin) / h + 1e-12)));
    for (int i = i0; i <= i1; ++i) {
      const double x = origin + i * h;
      if (x > a + tol && x < b - tol) v.push_back(x);
    }
    v.push_back(b);
    return v;
  };
  const std::vector<double> xs = cuts(r.x_min, r.x_max, d.x_min, mesh.hx(), mesh.nx());
  const std::vector<double> ys = cuts(r.y_min, r.y_max, d.y_min, mesh.hy(), mesh.ny());

  const QuadratureRule1D rule = gauss_legendre(4);
  double total = 0.0;
  for (std::size_t sy = 0; sy + 1 < ys.size(); ++sy) {
    for (std::size_t sx = 0; sx + 1 < xs.size(); ++sx) {
      const double wx = xs[sx + 1] - xs[sx];
      const double wy = ys[sy + 1] - ys[sy];
      double frag = 0.0;
      for (int qy = 0; qy < rule.size(); ++qy) {
        for (int qx = 0; qx < rule.size(); ++qx) {
          const double px = xs[sx] + rule.nodes[qx] * wx;
          const double py = ys[sy] + rule.nodes[qy] * wy;
          frag += rule.weights[qx] * rule.weights[qy] * eval_field_free(mesh, dofmap, u, px, py);
        }
      }
      total += frag * wx * wy;
    }
  }
  return total;
}

namespace {

void write_snapshot(const fs::path& path, const TensorMesh& mesh, const DofMap& dofmap,
                    const Vector& free_dofs, double t) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write snapshot file '" + path.string() + "'");
  os << "nx " << mesh.nx() << "\n";
  os << "ny " << mesh.ny() << "\n";
  os << "domain " << format_g17(mesh.domain().x_min) << ' ' << format_g17(mesh.domain().x_max)
     << ' ' << format_g17(mesh.domain().y_min) << ' ' << format_g17(mesh.domain().y_max) << "\n";
  os << "t " << format_g17(t) << "\n";
  for (int iy = 0; iy <= mesh.ny(); ++iy) {
    for (int ix = 0; ix <= mesh.nx(); ++ix) {
      const int node = iy * (mesh.nx() + 1) + ix;
      const int fi = dofmap.free_index(DofMap::global_index(node, DofKind::value));
      os << (ix ? " " : "") << format_g17(fi >= 0 ? free_dofs[fi] : 0.0);
    }
    os << "\n";
  }
}

}  // namespace

RunArtifacts run_scenario(const ScenarioConfig& cfg) {
  validate_sensor(cfg);
  const TensorMesh mesh(cfg.domain, cfg.nx, cfg.ny);
  const DofMap dofmap(mesh);
  const CoefficientField c = cfg.coefficient.make();
  const AssembledOperators ops = assemble(mesh, dofmap, c);
  const TimePartition partition(cfg.final_time, cfg.steps);
  const InitialData init = initial_by_name(cfg.initial, c);
  const RhsModel rhs = forcing_by_name(cfg.forcing);

  RunArtifacts artifacts;
  const SolutionTrajectory traj =
      run_simulation(mesh, dofmap, ops, cfg.scheme, partition, init, rhs, &artifacts.report);

  const fs::path out_dir(cfg.output_dir);
  fs::create_directories(out_dir);

  if (cfg.sensor_enabled) {
    artifacts.sensor_csv = out_dir / "sensor.csv";
    std::ofstream os(artifacts.sensor_csv);
    if (!os) throw ConfigError("cannot write '" + artifacts.sensor_csv.string() + "'");
    os << "t,u_c\n";
    auto row = [&](double t) {
      os << format_g17(t) << ',' << format_g17(sensor_value(mesh, dofmap, traj, cfg.sensor, t))
         << '\n';
    };
    row(partition.node(0));
    for (int n = 1; n <= partition.intervals(); ++n) {
      for (int j = 1; j < cfg.sample_per_step; ++j)
        row(partition.node(n - 1) + j * partition.tau(n) / cfg.sample_per_step);
      row(partition.node(n));
    }
  }

  for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%03zu.txt", i);
    const fs::path path = out_dir / name;
    const double t = cfg.snapshot_times[i];
    write_snapshot(path, mesh, dofmap, traj.evaluate(t, SolutionTrajectory::Field::deflection), t);
    artifacts.snapshots.push_back(path);
  }

  {
    artifacts.counts_report = out_dir / "counts.txt";
    std::ofstream os(artifacts.counts_report);
    if (!os) throw ConfigError("cannot write '" + artifacts.counts_report.string() + "'");
    os << "cells: " << mesh.cell_count() << "\n";
    os << "dofs: total " << ops.counts.total_dofs << " free " << ops.counts.free_dofs << "\n";
    const double tau = partition.tau(1);
    for (const SchemeKind kind : {SchemeKind::cgp1, SchemeKind::cgp2, SchemeKind::gc3}) {
      const SystemCounts sc = system_counts(mesh, ops, kind, tau);
      os << to_string(kind) << ": " << sc.dof_paper << " " << sc.nnz << "\n";
    }
    if (cfg.scheme == SchemeKind::gc3) {
      os << "collocation_residual_velocity " << format_g17(artifacts.report.max_collocation_velocity)
         << "\n";
      os << "collocation_residual_pde " << format_g17(artifacts.report.max_collocation_pde) << "\n";
    }
  }
  return artifacts;
}

}  // namespace platewave
