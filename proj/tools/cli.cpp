#include "cli.hpp"

#include "platewave/assembly.hpp"
#include "platewave/cases.hpp"
#include "platewave/error_norms.hpp"
#include "platewave/scenario.hpp"
#include "platewave/time_schemes.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace platewave {

namespace fs = std::filesystem;

namespace {

int run_converge(const std::string& scheme_name, int levels, const std::string& case_name,
                 const std::string& out_dir, double tau0, int base_cells) {
  const SchemeKind scheme = scheme_from_string(scheme_name);
  if (case_name != "fct2")
    throw ConfigError("unknown case '" + case_name + "' (available: fct2)");
  const ManufacturedCase mcase = fct2_case();

  StudyConfig config;
  config.tau0 = tau0;
  config.base_cells = base_cells;
  const EocTable table = run_study(scheme, mcase, levels, config);

  write_eoc_text(std::cout, table);

  fs::create_directories(out_dir);
  const fs::path csv = fs::path(out_dir) / ("eoc_" + to_string(scheme) + ".csv");
  std::ofstream os(csv);
  if (!os) throw ConfigError("cannot write '" + csv.string() + "'");
  write_eoc_csv(os, table);
  std::cout << "wrote " << csv.string() << "\n";
  return 0;
}

int run_run(const std::string& config_file, const std::string& out_dir) {
  ScenarioConfig cfg = load_scenario_config(config_file);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  const RunArtifacts artifacts = run_scenario(cfg);
  if (!artifacts.sensor_csv.empty())
    std::cout << "wrote " << artifacts.sensor_csv.string() << "\n";
  for (const auto& snap : artifacts.snapshots) std::cout << "wrote " << snap.string() << "\n";
  std::cout << "wrote " << artifacts.counts_report.string() << "\n";
  return 0;
}

int run_info(const std::string& config_file) {
  const ScenarioConfig cfg = load_scenario_config(config_file);
  const TensorMesh mesh(cfg.domain, cfg.nx, cfg.ny);
  const DofMap dofmap(mesh);
  const AssembledOperators ops = assemble(mesh, dofmap, cfg.coefficient.make());
  const double tau = cfg.final_time / cfg.steps;

  std::cout << "cells: " << mesh.cell_count() << "\n";
  std::cout << "dofs: total " << ops.counts.total_dofs << " free " << ops.counts.free_dofs << "\n";
  for (const SchemeKind kind : {SchemeKind::cgp1, SchemeKind::cgp2, SchemeKind::gc3}) {
    const SystemCounts counts = system_counts(mesh, ops, kind, tau);
    std::cout << to_string(kind) << ": " << counts.dof_paper << " " << counts.nnz << "\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Clamped-plate (biharmonic) wave solver: BFS elements in space, "
               "cGP(1)/cGP(2)/gc3 schemes in time"};
  app.require_subcommand(1);

  auto* converge = app.add_subcommand("converge", "Run the manufactured-solution convergence study");
  std::string scheme = "gc3", case_name = "fct2", out_dir = ".";
  int levels = 4, base_cells = 5;
  double tau0 = 0.1;
  converge->add_option("--scheme", scheme, "Time scheme: cgp1 | cgp2 | gc3")->required();
  converge->add_option("--levels", levels, "Number of refinement levels")->required();
  converge->add_option("--case", case_name, "Benchmark case (fct2)");
  converge->add_option("--out", out_dir, "Output directory for the EOC CSV");
  converge->add_option("--tau0", tau0, "Coarsest time step");
  converge->add_option("--base-cells", base_cells, "Cells per direction at level 0");

  auto* run = app.add_subcommand("run", "Run a configured scenario");
  std::string config_file, run_out;
  run->add_option("--config", config_file, "Scenario config file")->required();
  run->add_option("--out", run_out, "Output directory (overrides the config)");

  auto* info = app.add_subcommand("info", "Print dof and nnz counts of the per-step systems");
  std::string info_config;
  info->add_option("--config", info_config, "Scenario config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (converge->parsed()) return run_converge(scheme, levels, case_name, out_dir, tau0, base_cells);
    if (run->parsed()) return run_run(config_file, run_out);
    return run_info(info_config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace platewave
