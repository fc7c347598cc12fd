#ifndef PLATEWAVE_ERROR_NORMS_HPP
#define PLATEWAVE_ERROR_NORMS_HPP

#include "platewave/mesh.hpp"
#include "platewave/time_schemes.hpp"
#include "platewave/types.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace platewave {

/// Analytic benchmark case: exact solution, forcing, initial data.
struct ManufacturedCase {
  using SpaceTimeFn = std::function<double(double, double, double)>;

  std::string name;
  double final_time = 1.0;
  Rect domain;
  SpaceTimeFn u;        // exact deflection u(x, y, t)
  SpaceTimeFn u_t;      // exact velocity
  RhsModel forcing;
  InitialData initial;
};

/// Spatial L2 error of the deflection at time t, 6-point tensor Gauss per
/// cell (two orders above assembly quadrature).
double spatial_l2_error(const TensorMesh& mesh, const DofMap& dofmap,
                        const SolutionTrajectory& traj, const ManufacturedCase& mcase, double t);

/// The three error norms used by the convergence study. The L-infinity
/// variant samples the interval nodes plus the 99 equispaced interior points
/// t_{n-1} + j tau_n / 100 of every interval; the discrete variant samples
/// the nodes only. L2(L2) uses 5-point Gauss in time per interval.
struct NormReport {
  double linf_tau_l2 = 0.0;
  double linf_l2 = 0.0;
  double l2_l2 = 0.0;
};

NormReport compute_norms(const TensorMesh& mesh, const DofMap& dofmap,
                         const SolutionTrajectory& traj, const ManufacturedCase& mcase);

/// EOC = log2(e_coarse / e_fine); absent when either error is nonpositive.
std::optional<double> compute_eoc(double e_coarse, double e_fine);

struct EocRow {
  int level = 0;
  double tau = 0.0;
  double h = 0.0;
  NormReport errors;
  std::optional<double> eoc_linf_tau;
  std::optional<double> eoc_linf;
  std::optional<double> eoc_l2l2;
};

struct EocTable {
  SchemeKind scheme{};
  std::vector<EocRow> rows;
};

struct StudyConfig {
  double tau0 = 0.1;
  int base_cells = 5;  // level j: (base_cells * 2^j)^2 cells, tau0 / 2^j
  RunReport* report = nullptr;
};

/// Level-sequence convergence study: level j uses tau0/2^j and a
/// (base_cells 2^j)^2 mesh of the case's domain, runs the scheme to the
/// case's final time and collects the three norms and their EOCs.
EocTable run_study(SchemeKind scheme, const ManufacturedCase& mcase, int levels,
                   const StudyConfig& config = {});

/// CSV columns: level, tau, h, err_linf_tau, eoc, err_linf, eoc, err_l2l2, eoc.
void write_eoc_csv(std::ostream& os, const EocTable& table);

/// Aligned plain-text rendering of the same table.
void write_eoc_text(std::ostream& os, const EocTable& table);

}  // namespace platewave

#endif
