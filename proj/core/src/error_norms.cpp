#include "platewave/error_norms.hpp"

#include "platewave/assembly.hpp"
#include "platewave/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace platewave {

namespace {

// Quadrature-point workspace shared by all error evaluations on one mesh:
// scaled shape values at the reference points, physical point coordinates and
// the free-DOF gather table per cell.
class ErrorSampler {
public:
  ErrorSampler(const TensorMesh& mesh, const DofMap& dofmap, int quad_points)
      : mesh_(mesh), rule_(tensorize(gauss_legendre(quad_points))) {
    const double hx = mesh.hx(), hy = mesh.hy();
    jacobian_ = hx * hy;
    const int nq = rule_.size();

    shape_.resize(nq);
    for (int q = 0; q < nq; ++q)
      for (int i = 0; i < 16; ++i)
        shape_[q][i] = dof_scale(static_cast<DofKind>(i % 4), hx, hy) *
                       shape_eval(i, rule_.points[q].x, rule_.points[q].y);

    const int cells = mesh.cell_count();
    px_.resize(static_cast<std::size_t>(cells) * nq);
    py_.resize(px_.size());
    gather_.resize(cells);
    for (int cell = 0; cell < cells; ++cell) {
      const auto [x0, y0] = mesh.cell_origin(cell);
      for (int q = 0; q < nq; ++q) {
        px_[static_cast<std::size_t>(cell) * nq + q] = x0 + rule_.points[q].x * hx;
        py_[static_cast<std::size_t>(cell) * nq + q] = y0 + rule_.points[q].y * hy;
      }
      const auto nodes = mesh.cell_nodes(cell);
      for (int i = 0; i < 16; ++i)
        gather_[cell][i] =
            dofmap.free_index(DofMap::global_index(nodes[i / 4], static_cast<DofKind>(i % 4)));
    }
  }

  int points_per_cell() const { return rule_.size(); }

  /// Values of the field with free coefficients `coeff` at every quadrature
  /// point, cell-major.
  void project(const Vector& coeff, std::vector<double>& out) const {
    const int nq = rule_.size();
    out.resize(px_.size());
    for (int cell = 0; cell < mesh_.cell_count(); ++cell) {
      const auto& gather = gather_[cell];
      for (int q = 0; q < nq; ++q) {
        double v = 0.0;
        const auto& phi = shape_[q];
        for (int i = 0; i < 16; ++i)
          if (gather[i] >= 0) v += coeff[gather[i]] * phi[i];
        out[static_cast<std::size_t>(cell) * nq + q] = v;
      }
    }
  }

  /// Squared L2 norm of (u(., t) - sum_k c_k proj_k).
  double error_sq(const std::vector<std::vector<double>>& proj, const std::vector<double>& c,
                  const ManufacturedCase::SpaceTimeFn& u, double t) const {
    const int nq = rule_.size();
    const std::size_t total = px_.size();
    double sum = 0.0;
    for (std::size_t p = 0; p < total; ++p) {
      double uh = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) uh += c[k] * proj[k][p];
      const double diff = u(px_[p], py_[p], t) - uh;
      sum += rule_.points[p % nq].w * diff * diff;
    }
    return sum * jacobian_;
  }

private:
  const TensorMesh& mesh_;
  QuadratureRule2D rule_;
  double jacobian_;
  std::vector<std::array<double, 16>> shape_;
  std::vector<double> px_, py_;
  std::vector<std::array<int, 16>> gather_;
};

void project_interval(const ErrorSampler& sampler, const IntervalSolution& iv,
                      std::vector<std::vector<double>>& proj) {
  proj.resize(iv.u0.size());
  for (std::size_t k = 0; k < iv.u0.size(); ++k) sampler.project(iv.u0[k], proj[k]);
}

}  // namespace

double spatial_l2_error(const TensorMesh& mesh, const DofMap& dofmap,
                        const SolutionTrajectory& traj, const ManufacturedCase& mcase, double t) {
  const ErrorSampler sampler(mesh, dofmap, 6);
  const auto loc = traj.partition().locate(t);
  std::vector<std::vector<double>> proj;
  project_interval(sampler, traj.interval(loc.interval), proj);
  const std::vector<double> c = interval_basis_values(traj.scheme(), loc.that);
  return std::sqrt(sampler.error_sq(proj, c, mcase.u, t));
}

NormReport compute_norms(const TensorMesh& mesh, const DofMap& dofmap,
                         const SolutionTrajectory& traj, const ManufacturedCase& mcase) {
  const ErrorSampler sampler(mesh, dofmap, 6);
  const TimePartition& part = traj.partition();
  const SchemeKind kind = traj.scheme();
  const QuadratureRule1D time_rule = gauss_legendre(5);

  NormReport report;
  std::vector<std::vector<double>> proj;
  for (int n = 1; n <= part.intervals(); ++n) {
    project_interval(sampler, traj.interval(n), proj);
    const double t_left = part.node(n - 1);
    const double tau = part.tau(n);

    auto error_at = [&](double t, double that) {
      return std::sqrt(sampler.error_sq(proj, interval_basis_values(kind, that), mcase.u, t));
    };

    if (n == 1) {
      const double e0 = error_at(part.node(0), 0.0);
      report.linf_tau_l2 = std::max(report.linf_tau_l2, e0);
      report.linf_l2 = std::max(report.linf_l2, e0);
    }
    const double e_node = error_at(part.node(n), 1.0);
    report.linf_tau_l2 = std::max(report.linf_tau_l2, e_node);
    report.linf_l2 = std::max(report.linf_l2, e_node);

    for (int j = 1; j <= 99; ++j) {
      const double that = j / 100.0;
      report.linf_l2 = std::max(report.linf_l2, error_at(t_left + that * tau, that));
    }

    for (int q = 0; q < time_rule.size(); ++q) {
      const double that = time_rule.nodes[q];
      const double e = error_at(t_left + that * tau, that);
      report.l2_l2 += tau * time_rule.weights[q] * e * e;
    }
  }
  report.l2_l2 = std::sqrt(report.l2_l2);
  return report;
}

std::optional<double> compute_eoc(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::nullopt;
  return std::log2(e_coarse / e_fine);
}

EocTable run_study(SchemeKind scheme, const ManufacturedCase& mcase, int levels,
                   const StudyConfig& config) {
  if (levels < 1) throw ConfigError("convergence study: need at least one level");
  EocTable table;
  table.scheme = scheme;
  for (int level = 0; level < levels; ++level) {
    const int cells = config.base_cells * (1 << level);
    const TensorMesh mesh(mcase.domain, cells, cells);
    const DofMap dofmap(mesh);
    const AssembledOperators ops = assemble(mesh, dofmap, CoefficientField::constant(1.0));

    const double tau = config.tau0 / (1 << level);
    const int steps = static_cast<int>(std::lround(mcase.final_time / tau));
    const TimePartition partition(mcase.final_time, steps);

    const SolutionTrajectory traj = run_simulation(mesh, dofmap, ops, scheme, partition,
                                                   mcase.initial, mcase.forcing, config.report);

    EocRow row;
    row.level = level;
    row.tau = tau;
    row.h = mesh.mesh_size();
    row.errors = compute_norms(mesh, dofmap, traj, mcase);
    if (!table.rows.empty()) {
      const NormReport& prev = table.rows.back().errors;
      row.eoc_linf_tau = compute_eoc(prev.linf_tau_l2, row.errors.linf_tau_l2);
      row.eoc_linf = compute_eoc(prev.linf_l2, row.errors.linf_l2);
      row.eoc_l2l2 = compute_eoc(prev.l2_l2, row.errors.l2_l2);
    }
    table.rows.push_back(row);
  }
  return table;
}

namespace {

std::string format_eoc(const std::optional<double>& eoc) {
  if (!eoc) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *eoc);
  return buf;
}

std::string format_err(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", e);
  return buf;
}

}  // namespace

void write_eoc_csv(std::ostream& os, const EocTable& table) {
  os << "level,tau,h,err_linf_tau,eoc,err_linf,eoc,err_l2l2,eoc\n";
  for (const EocRow& r : table.rows) {
    char head[64];
    std::snprintf(head, sizeof head, "%d,%.10g,%.10g", r.level, r.tau, r.h);
    os << head << ',' << format_err(r.errors.linf_tau_l2) << ',' << format_eoc(r.eoc_linf_tau)
       << ',' << format_err(r.errors.linf_l2) << ',' << format_eoc(r.eoc_linf) << ','
       << format_err(r.errors.l2_l2) << ',' << format_eoc(r.eoc_l2l2) << '\n';
  }
}

void write_eoc_text(std::ostream& os, const EocTable& table) {
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-10s %-10s %-13s %-6s %-13s %-6s %-13s %-6s\n", "level",
                "tau", "h", "Linf_tau(L2)", "eoc", "Linf(L2)", "eoc", "L2(L2)", "eoc");
  os << "scheme: " << to_string(table.scheme) << '\n' << line;
  for (const EocRow& r : table.rows) {
    std::snprintf(line, sizeof line, "%-6d %-10.5g %-10.5g %-13.6e %-6s %-13.6e %-6s %-13.6e %-6s\n",
                  r.level, r.tau, r.h, r.errors.linf_tau_l2, format_eoc(r.eoc_linf_tau).c_str(),
                  r.errors.linf_l2, format_eoc(r.eoc_linf).c_str(), r.errors.l2_l2,
                  format_eoc(r.eoc_l2l2).c_str());
    os << line;
  }
}

}  // namespace platewave
