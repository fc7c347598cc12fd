#include "platewave/time_schemes.hpp"

#include "platewave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace platewave {

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::cgp1: return "cgp1";
    case SchemeKind::cgp2: return "cgp2";
    default: return "gc3";
  }
}

SchemeKind scheme_from_string(const std::string& name) {
  if (name == "cgp1") return SchemeKind::cgp1;
  if (name == "cgp2") return SchemeKind::cgp2;
  if (name == "gc3") return SchemeKind::gc3;
  throw ConfigError("unknown scheme '" + name + "' (expected cgp1, cgp2 or gc3)");
}

int unknown_blocks(SchemeKind kind) { return kind == SchemeKind::cgp1 ? 2 : 4; }

TimePartition::TimePartition(double T, int steps) {
  if (steps < 1) throw ConfigError("time partition: step count must be positive");
  if (!(T > 0.0)) throw ConfigError("time partition: final time must be positive");
  const double tau = T / steps;
  taus_.assign(steps, tau);
  nodes_.resize(steps + 1);
  for (int n = 0; n <= steps; ++n) nodes_[n] = tau * n;
  nodes_[steps] = T;
}

TimePartition::TimePartition(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw ConfigError("time partition: need at least one interval");
  taus_.resize(nodes_.size() - 1);
  for (std::size_t n = 1; n < nodes_.size(); ++n) {
    taus_[n - 1] = nodes_[n] - nodes_[n - 1];
    if (!(taus_[n - 1] > 0.0)) throw ConfigError("time partition: nodes must increase strictly");
  }
}

double TimePartition::max_tau() const { return *std::max_element(taus_.begin(), taus_.end()); }

TimePartition::Location TimePartition::locate(double t) const {
  if (t < nodes_.front() || t > nodes_.back())
    throw std::out_of_range("time " + std::to_string(t) + " outside [" +
                            std::to_string(nodes_.front()) + ", " +
                            std::to_string(nodes_.back()) + "]");
  if (t == nodes_.front()) return {1, 0.0};
  const auto it = std::lower_bound(nodes_.begin() + 1, nodes_.end(), t);
  const int n = static_cast<int>(it - nodes_.begin());
  if (t == *it) return {n, 1.0};
  const double that = (t - nodes_[n - 1]) / taus_[n - 1];
  return {n, std::clamp(that, 0.0, 1.0)};
}

namespace {

// Appends coeff * B into block (bi, bj) of a block matrix with square blocks
// of size dim. Exact-zero coefficients contribute no entries.
void append_block(std::vector<Triplet>& out, const SparseMatrix& B, double coeff,
                  Eigen::Index bi, Eigen::Index bj, Eigen::Index dim) {
  if (coeff == 0.0) return;
  for (int row = 0; row < B.outerSize(); ++row)
    for (SparseMatrix::InnerIterator it(B, row); it; ++it)
      out.emplace_back(static_cast<int>(bi * dim + it.row()),
                       static_cast<int>(bj * dim + it.col()), coeff * it.value());
}

void check_operator_pair(const SparseMatrix& M, const SparseMatrix& A, double tau) {
  if (M.rows() != M.cols() || A.rows() != A.cols() || M.rows() != A.rows())
    throw ConfigError("step system: mass and stiffness operators must be square and equal-sized");
  if (!(tau > 0.0)) throw ConfigError("step system: step length must be positive");
}

struct CgpTables {
  std::vector<double> nodes;    // k+1 Gauss-Lobatto nodes on [0,1]
  std::vector<double> weights;  // matching weights (sum 1)
  // alpha[j][a] = int_0^1 L_a'(t) t^j dt, beta[j][a] = int_0^1 L_a(t) t^j dt,
  // j = 0..k-1, a = 0..k. Exact rationals; tiny quadrature residue snapped.
  std::vector<std::vector<double>> alpha;
  std::vector<std::vector<double>> beta;
};

double lagrange_value(const std::vector<double>& nodes, int a, double t) {
  double v = 1.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (static_cast<int>(j) == a) continue;
    v *= (t - nodes[j]) / (nodes[a] - nodes[j]);
  }
  return v;
}

double lagrange_deriv(const std::vector<double>& nodes, int a, double t) {
  double sum = 0.0;
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    if (static_cast<int>(m) == a) continue;
    double prod = 1.0 / (nodes[a] - nodes[m]);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (static_cast<int>(j) == a || j == m) continue;
      prod *= (t - nodes[j]) / (nodes[a] - nodes[j]);
    }
    sum += prod;
  }
  return sum;
}

CgpTables make_cgp_tables(int k) {
  if (k != 1 && k != 2) throw ConfigError("cgp: unsupported order k=" + std::to_string(k));
  CgpTables tab;
  const QuadratureRule1D gl = gauss_lobatto(k + 1);
  tab.nodes = gl.nodes;
  tab.weights = gl.weights;

  const QuadratureRule1D gauss = gauss_legendre(4);  // exact through degree 7
  tab.alpha.assign(k, std::vector<double>(k + 1, 0.0));
  tab.beta.assign(k, std::vector<double>(k + 1, 0.0));
  for (int j = 0; j < k; ++j) {
    for (int a = 0; a <= k; ++a) {
      double ia = 0.0, ib = 0.0;
      for (int q = 0; q < gauss.size(); ++q) {
        const double t = gauss.nodes[q];
        const double mono = std::pow(t, j);
        ia += gauss.weights[q] * lagrange_deriv(tab.nodes, a, t) * mono;
        ib += gauss.weights[q] * lagrange_value(tab.nodes, a, t) * mono;
      }
      tab.alpha[j][a] = std::abs(ia) < 1e-14 ? 0.0 : ia;
      tab.beta[j][a] = std::abs(ib) < 1e-14 ? 0.0 : ib;
    }
  }
  return tab;
}

SparseMatrix gc_block_matrix(const SparseMatrix& M, const SparseMatrix& A, double tau) {
  check_operator_pair(M, A, tau);
  const Eigen::Index dim = M.rows();
  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(7 * M.nonZeros() + 3 * A.nonZeros()));
  append_block(triplets, M, 1.0, 0, 0, dim);
  append_block(triplets, M, -tau / 2.0, 0, 2, dim);
  append_block(triplets, M, tau / 12.0, 0, 3, dim);
  append_block(triplets, A, tau / 2.0, 1, 0, dim);
  append_block(triplets, A, -tau / 12.0, 1, 1, dim);
  append_block(triplets, M, 1.0, 1, 2, dim);
  append_block(triplets, M, 1.0 / tau, 2, 1, dim);
  append_block(triplets, M, -1.0, 2, 2, dim);
  append_block(triplets, A, 1.0, 3, 0, dim);
  append_block(triplets, M, 1.0 / tau, 3, 3, dim);
  SparseMatrix S(4 * dim, 4 * dim);
  S.setFromTriplets(triplets.begin(), triplets.end());
  S.makeCompressed();
  return S;
}

SparseMatrix cgp_block_matrix(const CgpTables& tab, int k, const SparseMatrix& M,
                              const SparseMatrix& A, double tau) {
  check_operator_pair(M, A, tau);
  const Eigen::Index dim = M.rows();
  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(4 * k * k) * M.nonZeros());
  for (int j = 0; j < k; ++j) {
    for (int a = 1; a <= k; ++a) {
      // variational velocity equation, test t^j
      append_block(triplets, M, tab.alpha[j][a], j, a - 1, dim);
      append_block(triplets, M, -tau * tab.beta[j][a], j, k + a - 1, dim);
      // variational momentum equation, test t^j
      append_block(triplets, A, tau * tab.beta[j][a], k + j, a - 1, dim);
      append_block(triplets, M, tab.alpha[j][a], k + j, k + a - 1, dim);
    }
  }
  SparseMatrix S(2 * k * dim, 2 * k * dim);
  S.setFromTriplets(triplets.begin(), triplets.end());
  S.makeCompressed();
  return S;
}

double relative_residual(const Vector& residual, double scale) {
  const double num = residual.norm();
  if (num == 0.0) return 0.0;
  return num / std::max(scale, std::numeric_limits<double>::min());
}

}  // namespace

GcSystem::GcSystem(const SparseMatrix& M, const SparseMatrix& A, double tau)
    : M_(&M), A_(&A), tau_(tau), block_dim_(M.rows()), S_(gc_block_matrix(M, A, tau)),
      fact_(S_) {}

GcState GcSystem::step(const GcState& prev, const GcLoads& loads,
                       CollocationResiduals* residuals) const {
  const Eigen::Index dim = block_dim_;
  const SparseMatrix& M = *M_;
  const SparseMatrix& A = *A_;

  Vector b(4 * dim);
  b.segment(0, dim) = M * (prev.u0 + (tau_ / 2.0) * prev.u1 + (tau_ / 12.0) * prev.u1_sder);
  b.segment(dim, dim) = (tau_ / 2.0) * loads.f0 + (tau_ * tau_ / 12.0) * loads.f1 +
                        (tau_ / 2.0) * loads.f2 - (tau_ * tau_ / 12.0) * loads.f3 + M * prev.u1 -
                        A * ((tau_ / 2.0) * prev.u0 + (tau_ / 12.0) * prev.u0_sder);
  b.segment(2 * dim, dim).setZero();
  b.segment(3 * dim, dim) = loads.f2;

  const Vector x = fact_.solve(b);
  GcState next{x.segment(0, dim), x.segment(dim, dim), x.segment(2 * dim, dim),
               x.segment(3 * dim, dim)};

  if (residuals) {
    const Vector m_u0s = M * next.u0_sder;
    const Vector m_u1 = M * next.u1;
    residuals->velocity = relative_residual((1.0 / tau_) * m_u0s - m_u1,
                                            m_u0s.norm() / tau_ + m_u1.norm());
    const Vector m_u1s = M * next.u1_sder;
    const Vector a_u0 = A * next.u0;
    residuals->pde = relative_residual((1.0 / tau_) * m_u1s + a_u0 - loads.f2,
                                       m_u1s.norm() / tau_ + a_u0.norm() + loads.f2.norm());
  }
  return next;
}

GcSystem build_gc_system(const SparseMatrix& M, const SparseMatrix& A, double tau) {
  return GcSystem(M, A, tau);
}

CgpSystem::CgpSystem(int k, const SparseMatrix& M, const SparseMatrix& A, double tau)
    : k_(k), M_(&M), A_(&A), tau_(tau), block_dim_(M.rows()),
      S_([&] {
        const CgpTables tab = make_cgp_tables(k);
        nodes_ = tab.nodes;
        gl_weights_ = tab.weights;
        alpha_ = tab.alpha;
        beta_ = tab.beta;
        return cgp_block_matrix(tab, k, M, A, tau);
      }()),
      fact_(S_) {}

IntervalSolution CgpSystem::step(const CgpState& prev, const std::vector<Vector>& loads) const {
  if (static_cast<int>(loads.size()) != k_ + 1)
    throw ConfigError("cgp step: expected " + std::to_string(k_ + 1) + " load vectors");
  const Eigen::Index dim = block_dim_;
  const SparseMatrix& M = *M_;
  const SparseMatrix& A = *A_;

  const Vector m_u0 = M * prev.u0;
  const Vector m_u1 = M * prev.u1;
  const Vector a_u0 = A * prev.u0;

  Vector b(2 * k_ * dim);
  for (int j = 0; j < k_; ++j) {
    Vector quad = Vector::Zero(dim);
    for (int s = 0; s <= k_; ++s) {
      const double w = gl_weights_[s] * std::pow(nodes_[s], j);
      if (w != 0.0) quad += w * loads[s];
    }
    b.segment(j * dim, dim) = -alpha_[j][0] * m_u0 + tau_ * beta_[j][0] * m_u1;
    b.segment((k_ + j) * dim, dim) =
        -alpha_[j][0] * m_u1 - tau_ * beta_[j][0] * a_u0 + tau_ * quad;
  }

  const Vector x = fact_.solve(b);
  IntervalSolution sol;
  sol.u0.reserve(k_ + 1);
  sol.u1.reserve(k_ + 1);
  sol.u0.push_back(prev.u0);
  sol.u1.push_back(prev.u1);
  for (int a = 0; a < k_; ++a) sol.u0.push_back(x.segment(a * dim, dim));
  for (int a = 0; a < k_; ++a) sol.u1.push_back(x.segment((k_ + a) * dim, dim));
  return sol;
}

CgpSystem build_cgp_system(int k, const SparseMatrix& M, const SparseMatrix& A, double tau) {
  return CgpSystem(k, M, A, tau);
}

SolutionTrajectory::SolutionTrajectory(SchemeKind kind, TimePartition partition, Eigen::Index dim)
    : kind_(kind), partition_(std::move(partition)), dim_(dim) {}

void SolutionTrajectory::append_interval(IntervalSolution interval) {
  if (stored_intervals() >= partition_.intervals())
    throw ConfigError("trajectory: more intervals than the partition holds");
  intervals_.push_back(std::move(interval));
}

Vector SolutionTrajectory::evaluate(double t, Field field, int time_deriv) const {
  const auto loc = partition_.locate(t);
  if (loc.interval > stored_intervals())
    throw std::out_of_range("trajectory: interval " + std::to_string(loc.interval) +
                            " not computed yet");
  const IntervalSolution& iv = intervals_[loc.interval - 1];
  const std::vector<Vector>& coeffs = field == Field::deflection ? iv.u0 : iv.u1;
  const double tau = partition_.tau(loc.interval);

  Vector out = Vector::Zero(dim_);
  if (kind_ == SchemeKind::gc3) {
    for (int k = 0; k < 4; ++k) {
      const double c = time_deriv == 0 ? time_basis::xi(k, loc.that)
                                       : time_basis::xi_deriv(k, loc.that) / tau;
      if (c != 0.0) out += c * coeffs[k];
    }
  } else {
    const int k = kind_ == SchemeKind::cgp1 ? 1 : 2;
    const std::vector<double>& nodes = gauss_lobatto(k + 1).nodes;
    for (int a = 0; a <= k; ++a) {
      const double c = time_deriv == 0 ? lagrange_value(nodes, a, loc.that)
                                       : lagrange_deriv(nodes, a, loc.that) / tau;
      if (c != 0.0) out += c * coeffs[a];
    }
  }
  return out;
}

int interval_basis_size(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::cgp1: return 2;
    case SchemeKind::cgp2: return 3;
    default: return 4;
  }
}

std::vector<double> interval_basis_values(SchemeKind kind, double that) {
  if (kind == SchemeKind::gc3)
    return {time_basis::xi(0, that), time_basis::xi(1, that), time_basis::xi(2, that),
            time_basis::xi(3, that)};
  const int k = kind == SchemeKind::cgp1 ? 1 : 2;
  const std::vector<double>& nodes = gauss_lobatto(k + 1).nodes;
  std::vector<double> values(k + 1);
  for (int a = 0; a <= k; ++a) values[a] = lagrange_value(nodes, a, that);
  return values;
}

RhsModel RhsModel::zero() { return RhsModel(); }

RhsModel RhsModel::analytic(SpaceTimeFn f, SpaceTimeFn df_dt) {
  if (!f || !df_dt) throw ConfigError("forcing: both f and its time derivative are required");
  RhsModel m;
  m.zero_ = false;
  m.f_ = std::move(f);
  m.df_dt_ = std::move(df_dt);
  return m;
}

GcState gc_initial_state(const TensorMesh& mesh, const DofMap& dofmap, const InitialData& init,
                         double tau1) {
  const Vector u0 = dofmap.restrict_free(interpolate_nodal(mesh, init.u0));
  const Vector u1 = dofmap.restrict_free(interpolate_nodal(mesh, init.u1));
  const Vector a0 = dofmap.restrict_free(interpolate_nodal(mesh, init.accel0));
  return {u0, tau1 * u1, u1, tau1 * a0};
}

CgpState cgp_initial_state(const TensorMesh& mesh, const DofMap& dofmap, const InitialData& init) {
  return {dofmap.restrict_free(interpolate_nodal(mesh, init.u0)),
          dofmap.restrict_free(interpolate_nodal(mesh, init.u1))};
}

SolutionTrajectory run_simulation(const TensorMesh& mesh, const DofMap& dofmap,
                                  const AssembledOperators& ops, SchemeKind kind,
                                  const TimePartition& partition, const InitialData& init,
                                  const RhsModel& rhs, RunReport* report) {
  const int free = dofmap.free_count();
  SolutionTrajectory traj(kind, partition, free);
  const Vector zero = Vector::Zero(free);

  auto load_at = [&](double t) -> Vector {
    if (rhs.is_zero()) return zero;
    return assemble_load(mesh, dofmap, [&](double x, double y) { return rhs.f()(x, y, t); });
  };
  auto load_dt_at = [&](double t) -> Vector {
    if (rhs.is_zero()) return zero;
    return assemble_load(mesh, dofmap, [&](double x, double y) { return rhs.df_dt()(x, y, t); });
  };

  if (report) *report = RunReport{};

  if (kind == SchemeKind::gc3) {
    GcState state = gc_initial_state(mesh, dofmap, init, partition.tau(1));
    std::optional<GcSystem> sys;
    Vector f_prev = load_at(partition.node(0));
    Vector fdt_prev = load_dt_at(partition.node(0));
    for (int n = 1; n <= partition.intervals(); ++n) {
      const double tau = partition.tau(n);
      if (!sys || sys->tau() != tau) sys.emplace(ops.M, ops.A, tau);
      if (n > 1 && tau != partition.tau(n - 1)) {
        // C1 handoff across a step-size change rescales the derivative slots.
        const double s = tau / partition.tau(n - 1);
        state.u0_sder *= s;
        state.u1_sder *= s;
      }
      GcLoads loads{std::move(f_prev), std::move(fdt_prev), load_at(partition.node(n)),
                    load_dt_at(partition.node(n))};
      CollocationResiduals res;
      GcState next = sys->step(state, loads, report ? &res : nullptr);
      if (report) {
        report->max_collocation_velocity = std::max(report->max_collocation_velocity, res.velocity);
        report->max_collocation_pde = std::max(report->max_collocation_pde, res.pde);
        ++report->steps;
      }
      traj.append_interval({{state.u0, state.u0_sder, next.u0, next.u0_sder},
                            {state.u1, state.u1_sder, next.u1, next.u1_sder}});
      f_prev = std::move(loads.f2);
      fdt_prev = std::move(loads.f3);
      state = std::move(next);
    }
    return traj;
  }

  const int k = kind == SchemeKind::cgp1 ? 1 : 2;
  CgpState state = cgp_initial_state(mesh, dofmap, init);
  std::optional<CgpSystem> sys;
  Vector f_last = load_at(partition.node(0));
  for (int n = 1; n <= partition.intervals(); ++n) {
    const double tau = partition.tau(n);
    if (!sys || sys->tau() != tau) sys.emplace(k, ops.M, ops.A, tau);
    std::vector<Vector> loads(k + 1);
    loads[0] = std::move(f_last);
    for (int s = 1; s < k; ++s)
      loads[s] = load_at(partition.node(n - 1) + sys->nodes()[s] * tau);
    loads[k] = load_at(partition.node(n));
    IntervalSolution interval = sys->step(state, loads);
    state = {interval.u0.back(), interval.u1.back()};
    traj.append_interval(std::move(interval));
    f_last = std::move(loads[k]);
    if (report) ++report->steps;
  }
  return traj;
}

double energy(const AssembledOperators& ops, const Vector& u0, const Vector& u1) {
  return 0.5 * (u0.dot(ops.A * u0) + u1.dot(ops.M * u1));
}

SystemCounts system_counts(const TensorMesh& mesh, const AssembledOperators& ops,
                           SchemeKind kind, double tau) {
  SystemCounts counts;
  const std::int64_t vectors = unknown_blocks(kind);
  counts.dof_paper = vectors * static_cast<std::int64_t>(kDofsPerNode) * mesh.node_count();
  counts.dof_eliminated = vectors * ops.counts.free_dofs;
  if (kind == SchemeKind::gc3) {
    counts.nnz = gc_block_matrix(ops.M, ops.A, tau).nonZeros();
  } else {
    const int k = kind == SchemeKind::cgp1 ? 1 : 2;
    counts.nnz = cgp_block_matrix(make_cgp_tables(k), k, ops.M, ops.A, tau).nonZeros();
  }
  return counts;
}

}  // namespace platewave
