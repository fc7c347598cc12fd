#ifndef PLATEWAVE_TIME_SCHEMES_HPP
#define PLATEWAVE_TIME_SCHEMES_HPP

#include "platewave/assembly.hpp"
#include "platewave/bfs_element.hpp"
#include "platewave/hermite.hpp"
#include "platewave/linear_solver.hpp"
#include "platewave/mesh.hpp"
#include "platewave/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace platewave {

enum class SchemeKind { cgp1, cgp2, gc3 };

std::string to_string(SchemeKind kind);
SchemeKind scheme_from_string(const std::string& name);

/// Unknown coefficient vectors per time step (2 for cgp1, 4 for cgp2/gc3).
int unknown_blocks(SchemeKind kind);

/// Partition 0 = t_0 < t_1 < ... < t_N = T. The uniform constructor stores a
/// single bitwise-identical step length for every interval so that
/// factorizations and the C1 coefficient handoff are reused exactly.
class TimePartition {
public:
  TimePartition(double T, int steps);
  explicit TimePartition(std::vector<double> nodes);

  int intervals() const { return static_cast<int>(taus_.size()); }
  double final_time() const { return nodes_.back(); }
  double node(int n) const { return nodes_[n]; }          // n = 0..N
  double tau(int n) const { return taus_[n - 1]; }        // n = 1..N
  double max_tau() const;

  /// Interval n with t in (t_{n-1}, t_n]; t = t_0 maps to interval 1.
  /// Returns (n, that) with that in [0,1], exact at interval endpoints.
  struct Location {
    int interval;
    double that;
  };
  Location locate(double t) const;

private:
  std::vector<double> nodes_;
  std::vector<double> taus_;
};

// Hermite time basis xi_0..xi_3 on [0,1] (the same cubic quartet as the
// spatial element) and its exact integral tables used by the
// Galerkin-collocation step.
namespace time_basis {

inline double xi(int k, double that) { return hermite::value(k, that); }
inline double xi_deriv(int k, double that) { return hermite::deriv1(k, that); }

/// int_{I_n} xi_k dt = integral_weight[k] * tau_n.
inline constexpr double integral_weight[4] = {0.5, 1.0 / 12.0, 0.5, -1.0 / 12.0};
/// int_{I_n} d/dt xi_k dt (independent of tau_n).
inline constexpr double deriv_integral[4] = {-1.0, 0.0, 1.0, 0.0};

}  // namespace time_basis

/// State handed across interval boundaries by the Galerkin-collocation
/// scheme: values and tau-scaled time derivatives of both fields at a node.
/// Scaled convention: derivative coefficient = tau_n * d/dt w(t).
struct GcState {
  Vector u0;       // deflection value
  Vector u0_sder;  // tau * d/dt deflection
  Vector u1;       // velocity value
  Vector u1_sder;  // tau * d/dt velocity
};

/// Load vectors of the forcing data on one interval: f(t_{n-1}),
/// d/dt f(t_{n-1}), f(t_n), d/dt f(t_n) tested against the space basis.
/// The derivative slots are unscaled; tau factors appear in the right-hand
/// side assembly.
struct GcLoads {
  Vector f0, f1, f2, f3;
};

/// Relative residuals of the two endpoint collocation conditions,
/// recomputed from the solved coefficients.
struct CollocationResiduals {
  double velocity = 0.0;  // (1/tau) M u0_{n,3} - M u1_{n,2} = 0
  double pde = 0.0;       // (1/tau) M u1_{n,3} + A u0_{n,2} = F_{n,2}
};

/// Coefficients of one interval: per field, the time-basis coefficient
/// vectors (4 Hermite coefficients for gc3, k+1 Gauss-Lobatto values for
/// cgp(k)).
struct IntervalSolution {
  std::vector<Vector> u0;
  std::vector<Vector> u1;
};

/// The factorized per-step block system of the Galerkin-collocation scheme
/// cGP-C1(3). Holds references to the assembled operators; they must outlive
/// the system. The block matrix is
///   [ M        0          -tau/2 M   tau/12 M ]
///   [ tau/2 A  -tau/12 A   M         0        ]
///   [ 0        1/tau M    -M         0        ]
///   [ A        0           0         1/tau M  ]
/// and is factorized once per step length.
class GcSystem {
public:
  GcSystem(const SparseMatrix& M, const SparseMatrix& A, double tau);

  double tau() const { return tau_; }
  Eigen::Index block_dim() const { return block_dim_; }
  const SparseMatrix& matrix() const { return S_; }

  /// One step: solves for (u0_{n,2}, u0_{n,3}, u1_{n,2}, u1_{n,3}) from the
  /// previous state and the interval loads.
  GcState step(const GcState& prev, const GcLoads& loads,
               CollocationResiduals* residuals = nullptr) const;

private:
  const SparseMatrix* M_;
  const SparseMatrix* A_;
  double tau_;
  Eigen::Index block_dim_;
  SparseMatrix S_;
  Factorization fact_;
};

GcSystem build_gc_system(const SparseMatrix& M, const SparseMatrix& A, double tau);

/// Endpoint state of the continuous Galerkin-Petrov schemes.
struct CgpState {
  Vector u0;
  Vector u1;
};

/// Factorized per-step system of cGP(k), k in {1,2}: trial space P_k
/// (Lagrange values at the k+1 Gauss-Lobatto nodes of the interval), test
/// space P_{k-1}, time integrals by the (k+1)-point Gauss-Lobatto rule.
/// cGP(1) is algebraically the Crank-Nicolson scheme.
class CgpSystem {
public:
  CgpSystem(int k, const SparseMatrix& M, const SparseMatrix& A, double tau);

  int order() const { return k_; }
  double tau() const { return tau_; }
  Eigen::Index block_dim() const { return block_dim_; }
  const SparseMatrix& matrix() const { return S_; }

  /// Reference Gauss-Lobatto nodes of the trial representation.
  const std::vector<double>& nodes() const { return nodes_; }

  /// One step; `loads` holds the k+1 load vectors of f at the interval's
  /// Gauss-Lobatto times. Returns all interval coefficients,
  /// coefficients[*][0] being the handed-in previous endpoint values.
  IntervalSolution step(const CgpState& prev, const std::vector<Vector>& loads) const;

private:
  int k_;
  const SparseMatrix* M_;
  const SparseMatrix* A_;
  double tau_;
  Eigen::Index block_dim_;
  std::vector<double> nodes_;                  // k+1 GL nodes on [0,1]
  std::vector<double> gl_weights_;
  std::vector<std::vector<double>> alpha_;     // [j][a] int L_a' q_j
  std::vector<std::vector<double>> beta_;      // [j][a] int L_a  q_j
  SparseMatrix S_;
  Factorization fact_;
};

CgpSystem build_cgp_system(int k, const SparseMatrix& M, const SparseMatrix& A, double tau);

/// Piecewise-polynomial-in-time solution of one run; evaluable anywhere in
/// [0, T]. Globally C0 for cgp(k), C1 for gc3. Append-only.
class SolutionTrajectory {
public:
  enum class Field : int { deflection = 0, velocity = 1 };

  SolutionTrajectory(SchemeKind kind, TimePartition partition, Eigen::Index dim);

  SchemeKind scheme() const { return kind_; }
  const TimePartition& partition() const { return partition_; }
  Eigen::Index dim() const { return dim_; }
  int stored_intervals() const { return static_cast<int>(intervals_.size()); }

  void append_interval(IntervalSolution interval);
  const IntervalSolution& interval(int n) const { return intervals_[n - 1]; }

  /// DOF vector of the chosen field at time t (time_deriv = 0) or of its
  /// time derivative (time_deriv = 1). Throws std::out_of_range for t
  /// outside [0, T]. At shared nodes left and right evaluations agree.
  Vector evaluate(double t, Field field, int time_deriv = 0) const;

private:
  SchemeKind kind_;
  TimePartition partition_;
  Eigen::Index dim_;
  std::vector<IntervalSolution> intervals_;
};

/// Number of time-basis coefficient vectors stored per interval (4 Hermite
/// coefficients for gc3, k+1 Lagrange values for cgp(k)).
int interval_basis_size(SchemeKind kind);

/// Values of the scheme's per-interval time basis at reference time that.
std::vector<double> interval_basis_values(SchemeKind kind, double that);

/// Forcing model: zero or analytic f with its time derivative.
class RhsModel {
public:
  using SpaceTimeFn = std::function<double(double, double, double)>;  // (x, y, t)

  RhsModel() = default;  // zero forcing

  static RhsModel zero();
  static RhsModel analytic(SpaceTimeFn f, SpaceTimeFn df_dt);

  bool is_zero() const { return zero_; }
  const SpaceTimeFn& f() const { return f_; }
  const SpaceTimeFn& df_dt() const { return df_dt_; }

private:
  bool zero_ = true;
  SpaceTimeFn f_, df_dt_;
};

/// Analytic initial data with the nodal derivatives required by BFS
/// interpolation. accel0 is d/dt u^1 at t = 0, i.e. f(., 0) minus the
/// spatial operator applied to u_0; clamped runs hand it to the velocity
/// derivative slot of the Galerkin-collocation start value.
struct InitialData {
  NodalFn u0;
  NodalFn u1;
  NodalFn accel0;
};

GcState gc_initial_state(const TensorMesh& mesh, const DofMap& dofmap, const InitialData& init,
                         double tau1);
CgpState cgp_initial_state(const TensorMesh& mesh, const DofMap& dofmap, const InitialData& init);

struct RunReport {
  double max_collocation_velocity = 0.0;  // gc3 only
  double max_collocation_pde = 0.0;
  int steps = 0;
};

/// Full time loop of one scheme: initial interpolation, one factorization
/// per distinct step length, load assembly, stepping, trajectory recording.
SolutionTrajectory run_simulation(const TensorMesh& mesh, const DofMap& dofmap,
                                  const AssembledOperators& ops, SchemeKind kind,
                                  const TimePartition& partition, const InitialData& init,
                                  const RhsModel& rhs, RunReport* report = nullptr);

/// Discrete energy 1/2 (u0' A u0 + u1' M u1) of a (deflection, velocity)
/// pair of free vectors.
double energy(const AssembledOperators& ops, const Vector& u0, const Vector& u1);

/// Size and nonzero count of the per-step system of a scheme on assembled
/// operators. dof_paper counts every unknown coefficient against the
/// unconstrained total J; dof_eliminated against the free count; nnz is
/// taken from the actually assembled block matrix.
struct SystemCounts {
  std::int64_t dof_paper = 0;
  std::int64_t dof_eliminated = 0;
  std::int64_t nnz = 0;
};

SystemCounts system_counts(const TensorMesh& mesh, const AssembledOperators& ops,
                           SchemeKind kind, double tau = 1.0);

}  // namespace platewave

#endif
