#ifndef PLATEWAVE_BFS_ELEMENT_HPP
#define PLATEWAVE_BFS_ELEMENT_HPP

#include "platewave/coefficient.hpp"
#include "platewave/mesh.hpp"
#include "platewave/types.hpp"

#include <functional>

namespace platewave {

// Bicubic Hermite (Bogner-Fox-Schmit) element on the reference cell [0,1]^2.
// 16 local DOFs: corners counterclockwise from lower-left, four kinds per
// corner (value, d/dx, d/dy, d2/dxdy). Local index = 4*corner + kind.

using LocalMatrix = Eigen::Matrix<double, 16, 16>;
using LocalVector = Eigen::Matrix<double, 16, 1>;

inline int local_dof(int corner, DofKind kind) {
  return 4 * corner + static_cast<int>(kind);
}

/// Reference shape function (or a reference-coordinate derivative of it,
/// total order <= 2) at (xhat, yhat). Unscaled: physical derivative DOFs
/// additionally carry factors hx, hy, hx*hy (see dof_scale).
double shape_eval(int local_dof, double xhat, double yhat, int dx_order = 0, int dy_order = 0);

/// Scaling applied to derivative-kind shape functions on a physical cell so
/// that global coefficients are true physical derivatives.
inline double dof_scale(DofKind kind, double hx, double hy) {
  switch (kind) {
    case DofKind::value: return 1.0;
    case DofKind::dx: return hx;
    case DofKind::dy: return hy;
    default: return hx * hy;
  }
}

/// Local mass matrix; one matrix serves all cells of a uniform mesh.
/// Integrated exactly (4-point tensor Gauss, degree-6 integrands).
LocalMatrix local_mass(const TensorMesh& mesh);

/// Local biharmonic matrix of one cell: entries int c * lap(phi_i) * lap(phi_j).
/// Exact for constant c; for discontinuous c the coefficient is sampled
/// pointwise at the quadrature nodes. Throws ModelError if c <= 0 at a node.
LocalMatrix local_biharmonic(const TensorMesh& mesh, const CoefficientField& c, int cell);

/// Nodal data of an analytic function: value and the three derivative kinds.
struct NodalData {
  double value = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dxy = 0.0;
};

using NodalFn = std::function<NodalData(double, double)>;

inline NodalFn zero_nodal_fn() {
  return [](double, double) { return NodalData{}; };
}

/// Interpolate analytic nodal data into the BFS space. Returns the full
/// J-length DOF vector (constraints not applied).
Vector interpolate_nodal(const TensorMesh& mesh, const NodalFn& fn);

/// Evaluate a BFS field given its full-length DOF vector.
double eval_field(const TensorMesh& mesh, const Vector& full_dofs, double x, double y);

/// Same for a free-DOF vector (constrained entries implicitly zero).
double eval_field_free(const TensorMesh& mesh, const DofMap& dofmap, const Vector& free_dofs,
                       double x, double y);

}  // namespace platewave

#endif
