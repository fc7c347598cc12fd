#include "platewave/bfs_element.hpp"

#include "platewave/hermite.hpp"
#include "platewave/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>

namespace platewave {

namespace {

// Reference corners (0,0), (1,0), (1,1), (0,1), counterclockwise.
constexpr int kCx[4] = {0, 1, 1, 0};
constexpr int kCy[4] = {0, 0, 1, 1};

// 1D Hermite index of the x-factor / y-factor of a local shape function:
// value flavor uses H0/H2, derivative flavor H1/H3, side selects 0/1 vs 2/3.
inline int hermite_index(bool deriv_flavor, int side) {
  return (side == 0 ? 0 : 2) + (deriv_flavor ? 1 : 0);
}

inline double hermite_eval(int k, double t, int order) {
  switch (order) {
    case 0: return hermite::value(k, t);
    case 1: return hermite::deriv1(k, t);
    default: return hermite::deriv2(k, t);
  }
}

}  // namespace

double shape_eval(int local_dof, double xhat, double yhat, int dx_order, int dy_order) {
  if (local_dof < 0 || local_dof >= 16)
    throw ConfigError("shape_eval: local dof " + std::to_string(local_dof) + " out of range");
  if (dx_order < 0 || dy_order < 0 || dx_order + dy_order > 2)
    throw ConfigError("shape_eval: derivative order beyond 2 unsupported");
  const int corner = local_dof / 4;
  const auto kind = static_cast<DofKind>(local_dof % 4);
  const bool x_deriv = kind == DofKind::dx || kind == DofKind::dxy;
  const bool y_deriv = kind == DofKind::dy || kind == DofKind::dxy;
  const int kx = hermite_index(x_deriv, kCx[corner]);
  const int ky = hermite_index(y_deriv, kCy[corner]);
  return hermite_eval(kx, xhat, dx_order) * hermite_eval(ky, yhat, dy_order);
}

LocalMatrix local_mass(const TensorMesh& mesh) {
  const double hx = mesh.hx(), hy = mesh.hy();
  const QuadratureRule2D rule = tensorize(gauss_legendre(4));

  std::array<double, 16> scale;
  for (int i = 0; i < 16; ++i) scale[i] = dof_scale(static_cast<DofKind>(i % 4), hx, hy);

  LocalMatrix m = LocalMatrix::Zero();
  for (const auto& q : rule.points) {
    std::array<double, 16> phi;
    for (int i = 0; i < 16; ++i) phi[i] = scale[i] * shape_eval(i, q.x, q.y);
    const double w = q.w * hx * hy;
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) m(i, j) += w * phi[i] * phi[j];
  }
  return m;
}

LocalMatrix local_biharmonic(const TensorMesh& mesh, const CoefficientField& c, int cell) {
  const double hx = mesh.hx(), hy = mesh.hy();
  const auto [x0, y0] = mesh.cell_origin(cell);
  const QuadratureRule2D rule = tensorize(gauss_legendre(4));

  std::array<double, 16> scale;
  for (int i = 0; i < 16; ++i) scale[i] = dof_scale(static_cast<DofKind>(i % 4), hx, hy);

  LocalMatrix a = LocalMatrix::Zero();
  for (const auto& q : rule.points) {
    const double cx = x0 + q.x * hx;
    const double cy = y0 + q.y * hy;
    const double cval = c(cx, cy);
    if (!(cval > 0.0))
      throw ModelError("stiffness coefficient is nonpositive at (" + std::to_string(cx) + ", " +
                       std::to_string(cy) + ")");
    std::array<double, 16> lap;
    for (int i = 0; i < 16; ++i) {
      lap[i] = scale[i] * (shape_eval(i, q.x, q.y, 2, 0) / (hx * hx) +
                           shape_eval(i, q.x, q.y, 0, 2) / (hy * hy));
    }
    const double w = q.w * hx * hy * cval;
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) a(i, j) += w * lap[i] * lap[j];
  }
  return a;
}

Vector interpolate_nodal(const TensorMesh& mesh, const NodalFn& fn) {
  if (!fn) throw ConfigError("interpolate_nodal: missing nodal data function");
  Vector dofs(static_cast<Eigen::Index>(kDofsPerNode) * mesh.node_count());
  for (int node = 0; node < mesh.node_count(); ++node) {
    const NodalData d = fn(mesh.node_x(node), mesh.node_y(node));
    dofs[DofMap::global_index(node, DofKind::value)] = d.value;
    dofs[DofMap::global_index(node, DofKind::dx)] = d.dx;
    dofs[DofMap::global_index(node, DofKind::dy)] = d.dy;
    dofs[DofMap::global_index(node, DofKind::dxy)] = d.dxy;
  }
  return dofs;
}

double eval_field(const TensorMesh& mesh, const Vector& full_dofs, double x, double y) {
  const auto p = mesh.locate(x, y);
  const auto nodes = mesh.cell_nodes(p.cell);
  const double hx = mesh.hx(), hy = mesh.hy();
  double v = 0.0;
  for (int corner = 0; corner < 4; ++corner) {
    for (int k = 0; k < kDofsPerNode; ++k) {
      const auto kind = static_cast<DofKind>(k);
      const double coeff = full_dofs[DofMap::global_index(nodes[corner], kind)];
      if (coeff == 0.0) continue;
      v += coeff * dof_scale(kind, hx, hy) * shape_eval(4 * corner + k, p.xhat, p.yhat);
    }
  }
  return v;
}

double eval_field_free(const TensorMesh& mesh, const DofMap& dofmap, const Vector& free_dofs,
                       double x, double y) {
  const auto p = mesh.locate(x, y);
  const auto nodes = mesh.cell_nodes(p.cell);
  const double hx = mesh.hx(), hy = mesh.hy();
  double v = 0.0;
  for (int corner = 0; corner < 4; ++corner) {
    for (int k = 0; k < kDofsPerNode; ++k) {
      const auto kind = static_cast<DofKind>(k);
      const int fi = dofmap.free_index(DofMap::global_index(nodes[corner], kind));
      if (fi < 0) continue;
      v += free_dofs[fi] * dof_scale(kind, hx, hy) * shape_eval(4 * corner + k, p.xhat, p.yhat);
    }
  }
  return v;
}

}  // namespace platewave
