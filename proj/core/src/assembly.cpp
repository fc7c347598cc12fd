#include "platewave/assembly.hpp"

#include "platewave/quadrature.hpp"

#include <array>
#include <ostream>
#include <vector>

namespace platewave {

namespace {

void scatter_local(std::vector<Triplet>& triplets, const LocalMatrix& local,
                   const std::array<int, 4>& nodes, const DofMap& dofmap) {
  for (int i = 0; i < 16; ++i) {
    const int gi = DofMap::global_index(nodes[i / 4], static_cast<DofKind>(i % 4));
    const int fi = dofmap.free_index(gi);
    if (fi < 0) continue;
    for (int j = 0; j < 16; ++j) {
      const int gj = DofMap::global_index(nodes[j / 4], static_cast<DofKind>(j % 4));
      const int fj = dofmap.free_index(gj);
      if (fj < 0) continue;
      triplets.emplace_back(fi, fj, local(i, j));
    }
  }
}

}  // namespace

AssembledOperators assemble(const TensorMesh& mesh, const DofMap& dofmap,
                            const CoefficientField& c) {
  const int free = dofmap.free_count();
  const LocalMatrix mass = local_mass(mesh);
  const bool uniform_c = c.is_constant();
  LocalMatrix stiff_uniform;
  if (uniform_c) stiff_uniform = local_biharmonic(mesh, c, 0);

  std::vector<Triplet> m_triplets, a_triplets;
  m_triplets.reserve(static_cast<std::size_t>(mesh.cell_count()) * 256);
  a_triplets.reserve(static_cast<std::size_t>(mesh.cell_count()) * 256);

  for (int cell = 0; cell < mesh.cell_count(); ++cell) {
    const auto nodes = mesh.cell_nodes(cell);
    scatter_local(m_triplets, mass, nodes, dofmap);
    if (uniform_c) {
      scatter_local(a_triplets, stiff_uniform, nodes, dofmap);
    } else {
      scatter_local(a_triplets, local_biharmonic(mesh, c, cell), nodes, dofmap);
    }
  }

  AssembledOperators ops;
  ops.M.resize(free, free);
  ops.M.setFromTriplets(m_triplets.begin(), m_triplets.end());
  ops.M.makeCompressed();
  ops.A.resize(free, free);
  ops.A.setFromTriplets(a_triplets.begin(), a_triplets.end());
  ops.A.makeCompressed();

  ops.counts.total_dofs = dofmap.total();
  ops.counts.free_dofs = free;
  ops.counts.nnz_mass = ops.M.nonZeros();
  ops.counts.nnz_stiffness = ops.A.nonZeros();
  return ops;
}

Vector assemble_load(const TensorMesh& mesh, const DofMap& dofmap,
                     const std::function<double(double, double)>& f, int quad_points) {
  const QuadratureRule2D rule = tensorize(gauss_legendre(quad_points));
  const double hx = mesh.hx(), hy = mesh.hy();

  std::array<double, 16> scale;
  for (int i = 0; i < 16; ++i) scale[i] = dof_scale(static_cast<DofKind>(i % 4), hx, hy);

  // Shape values at the reference quadrature points are cell-independent.
  std::vector<std::array<double, 16>> phi(rule.points.size());
  for (std::size_t q = 0; q < rule.points.size(); ++q)
    for (int i = 0; i < 16; ++i)
      phi[q][i] = scale[i] * shape_eval(i, rule.points[q].x, rule.points[q].y);

  Vector load = Vector::Zero(dofmap.free_count());
  for (int cell = 0; cell < mesh.cell_count(); ++cell) {
    const auto nodes = mesh.cell_nodes(cell);
    const auto [x0, y0] = mesh.cell_origin(cell);
    std::array<double, 16> local{};
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
      const double fw = f(x0 + rule.points[q].x * hx, y0 + rule.points[q].y * hy) *
                        rule.points[q].w * hx * hy;
      for (int i = 0; i < 16; ++i) local[i] += fw * phi[q][i];
    }
    for (int i = 0; i < 16; ++i) {
      const int fi = dofmap.free_index(DofMap::global_index(nodes[i / 4], static_cast<DofKind>(i % 4)));
      if (fi >= 0) load[fi] += local[i];
    }
  }
  return load;
}

void write_triplets(std::ostream& os, const SparseMatrix& m) {
  for (int row = 0; row < m.outerSize(); ++row)
    for (SparseMatrix::InnerIterator it(m, row); it; ++it)
      os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

}  // namespace platewave
