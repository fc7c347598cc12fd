#ifndef PLATEWAVE_ASSEMBLY_HPP
#define PLATEWAVE_ASSEMBLY_HPP

#include "platewave/bfs_element.hpp"
#include "platewave/coefficient.hpp"
#include "platewave/mesh.hpp"
#include "platewave/types.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>

namespace platewave {

struct DofCounts {
  std::int64_t total_dofs = 0;  // J = 4 (nx+1)(ny+1), paper convention
  std::int64_t free_dofs = 0;
  std::int64_t nnz_mass = 0;
  std::int64_t nnz_stiffness = 0;
};

/// Global mass and biharmonic operators over the free DOFs (clamped boundary
/// DOFs eliminated). Both share the mesh-connectivity sparsity pattern.
struct AssembledOperators {
  SparseMatrix M;
  SparseMatrix A;
  DofCounts counts;
};

/// Deterministic assembly: cells ascending, local DOFs ascending.
AssembledOperators assemble(const TensorMesh& mesh, const DofMap& dofmap,
                            const CoefficientField& c);

/// Load vector (f, phi_i) over the free DOFs for a fixed-time spatial
/// function, integrated with an n-point tensor Gauss rule per cell.
Vector assemble_load(const TensorMesh& mesh, const DofMap& dofmap,
                     const std::function<double(double, double)>& f, int quad_points = 4);

/// Text "coordinate" export, one `row col value` triplet per line, 0-based.
void write_triplets(std::ostream& os, const SparseMatrix& m);

}  // namespace platewave

#endif
