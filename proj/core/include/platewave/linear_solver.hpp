#ifndef PLATEWAVE_LINEAR_SOLVER_HPP
#define PLATEWAVE_LINEAR_SOLVER_HPP

#include "platewave/types.hpp"

#include <memory>

namespace platewave {

/// Sparse LU factorization with partial pivoting (fill-reducing column
/// ordering). Immutable after construction; solve() is const and safe for
/// concurrent use from multiple threads.
class Factorization {
public:
  explicit Factorization(const SparseMatrix& S);
  ~Factorization();
  Factorization(Factorization&&) noexcept;
  Factorization& operator=(Factorization&&) noexcept;

  Eigen::Index dimension() const { return n_; }

  /// Solves S x = b. Residual contract: |Sx-b| / |b| <= 1e-10 on
  /// well-conditioned systems; identical inputs give identical bits.
  Vector solve(const Vector& b) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Eigen::Index n_ = 0;
};

/// Throws SingularMatrixError when the matrix is structurally or numerically
/// singular.
Factorization factorize(const SparseMatrix& S);

}  // namespace platewave

#endif
