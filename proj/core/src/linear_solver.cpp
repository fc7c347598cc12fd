#include "platewave/linear_solver.hpp"

#include <Eigen/SparseLU>

#include <string>

namespace platewave {

struct Factorization::Impl {
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
};

Factorization::Factorization(const SparseMatrix& S) : impl_(std::make_unique<Impl>()) {
  if (S.rows() != S.cols())
    throw SingularMatrixError("factorize: matrix is not square (" + std::to_string(S.rows()) +
                              "x" + std::to_string(S.cols()) + ")");
  n_ = S.rows();
  Eigen::SparseMatrix<double> col_major = S;  // SparseLU wants column-major storage
  col_major.makeCompressed();
  impl_->lu.isSymmetric(false);
  impl_->lu.compute(col_major);
  if (impl_->lu.info() != Eigen::Success)
    throw SingularMatrixError("factorize: " + impl_->lu.lastErrorMessage());
}

Factorization::~Factorization() = default;
Factorization::Factorization(Factorization&&) noexcept = default;
Factorization& Factorization::operator=(Factorization&&) noexcept = default;

Vector Factorization::solve(const Vector& b) const {
  if (b.size() != n_)
    throw ConfigError("solve: dimension mismatch, matrix is " + std::to_string(n_) +
                      ", rhs is " + std::to_string(b.size()));
  Vector x = impl_->lu.solve(b);
  if (impl_->lu.info() != Eigen::Success)
    throw SingularMatrixError("solve: back substitution failed");
  return x;
}

Factorization factorize(const SparseMatrix& S) { return Factorization(S); }

}  // namespace platewave
