#ifndef PLATEWAVE_TYPES_HPP
#define PLATEWAVE_TYPES_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <stdexcept>
#include <string>

namespace platewave {

using Vector = Eigen::VectorXd;

/// Row-compressed sparse matrix: row offsets, sorted column indices, values.
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

/// Invalid user input: mesh parameters, scheme names, config files.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The mathematical model is violated (e.g. nonpositive stiffness coefficient).
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix handed to the direct solver is (numerically) singular.
class SingularMatrixError : public std::runtime_error {
public:
  explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace platewave

#endif
