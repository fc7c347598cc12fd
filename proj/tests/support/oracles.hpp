#ifndef PLATEWAVE_TESTS_ORACLES_HPP
#define PLATEWAVE_TESTS_ORACLES_HPP

// Test-side reference implementations, kept independent of the library code
// paths they check: factored-form Hermite polynomials, an 8-point tensor
// quadrature for the local matrices, dense Gaussian elimination for toy
// systems and a reduced-form trapezoidal stepper.

#include "platewave/mesh.hpp"
#include "platewave/types.hpp"

#include <Eigen/SparseLU>

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace platewave::testing {

// Cubic Hermite quartet in factored form (algebraically equal to the
// implementation's expanded polynomials, coded differently on purpose).
inline double herm(int k, double t) {
  switch (k) {
    case 0: return (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    case 1: return t * (1.0 - t) * (1.0 - t);
    case 2: return t * t * (3.0 - 2.0 * t);
    default: return t * t * (t - 1.0);
  }
}

inline double herm_d2(int k, double t) {
  switch (k) {
    case 0: return 6.0 * (2.0 * t - 1.0);
    case 1: return 2.0 * (3.0 * t - 2.0);
    case 2: return -6.0 * (2.0 * t - 1.0);
    default: return 2.0 * (3.0 * t - 1.0);
  }
}

// 8-point Gauss rule on [0,1] (degree-15 exact), nodes mirrored from the
// positive half written out explicitly.
struct GaussRule8 {
  std::array<double, 8> x{0.01985507175123188415821957, 0.10166676129318663020422303,
                          0.23723379504183550709113047, 0.40828267875217509753026193,
                          0.59171732124782490246973807, 0.76276620495816449290886953,
                          0.89833323870681336979577697, 0.98014492824876811584178043};
  std::array<double, 8> w{0.05061426814518812957626568, 0.11119051722668723527217800,
                          0.15685332293894364366898110, 0.18134189168918099148257522,
                          0.18134189168918099148257522, 0.15685332293894364366898110,
                          0.11119051722668723527217800, 0.05061426814518812957626568};
};

// Local DOF convention mirrored from the element: 4*corner + kind, corners
// counterclockwise from lower-left, kinds (value, dx, dy, dxy).
inline void local_dof_factors(int dof, int& kx, int& ky, int& scale_x_pow, int& scale_y_pow) {
  static constexpr int cx[4] = {0, 1, 1, 0};
  static constexpr int cy[4] = {0, 0, 1, 1};
  const int corner = dof / 4;
  const int kind = dof % 4;
  const bool dx_flavor = kind == 1 || kind == 3;
  const bool dy_flavor = kind == 2 || kind == 3;
  kx = (cx[corner] == 0 ? 0 : 2) + (dx_flavor ? 1 : 0);
  ky = (cy[corner] == 0 ? 0 : 2) + (dy_flavor ? 1 : 0);
  scale_x_pow = dx_flavor ? 1 : 0;
  scale_y_pow = dy_flavor ? 1 : 0;
}

/// Reference local mass matrix by direct 8x8-point tensor quadrature.
inline Eigen::Matrix<double, 16, 16> local_mass_oracle(double hx, double hy) {
  const GaussRule8 g;
  Eigen::Matrix<double, 16, 16> m = Eigen::Matrix<double, 16, 16>::Zero();
  for (int qy = 0; qy < 8; ++qy) {
    for (int qx = 0; qx < 8; ++qx) {
      std::array<double, 16> phi;
      for (int d = 0; d < 16; ++d) {
        int kx, ky, sx, sy;
        local_dof_factors(d, kx, ky, sx, sy);
        phi[d] = std::pow(hx, sx) * std::pow(hy, sy) * herm(kx, g.x[qx]) * herm(ky, g.x[qy]);
      }
      const double w = g.w[qx] * g.w[qy] * hx * hy;
      for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) m(i, j) += w * phi[i] * phi[j];
    }
  }
  return m;
}

/// Reference local biharmonic matrix (constant coefficient c).
inline Eigen::Matrix<double, 16, 16> local_biharmonic_oracle(double hx, double hy, double c) {
  const GaussRule8 g;
  Eigen::Matrix<double, 16, 16> a = Eigen::Matrix<double, 16, 16>::Zero();
  for (int qy = 0; qy < 8; ++qy) {
    for (int qx = 0; qx < 8; ++qx) {
      std::array<double, 16> lap;
      for (int d = 0; d < 16; ++d) {
        int kx, ky, sx, sy;
        local_dof_factors(d, kx, ky, sx, sy);
        const double scale = std::pow(hx, sx) * std::pow(hy, sy);
        lap[d] = scale * (herm_d2(kx, g.x[qx]) * herm(ky, g.x[qy]) / (hx * hx) +
                          herm(kx, g.x[qx]) * herm_d2(ky, g.x[qy]) / (hy * hy));
      }
      const double w = g.w[qx] * g.w[qy] * hx * hy * c;
      for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) a(i, j) += w * lap[i] * lap[j];
    }
  }
  return a;
}

/// Dense Gaussian elimination with partial pivoting for small test systems.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) throw std::runtime_error("dense_solve: singular");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

/// Reduced-form trapezoidal (Crank-Nicolson) stepper for
/// M u'' = -A u + F: factorizes (M + tau^2/4 A) once and advances
/// (u, v) node to node. Independent of the block-system route.
class TrapezoidalReference {
public:
  TrapezoidalReference(const SparseMatrix& M, const SparseMatrix& A, double tau)
      : M_(M), A_(A), tau_(tau) {
    Eigen::SparseMatrix<double> lhs = (M + (tau * tau / 4.0) * A).eval();
    lhs.makeCompressed();
    lu_.compute(lhs);
    if (lu_.info() != Eigen::Success) throw std::runtime_error("trapezoidal oracle: factorization");
  }

  /// One step given the endpoint load vectors F_n, F_{n+1}.
  void step(Vector& u, Vector& v, const Vector& f_left, const Vector& f_right) const {
    const Vector rhs = M_ * v - (tau_ * tau_ / 4.0) * (A_ * v) - tau_ * (A_ * u) +
                       (tau_ / 2.0) * (f_left + f_right);
    const Vector v_next = lu_.solve(rhs);
    u += (tau_ / 2.0) * (v + v_next);
    v = v_next;
  }

private:
  const SparseMatrix& M_;
  const SparseMatrix& A_;
  double tau_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
};

/// Smallest eigenvalue estimate by inverse power iteration.
inline double smallest_eigenvalue(const SparseMatrix& S, int iterations = 200) {
  Eigen::SparseMatrix<double> cm = S;
  cm.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(cm);
  if (lu.info() != Eigen::Success) return 0.0;
  Vector z = Vector::Ones(S.rows()).normalized();
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Vector w = lu.solve(z);
    const double norm = w.norm();
    if (!(norm > 0.0)) return 0.0;
    z = w / norm;
    lambda = z.dot(S * z);
  }
  return lambda;
}

}  // namespace platewave::testing

#endif
