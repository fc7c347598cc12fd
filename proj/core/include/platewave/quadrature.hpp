#ifndef PLATEWAVE_QUADRATURE_HPP
#define PLATEWAVE_QUADRATURE_HPP

#include <vector>

namespace platewave {

/// 1D rule on the reference interval [0,1]; weights sum to 1.
struct QuadratureRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Legendre rule with n points, 1 <= n <= 8; exact through degree 2n-1.
/// Tabulated to full double precision.
QuadratureRule1D gauss_legendre(int n);

/// Gauss-Lobatto rule with n points, 2 <= n <= 8; includes both endpoints,
/// exact through degree 2n-3.
QuadratureRule1D gauss_lobatto(int n);

struct QuadraturePoint2D {
  double x;
  double y;
  double w;
};

/// Tensor-product rule on [0,1]^2; n^2 points, weights sum to 1.
struct QuadratureRule2D {
  std::vector<QuadraturePoint2D> points;

  int size() const { return static_cast<int>(points.size()); }
};

QuadratureRule2D tensorize(const QuadratureRule1D& rule);

}  // namespace platewave

#endif
