#ifndef PLATEWAVE_COEFFICIENT_HPP
#define PLATEWAVE_COEFFICIENT_HPP

#include "platewave/types.hpp"

#include <functional>
#include <utility>

namespace platewave {

/// Scalar stiffness field c(x) > 0. Constant, a piecewise jump across a
/// horizontal line, or an arbitrary callable. Sampled pointwise at quadrature
/// points during assembly.
class CoefficientField {
public:
  static CoefficientField constant(double value);

  /// c = below where y < y0, c = above where y >= y0.
  static CoefficientField step_y(double y0, double below, double above);

  static CoefficientField analytic(std::function<double(double, double)> fn);

  double operator()(double x, double y) const { return fn_(x, y); }

  bool is_constant() const { return constant_; }

private:
  CoefficientField(std::function<double(double, double)> fn, bool constant)
      : fn_(std::move(fn)), constant_(constant) {}

  std::function<double(double, double)> fn_;
  bool constant_;
};

}  // namespace platewave

#endif
