#include "platewave/coefficient.hpp"

namespace platewave {

CoefficientField CoefficientField::constant(double value) {
  if (!(value > 0.0)) throw ModelError("stiffness coefficient must be positive");
  return CoefficientField([value](double, double) { return value; }, true);
}

CoefficientField CoefficientField::step_y(double y0, double below, double above) {
  if (!(below > 0.0) || !(above > 0.0))
    throw ModelError("stiffness coefficient must be positive on both sides of the interface");
  return CoefficientField([y0, below, above](double, double y) { return y < y0 ? below : above; },
                          false);
}

CoefficientField CoefficientField::analytic(std::function<double(double, double)> fn) {
  return CoefficientField(std::move(fn), false);
}

}  // namespace platewave
