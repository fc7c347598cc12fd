#include "platewave/cases.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace platewave {

namespace {

constexpr double kPi = std::numbers::pi;

inline double sin_sq(double v) {
  const double s = std::sin(kPi * v);
  return s * s;
}

// Space factor of the fct2 forcing: the wave operator applied to
// sin^2(pi x) sin^2(pi y) plus the -4 pi^2 term from the second time
// derivative of sin(2 pi t).
double fct2_space_factor(double x, double y) {
  const double p2 = kPi * kPi;
  const double p4 = p2 * p2;
  const double sx = sin_sq(x), sy = sin_sq(y);
  return -4.0 * p2 * sx * sy + p4 * (16.0 * sx - 8.0) * sy +
         2.0 * p4 * (2.0 - 4.0 * sx) * (2.0 - 4.0 * sy) + p4 * sx * (16.0 * sy - 8.0);
}

// Derivatives of the separable bump factor G(t) = exp(-100 t^2) (1 - t^2)^2
// through order 5, via G^(k) = exp(-100 t^2) P_k with P_{k+1} = P_k' - 200 t P_k.
struct BumpPolys {
  std::array<std::array<double, 12>, 6> c{};

  BumpPolys() {
    c[0][0] = 1.0;
    c[0][2] = -2.0;
    c[0][4] = 1.0;
    for (int k = 0; k < 5; ++k) {
      for (int d = 0; d + 1 < 12; ++d) c[k + 1][d] += (d + 1) * c[k][d + 1];
      for (int d = 0; d + 1 < 12; ++d) c[k + 1][d + 1] -= 200.0 * c[k][d];
    }
  }
};

double bump_factor(int order, double t) {
  static const BumpPolys polys;
  double p = 0.0;
  for (int d = 11; d >= 0; --d) p = p * t + polys.c[order][d];
  return std::exp(-100.0 * t * t) * p;
}

}  // namespace

ManufacturedCase fct2_case() {
  ManufacturedCase mc;
  mc.name = "fct2";
  mc.final_time = 1.0;
  mc.domain = {0.0, 1.0, 0.0, 1.0};

  mc.u = [](double x, double y, double t) { return std::sin(2.0 * kPi * t) * sin_sq(x) * sin_sq(y); };
  mc.u_t = [](double x, double y, double t) {
    return 2.0 * kPi * std::cos(2.0 * kPi * t) * sin_sq(x) * sin_sq(y);
  };
  mc.forcing = RhsModel::analytic(
      [](double x, double y, double t) { return std::sin(2.0 * kPi * t) * fct2_space_factor(x, y); },
      [](double x, double y, double t) {
        return 2.0 * kPi * std::cos(2.0 * kPi * t) * fct2_space_factor(x, y);
      });

  mc.initial.u0 = zero_nodal_fn();
  mc.initial.u1 = [](double x, double y) {
    NodalData d;
    const double sx = sin_sq(x), sy = sin_sq(y);
    const double dsx = kPi * std::sin(2.0 * kPi * x);
    const double dsy = kPi * std::sin(2.0 * kPi * y);
    d.value = 2.0 * kPi * sx * sy;
    d.dx = 2.0 * kPi * dsx * sy;
    d.dy = 2.0 * kPi * sx * dsy;
    d.dxy = 2.0 * kPi * dsx * dsy;
    return d;
  };
  // f(., 0) = 0 and u_0 = 0, so the initial velocity derivative vanishes.
  mc.initial.accel0 = zero_nodal_fn();
  return mc;
}

InitialData zero_initial() { return {zero_nodal_fn(), zero_nodal_fn(), zero_nodal_fn()}; }

InitialData gaussian_bump_initial(const CoefficientField& c) {
  InitialData init;
  init.u0 = [](double x, double y) {
    NodalData d;
    d.value = 0.2 * bump_factor(0, x) * bump_factor(0, y);
    d.dx = 0.2 * bump_factor(1, x) * bump_factor(0, y);
    d.dy = 0.2 * bump_factor(0, x) * bump_factor(1, y);
    d.dxy = 0.2 * bump_factor(1, x) * bump_factor(1, y);
    return d;
  };
  init.u1 = zero_nodal_fn();
  // d/dt u^1(0) = -Delta(c Delta u_0); c is piecewise constant and the
  // interface carries no nodes, so the pointwise value is -c Delta^2 u_0.
  init.accel0 = [c](double x, double y) {
    const double cv = c(x, y);
    NodalData d;
    d.value = -cv * 0.2 *
              (bump_factor(4, x) * bump_factor(0, y) +
               2.0 * bump_factor(2, x) * bump_factor(2, y) +
               bump_factor(0, x) * bump_factor(4, y));
    d.dx = -cv * 0.2 *
           (bump_factor(5, x) * bump_factor(0, y) + 2.0 * bump_factor(3, x) * bump_factor(2, y) +
            bump_factor(1, x) * bump_factor(4, y));
    d.dy = -cv * 0.2 *
           (bump_factor(4, x) * bump_factor(1, y) + 2.0 * bump_factor(2, x) * bump_factor(3, y) +
            bump_factor(0, x) * bump_factor(5, y));
    d.dxy = -cv * 0.2 *
            (bump_factor(5, x) * bump_factor(1, y) + 2.0 * bump_factor(3, x) * bump_factor(3, y) +
             bump_factor(1, x) * bump_factor(5, y));
    return d;
  };
  return init;
}

InitialData initial_by_name(const std::string& name, const CoefficientField& c) {
  if (name == "zero") return zero_initial();
  if (name == "fct2") return fct2_case().initial;
  if (name == "gaussian_bump") return gaussian_bump_initial(c);
  throw ConfigError("unknown initial data '" + name +
                    "' (expected zero, fct2 or gaussian_bump)");
}

RhsModel forcing_by_name(const std::string& name) {
  if (name == "zero") return RhsModel::zero();
  if (name == "fct2") return fct2_case().forcing;
  throw ConfigError("unknown forcing '" + name + "' (expected zero or fct2)");
}

}  // namespace platewave
