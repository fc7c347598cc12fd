#ifndef PLATEWAVE_HERMITE_HPP
#define PLATEWAVE_HERMITE_HPP

namespace platewave::hermite {

// Cubic Hermite quartet on [0,1]: H0, H2 interpolate values at 0 and 1,
// H1, H3 interpolate first derivatives. Kronecker property at the endpoints.

inline double value(int k, double t) {
  switch (k) {
    case 0: return 1.0 + t * t * (-3.0 + 2.0 * t);
    case 1: return t * (1.0 + t * (-2.0 + t));
    case 2: return t * t * (3.0 - 2.0 * t);
    default: return t * t * (t - 1.0);
  }
}

inline double deriv1(int k, double t) {
  switch (k) {
    case 0: return 6.0 * t * (t - 1.0);
    case 1: return 1.0 + t * (-4.0 + 3.0 * t);
    case 2: return 6.0 * t * (1.0 - t);
    default: return t * (3.0 * t - 2.0);
  }
}

inline double deriv2(int k, double t) {
  switch (k) {
    case 0: return 12.0 * t - 6.0;
    case 1: return 6.0 * t - 4.0;
    case 2: return 6.0 - 12.0 * t;
    default: return 6.0 * t - 2.0;
  }
}

}  // namespace platewave::hermite

#endif
