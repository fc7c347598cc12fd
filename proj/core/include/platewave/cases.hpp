#ifndef PLATEWAVE_CASES_HPP
#define PLATEWAVE_CASES_HPP

#include "platewave/coefficient.hpp"
#include "platewave/error_norms.hpp"
#include "platewave/time_schemes.hpp"

#include <string>

namespace platewave {

/// Smooth standing-wave benchmark on the unit square: exact solution
/// u = sin(2 pi t) sin^2(pi x) sin^2(pi y) with the matching forcing,
/// u_0 = 0 and u_1 = 2 pi sin^2(pi x) sin^2(pi y).
ManufacturedCase fct2_case();

/// Zero data (zero solution).
InitialData zero_initial();

/// Separable Gaussian bump 0.2 exp(-|10 x|^2) (1-x^2)^2 (1-y^2)^2 on
/// (-1,1)^2 at rest. The velocity-derivative start value is the pointwise
/// spatial operator -c Delta^2 u_0 (f = 0); nodal derivatives are exact.
InitialData gaussian_bump_initial(const CoefficientField& c);

/// Named registry used by scenario configs.
InitialData initial_by_name(const std::string& name, const CoefficientField& c);
RhsModel forcing_by_name(const std::string& name);

}  // namespace platewave

#endif
