// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_SCHEME_HPP
#define BIRKHOFF_SCHEME_HPP

#include <string>

namespace birkhoff {

enum class Scheme { box, leapfrog };

Scheme scheme_from_string(const std::string& s);
std::string to_string(Scheme s);

/// Integrator configuration for the damped wave family
/// u_tt - u_xx + u + alpha u_t + beta u_x = 0.
struct SchemeConfig {
  Scheme scheme = Scheme::box;
  double alpha = 0.0;     // time damping coefficient, >= 0
  double beta = 0.0;      // space drift coefficient
  double solver_tol = 1e-10;
};

void validate(const SchemeConfig& cfg);

}  // namespace birkhoff

#endif
