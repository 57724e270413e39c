// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_SELF_ADJOINT_HPP
#define BIRKHOFF_SELF_ADJOINT_HPP

#include <string>
#include <vector>

#include "birkhoff/system.hpp"

namespace birkhoff {

struct SamplePoint {
  Vec z;
  double x = 0.0;
  double t = 0.0;
};

/// Result of the variational self-adjointness check. A system derives from a
/// Pfaffian action iff, over the sampled region,
///   (a) M and K are skew,
///   (b) the cyclic sums dM_{mu,nu}/dz^tau + dM_{nu,tau}/dz^mu
///       + dM_{tau,mu}/dz^nu vanish (same for K),
///   (c) dM_{mu,nu}/dt + dK_{mu,nu}/dx = dD_mu/dz^nu - dD_nu/dz^mu.
struct SelfAdjointnessReport {
  double skew_M_max = 0.0;
  double skew_K_max = 0.0;
  double closure_M_max = 0.0;
  double closure_K_max = 0.0;
  double compat_max = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  /// Names of the conditions whose maxima exceed the tolerance.
  std::vector<std::string> failed_conditions() const;
};

/// Evaluates the three self-adjointness conditions at every sample, using
/// central finite differences on the callables, and reports the maxima.
/// Throws usage_error on an empty sample list or non-positive tolerance.
SelfAdjointnessReport check_self_adjointness(const CovariantSystem& sys,
                                             const std::vector<SamplePoint>& samples,
                                             double tol);

}  // namespace birkhoff

#endif
