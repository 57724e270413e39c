// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_ERRORS_HPP
#define BIRKHOFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace birkhoff {

/// Bad arguments or misuse of an interface (maps to CLI exit code 2).
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A user-supplied callable produced a non-finite value.
class evaluation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Linear solve failed or left residuals above tolerance.
class solver_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The numerical state became non-finite during time stepping.
class divergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Requested a feature outside the implemented problem family.
class unsupported_problem : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace birkhoff

#endif
