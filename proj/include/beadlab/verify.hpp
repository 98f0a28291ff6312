#pragma once

#include <string>
#include <vector>

#include "beadlab/common.hpp"

namespace beadlab {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double metric = 0.0;
  std::string detail;
};

namespace verify {

/// Truncated generating-series evaluation of the partition function from the
/// exact volume coefficients; independent of the root product route.
cdouble partition_series(int n, cdouble lambda, cdouble T, int k_max);
cdouble partition_series_zeta(int n, cdouble zeta, cdouble T, int k_max);

/// Truncated eigenvalue double product for det(I + T C), with the +-m terms
/// paired; converges to the sinh-ratio product as M grows.
cdouble fredholm_truncated(cdouble beta, int theta2, cdouble T, int n, int M);

/// Named suites: torus, volumes, kernels, dynamics, mc, asymptotics, all.
std::vector<CheckResult> run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace verify
}  // namespace beadlab
