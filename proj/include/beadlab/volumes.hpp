#pragma once

#include <string>

#include "beadlab/common.hpp"
#include "beadlab/log_complex.hpp"

namespace beadlab {

struct VolumeQuery {
  int n = 2;
  int k = 0;
  int ell = 0;
};

struct VolumeResult {
  double value = 0.0;       // sign * exp(log_abs); may under/overflow double
  double log_abs = 0.0;     // log of |value| (-inf when zero)
  int sign = 0;
  double imag_residual = 0.0;
  std::string method;       // "exact-direct", "exact-complement", "centered", "binomial"
};

namespace volumes {

/// Sum over all size-m subsets S of the n-th roots of unity of (sum S)^{power},
/// accumulated in LogComplex with two-pass max rescaling.  Deterministic for
/// any thread count; reduction order is fixed by chunk index.
LogComplex subset_power_sum(int n, int m, int power, int threads = 1);

/// Volume of the set of configurations with k beads per string and occupation
/// number ell.  Enumerates whichever of the two subset families (size ell or
/// its complement) is smaller; the method field records the choice.
VolumeResult volume_exact(const VolumeQuery& q, int threads = 1);

/// Same value through one explicit subset family; used for the dual-route
/// equality check between the two coefficient formulas.
VolumeResult volume_form(const VolumeQuery& q, bool complement_side, int threads = 1);

/// Centered-subset variant: n times the sum restricted to subsets whose root
/// sum has argument in [-pi/2n, 3pi/2n).
VolumeResult volume_exact_centered(const VolumeQuery& q, int threads = 1);

/// Evaluates the complementary-subset form and asserts equality with the
/// direct form (the ell <-> n-ell symmetry follows).
VolumeResult volume_coefficient_extraction(const VolumeQuery& q, int threads = 1);

/// Partition function pieces; zeta = e^{-lambda} parametrisation provided so
/// the zeta -> 0 limit is expressible directly.
cdouble partition_theta_zeta(int n, cdouble zeta, cdouble T, int theta1, int theta2);
cdouble partition_theta(int n, cdouble lambda, cdouble T, int theta1, int theta2);
cdouble partition_product_zeta(int n, cdouble zeta, cdouble T);
cdouble partition_product(int n, cdouble lambda, cdouble T);

/// Closed-form determinant of I + T C as a product of sinh ratios over the
/// n-th roots of (-1)^{theta2}.  Throws pole_error when beta is in 2*pi*i*Z.
cdouble fredholm_product(cdouble beta, int theta2, cdouble T, int n);

}  // namespace volumes
}  // namespace beadlab
