#pragma once

#include <span>
#include <vector>

#include "beadlab/common.hpp"

namespace beadlab {

/// Event flavor on the replicated torus: bead / occupied / unoccupied.
enum class Flavor { bead, occupied, unoccupied };

Flavor flavor_from_char(char c);
char flavor_to_char(Flavor f);

/// Point fed to a correlation determinant.
struct KernelPoint {
  Flavor alpha = Flavor::bead;
  double t = 0.0;
  long h = 0;
};

/// Parameters of the torus kernels.  Construction checks the pole hypothesis
/// beta + T z not in 2*pi*i*Z for every root z.
struct TorusKernelParams {
  int n;
  cdouble beta;
  int theta2;
  cdouble T;
  std::vector<cdouble> roots;

  TorusKernelParams(int n_, cdouble beta_, int theta2_, cdouble T_);
};

/// Parameters of the ring kernels: the root circle split into the ell roots
/// of least real part and their complement, both conjugation-symmetric.
struct RingKernelParams {
  int n;
  int ell;
  int theta2;
  std::vector<cdouble> left;   // ell roots of least real part
  std::vector<cdouble> right;  // the other n-ell roots
};

namespace kernels {

/// Splits the n-th roots of (-1)^{(n+ell+1) mod 2} by real part.  The parity
/// choice makes the split unambiguous; a real-part tie trips an assertion.
RingKernelParams root_sets(int n, int ell);

cdouble kernel_torus(const TorusKernelParams& p, Flavor alpha, double t, long h);

/// Ring kernel; s may be any real, h is reduced mod n into (-n, n).
cdouble kernel_ring(const RingKernelParams& p, Flavor alpha, double s, long h);

/// det over pairs of points of the flavor-dependent kernel at displacements.
cdouble mixed_correlation(std::span<const KernelPoint> points, const TorusKernelParams& p);
cdouble mixed_correlation(std::span<const KernelPoint> points, const RingKernelParams& p);

/// Jump of the ring kernel across s = 0, computed from the two branch sums.
/// Equals an indicator at h = 1_{alpha=b} while the root exponent stays in
/// (-n, n); at h = 1-n with alpha = b the exponent aliases to n and the jump
/// picks up the root parity instead.
cdouble kernel_jump(const RingKernelParams& p, Flavor alpha, long h);

/// Discretises the kernels on a midpoint grid over the replicated torus and
/// returns the max-entry residual of the inversion identity; O(1/M).
double verify_inversion(const TorusKernelParams& p, int grid);

/// Midpoint-quadrature error of the convolution identity for two exponential
/// kernels; decays at first order in the grid size.
double stream_identity_error(cdouble lam_a, cdouble lam_b, double t, double tp, int grid);

/// Diagnostic only: deviation of the ring bead kernel along one string from
/// its large-n sine-kernel limit shape.  No threshold is attached.
struct SineProbeRow {
  int n;
  double s;
  double kernel_value;
  double sine_value;
};
std::vector<SineProbeRow> sine_probe(double tau, std::span<const double> s_values,
                                     std::span<const int> n_values);

}  // namespace kernels
}  // namespace beadlab
