#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "beadlab/common.hpp"

namespace beadlab {

struct AsymptoticParams {
  double p = 1.0;    // beads-per-string density; k = floor(p n)
  double tau = 0.5;  // tilt in (0,1); ell = floor(tau n)
  int gf_truncation = 64;

  cdouble q_plus() const;
  cdouble q_minus() const;
};

struct ProbeRow {
  int n = 0;
  int k = 0;
  int ell = 0;
  double log_lhs = 0.0;          // log of the rescaled volume expression
  double log_target = 0.0;       // log of the limiting constant
  double rel_err_constant = 0.0;
  double free_energy_lhs = 0.0;  // (1/nk) log(k^{nk} Vol)
  double free_energy_err = 0.0;
};

namespace asym {

/// Per-bead free energy of the unit-density model at tilt tau.
double free_energy(double tau);

/// Surface tension at gap g and tilt tau; symmetric under tau <-> 1-tau.
double surface_tension(double g, double tau);

/// Partition counts p(0..M) by the pentagonal-number recurrence.
std::vector<std::int64_t> partition_numbers(int M);

/// Truncated partition generating function; requires |s| < 1.
cdouble partition_gf(cdouble s, int M);

/// Crude bound on the dropped tail of the truncated generating function.
double partition_gf_tail_bound(double abs_s, int M);

/// Limit constant of the rescaled volumes; the two conjugate generating
/// function factors multiply to a real value.
double asymptotic_constant(const AsymptoticParams& params);

/// Finite-n evaluation of the rescaled volume against its limit, one row per
/// requested n, all in log-scale arithmetic.
std::vector<ProbeRow> convergence_probe(const AsymptoticParams& params,
                                        std::span<const int> n_values, int threads = 1);

}  // namespace asym
}  // namespace beadlab
