#pragma once

#include <cstdint>

#include "beadlab/common.hpp"
#include "beadlab/torus.hpp"

namespace beadlab {

/// Streaming mean/variance accumulator; replica results merge associatively.
struct Welford {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d1 = x - mean;
    mean += d1 / count;
    m2 += d1 * (x - mean);
  }

  void merge(const Welford& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double d = o.mean - mean;
    const std::uint64_t total = count + o.count;
    mean += d * o.count / total;
    m2 += o.m2 + d * d * (double(count) / total) * o.count;
    count = total;
  }

  double variance() const { return count > 1 ? m2 / (count - 1) : 0.0; }
  double std_error() const {
    return count > 1 ? std::sqrt(variance() / count) : 0.0;
  }
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double hit_fraction = 0.0;
};

namespace mc {

/// Monte Carlo volume: iid uniform coordinates, k per string, sorted within
/// strings; a hit is a valid configuration with the requested occupation
/// number.  The within-string ordering multiplicity (k!)^n is divided out in
/// log space.  Deterministic per seed.
McEstimate volume_mc(int n, int k, int ell, std::uint64_t samples, std::uint64_t seed);

/// Rejection sampler for a uniform configuration with the given occupation
/// number.  Throws resource_error (with the measured acceptance rate) when
/// the trial budget runs out; budget 0 means the configured default.
BeadConfiguration sample_uniform_config(int n, int k, int ell, std::uint64_t seed,
                                        std::uint64_t budget = 0);

}  // namespace mc
}  // namespace beadlab
