#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "beadlab/kernels.hpp"
#include "beadlab/ring_dynamics.hpp"

using namespace beadlab;

TEST_CASE("root split for ten strings, three occupied") {
  const RingKernelParams p = kernels::root_sets(10, 3);
  CHECK(p.theta2 == 0);
  REQUIRE(p.left.size() == 3);
  REQUIRE(p.right.size() == 7);
  // least-real-part roots sit at angles 144, 180, 216 degrees
  std::vector<double> angles;
  for (const auto& z : p.left) angles.push_back(std::arg(z) * 180.0 / kPi);
  std::sort(angles.begin(), angles.end());
  CHECK(angles[0] == doctest::Approx(-144.0).epsilon(1e-12));
  CHECK(angles[1] == doctest::Approx(144.0).epsilon(1e-12));
  CHECK(std::abs(std::abs(angles[2]) - 180.0) < 1e-9);
}

TEST_CASE("two strings, one occupied") {
  const RingKernelParams p = kernels::root_sets(2, 1);
  CHECK(p.theta2 == 0);
  CHECK(std::abs(p.left[0] - cdouble{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(p.right[0] - cdouble{1.0, 0.0}) < 1e-15);
}

TEST_CASE("left root sum is the negated exit rate") {
  for (int n = 2; n <= 12; ++n)
    for (int ell = 1; ell <= n - 1; ++ell) {
      const RingKernelParams p = kernels::root_sets(n, ell);
      const cdouble sum =
          std::accumulate(p.left.begin(), p.left.end(), cdouble{0.0, 0.0});
      CHECK(std::abs(sum - cdouble{-ring::chain_exit_rate(n, ell), 0.0}) < 1e-12);
    }
}

TEST_CASE("least-real-part split matches the closed-form arc") {
  for (int n = 3; n <= 11; ++n)
    for (int ell = 1; ell <= n - 1; ++ell) {
      const RingKernelParams p = kernels::root_sets(n, ell);
      for (int k = 1; k <= ell; ++k) {
        const cdouble expected =
            std::polar(1.0, 2.0 * kPi / n * ((n - ell + 1) / 2.0 + k - 1));
        double best = 1e9;
        for (const auto& z : p.left) best = std::min(best, std::abs(z - expected));
        CHECK(best < 1e-9);
      }
    }
}

TEST_CASE("torus kernel single-root closed form") {
  const cdouble beta{0.8, 0.0}, T{0.5, 0.0};
  const TorusKernelParams p(1, beta, 0, T);
  const double t = 0.37;
  const cdouble w = beta + T;
  const cdouble expected = T * std::exp(-w * t) / (1.0 - std::exp(-w));
  // h = 1 wraps to the single root, exponent 1 - 1 = 0
  CHECK(std::abs(kernels::kernel_torus(p, Flavor::bead, t, 1) - expected) < 1e-14);
}

TEST_CASE("torus kernel two-root sum evaluated independently") {
  const cdouble beta{0.8, 0.0}, T{0.4, 0.0};
  const TorusKernelParams p(2, beta, 0, T);
  const double t = 0.3;
  cdouble expected{0.0, 0.0};
  for (double z : {1.0, -1.0}) {
    const cdouble w = beta + T * z;
    expected += std::exp(-w * t) / (1.0 - std::exp(-w));
  }
  expected *= -0.5;  // occupation flavor sign, 1/n
  CHECK(std::abs(kernels::kernel_torus(p, Flavor::occupied, t, 0) - expected) < 1e-14);
}

TEST_CASE("complementation holds pointwise") {
  const TorusKernelParams p(3, {0.9, 0.1}, 1, {0.3, 0.0});
  for (double t : {0.0, -0.4, 0.2, 0.45})
    for (int h = -2; h <= 2; ++h) {
      const cdouble sum = kernels::kernel_torus(p, Flavor::unoccupied, t, h) +
                          kernels::kernel_torus(p, Flavor::occupied, t, h);
      const double indicator = (t == 0.0 && h == 0) ? 1.0 : 0.0;
      CHECK(std::abs(sum - cdouble{indicator, 0.0}) < 1e-12);
    }
}

TEST_CASE("pole hypothesis rejected at construction") {
  CHECK_THROWS_AS(TorusKernelParams(1, {0.5, 0.0}, 0, {-0.5, 0.0}), pole_error);
  CHECK_THROWS_AS(TorusKernelParams(2, {0.0, 0.0}, 0, {0.3, 0.0}), pole_error);
}

TEST_CASE("ring kernel one-point densities") {
  for (int n : {4, 7, 12})
    for (int ell = 1; ell <= n - 1; ++ell) {
      const RingKernelParams p = kernels::root_sets(n, ell);
      CHECK(kernels::kernel_ring(p, Flavor::occupied, 0, 0).real() ==
            doctest::Approx(double(ell) / n).epsilon(1e-13));
      CHECK(kernels::kernel_ring(p, Flavor::bead, 0, 0).real() ==
            doctest::Approx(ring::chain_exit_rate(n, ell) / n).epsilon(1e-13));
      CHECK(kernels::kernel_ring(p, Flavor::unoccupied, 0, 0).real() ==
            doctest::Approx(double(n - ell) / n).epsilon(1e-13));
    }
}

TEST_CASE("branch jump across zero displacement") {
  const RingKernelParams p = kernels::root_sets(8, 3);
  CHECK(std::abs(kernels::kernel_jump(p, Flavor::occupied, 0) - cdouble{-1.0, 0.0}) <
        1e-13);
  CHECK(std::abs(kernels::kernel_jump(p, Flavor::bead, 1) - cdouble{1.0, 0.0}) < 1e-13);
  CHECK(std::abs(kernels::kernel_jump(p, Flavor::unoccupied, 5)) < 1e-13);
  CHECK(std::abs(kernels::kernel_jump(p, Flavor::bead, 4)) < 1e-13);
}

TEST_CASE("single point correlation reduces to the kernel") {
  const RingKernelParams p = kernels::root_sets(6, 2);
  const KernelPoint pt{Flavor::occupied, 0.4, 3};
  const std::vector<KernelPoint> pts{pt};
  CHECK(std::abs(kernels::mixed_correlation(pts, p) -
                 kernels::kernel_ring(p, Flavor::occupied, 0.0, 0)) < 1e-14);
}

TEST_CASE("two-point occupation minor matches state enumeration") {
  const int n = 5, ell = 2;
  const RingKernelParams p = kernels::root_sets(n, ell);
  for (int h1 = 0; h1 < n; ++h1)
    for (int h2 = h1 + 1; h2 < n; ++h2) {
      double direct = 0.0;
      for (const RingSet& state : ring::enumerate_states(n, ell))
        if (state.contains(h1) && state.contains(h2))
          direct += ring::stationary_prob(state);
      const std::vector<KernelPoint> pts{{Flavor::occupied, 0.0, h1},
                                         {Flavor::occupied, 0.0, h2}};
      CHECK(kernels::mixed_correlation(pts, p).real() ==
            doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("determinant invariant under simultaneous permutation") {
  const RingKernelParams p = kernels::root_sets(7, 3);
  std::vector<KernelPoint> pts = {{Flavor::bead, 0.1, 0},
                                  {Flavor::occupied, 0.55, 2},
                                  {Flavor::unoccupied, 0.8, 5},
                                  {Flavor::occupied, 0.3, 6}};
  const cdouble base = kernels::mixed_correlation(pts, p);
  std::swap(pts[0], pts[2]);
  std::swap(pts[1], pts[3]);
  CHECK(std::abs(kernels::mixed_correlation(pts, p) - base) < 1e-13);
}

TEST_CASE("inversion residual vanishes at T = 0 and shrinks with the grid") {
  const TorusKernelParams trivial(2, {0.9, 0.0}, 0, {0.0, 0.0});
  CHECK(kernels::verify_inversion(trivial, 12) < 1e-12);

  const TorusKernelParams p(2, {0.9, 0.0}, 0, {0.3, 0.0});
  const double coarse = kernels::verify_inversion(p, 8);
  const double fine = kernels::verify_inversion(p, 32);
  CHECK(fine < coarse);
}

TEST_CASE("exponential convolution identity at quadrature order") {
  const cdouble la{0.9, 0.0}, lb{0.4, 0.0};
  const double e256 = kernels::stream_identity_error(la, lb, 0.3, 0.7, 256);
  const double e4096 = kernels::stream_identity_error(la, lb, 0.3, 0.7, 4096);
  CHECK(e4096 < e256);
  CHECK(e4096 < 1e-3);
  // wrapped displacement branch
  const double w = kernels::stream_identity_error(la, lb, 0.7, 0.3, 4096);
  CHECK(w < 1e-3);
}

TEST_CASE("sine probe rows move toward the limit shape") {
  const double s_vals[] = {0.5, 1.0};
  const int n_vals[] = {8, 24, 64};
  const auto rows = kernels::sine_probe(0.5, s_vals, n_vals);
  REQUIRE(rows.size() == 6);
  // diagnostic only: deviation at the largest n should not exceed the smallest n
  const double dev_small = std::abs(rows[0].kernel_value - rows[0].sine_value);
  const double dev_large = std::abs(rows[4].kernel_value - rows[4].sine_value);
  CHECK(dev_large <= dev_small + 1e-9);
}
