#include "doctest.h"

#include <cmath>

#include "beadlab/asymptotics.hpp"

using namespace beadlab;

TEST_CASE("free energy closed form and symmetry") {
  CHECK(asym::free_energy(0.5) == doctest::Approx(1.0 - std::log(kPi)).epsilon(1e-15));
  CHECK(asym::free_energy(0.3) == doctest::Approx(asym::free_energy(0.7)).epsilon(1e-15));
  CHECK(asym::free_energy(1e-6) < -10.0);
  CHECK_THROWS_AS(asym::free_energy(0.0), domain_error);
  CHECK_THROWS_AS(asym::free_energy(1.0), domain_error);
}

TEST_CASE("surface tension identities") {
  for (double tau : {0.2, 0.5, 0.9}) {
    CHECK(asym::surface_tension(1.0, tau) ==
          doctest::Approx(-asym::free_energy(tau)).epsilon(1e-15));
    CHECK(asym::surface_tension(3.0, tau) - asym::surface_tension(1.0, tau) ==
          doctest::Approx(-std::log(3.0)).epsilon(1e-14));
    CHECK(asym::surface_tension(2.0, tau) ==
          doctest::Approx(asym::surface_tension(2.0, 1.0 - tau)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(asym::surface_tension(0.0, 0.5), domain_error);
}

TEST_CASE("partition counts by the pentagonal recurrence") {
  const auto p = asym::partition_numbers(64);
  const std::int64_t head[] = {1, 1, 2, 3, 5, 7};
  for (int m = 0; m <= 5; ++m) CHECK(p[m] == head[m]);
  CHECK(p[10] == 42);
  CHECK(p[30] == 5604);
  CHECK(p[64] == 1741630);
}

TEST_CASE("generating function basics") {
  CHECK(std::abs(asym::partition_gf({0.0, 0.0}, 8) - cdouble{1.0, 0.0}) < 1e-15);
  const cdouble a = asym::partition_gf(std::exp(cdouble{-2.0, 1.3}), 64);
  const cdouble b = asym::partition_gf(std::exp(cdouble{-2.0, -1.3}), 64);
  CHECK(std::abs(a - std::conj(b)) < 1e-14);
  CHECK_THROWS_AS(asym::partition_gf({1.0, 0.0}, 8), domain_error);
  CHECK_THROWS_AS(asym::partition_gf({0.5, 0.0}, 0), domain_error);
}

TEST_CASE("conjugate exponents with real part 2 pi^2") {
  const AsymptoticParams params{1.0, 0.25, 64};
  CHECK(params.q_plus().real() == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
  CHECK(std::abs(params.q_plus() - std::conj(params.q_minus())) < 1e-14);
  const AsymptoticParams half{1.0, 0.5, 64};
  CHECK(half.q_plus().imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("limit constant at p=1, tau=1/2 assembles in closed form") {
  const AsymptoticParams params{1.0, 0.5, 64};
  const double c = asym::asymptotic_constant(params);
  // generating factors are 1 + e^{-2 pi^2} + ... ~ 1 + 2.7e-9
  const double leading = std::exp(kPi * kPi / 6.0) / std::sqrt(2.0 * kPi);
  CHECK(c == doctest::Approx(leading).epsilon(1e-7));
  CHECK(c > leading);
}

TEST_CASE("probe tables are symmetric under tilt reflection") {
  const int ns[] = {8, 12};
  const auto low = asym::convergence_probe({1.0, 0.25, 64}, ns);
  const auto high = asym::convergence_probe({1.0, 0.75, 64}, ns);
  REQUIRE(low.size() == high.size());
  for (std::size_t i = 0; i < low.size(); ++i) {
    CHECK(low[i].ell + high[i].ell == low[i].n);
    CHECK(low[i].log_lhs == doctest::Approx(high[i].log_lhs).epsilon(1e-10));
    CHECK(low[i].free_energy_lhs ==
          doctest::Approx(high[i].free_energy_lhs).epsilon(1e-10));
  }
}

TEST_CASE("probe rows carry both error measures") {
  const int ns[] = {8};
  const auto rows = asym::convergence_probe({1.0, 0.5, 64}, ns);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].k == 8);
  CHECK(rows[0].ell == 4);
  CHECK(rows[0].rel_err_constant ==
        doctest::Approx(std::abs(std::expm1(rows[0].log_lhs - rows[0].log_target))));
  CHECK(rows[0].free_energy_err ==
        doctest::Approx(std::abs(rows[0].free_energy_lhs - asym::free_energy(0.5))));
}
