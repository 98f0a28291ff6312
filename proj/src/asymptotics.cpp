#include "beadlab/asymptotics.hpp"

#include <cmath>

#include "beadlab/volumes.hpp"

namespace beadlab {

cdouble AsymptoticParams::q_plus() const {
  return {2.0 * kPi * kPi, 2.0 * kPi * kPi * std::cos(kPi * tau) / std::sin(kPi * tau)};
}

cdouble AsymptoticParams::q_minus() const { return std::conj(q_plus()); }

namespace asym {

double free_energy(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw domain_error("free_energy: tau must be in (0,1)");
  return 1.0 + std::log(std::sin(kPi * tau)) - std::log(kPi);
}

double surface_tension(double g, double tau) {
  if (!(g > 0.0)) throw domain_error("surface_tension: g must be positive");
  if (!(tau > 0.0 && tau < 1.0)) throw domain_error("surface_tension: tau must be in (0,1)");
  return -std::log(g) - std::log(std::sin(kPi * tau)) - 1.0 + std::log(kPi);
}

std::vector<std::int64_t> partition_numbers(int M) {
  if (M < 0) throw domain_error("partition_numbers: M must be nonnegative");
  std::vector<std::int64_t> p(M + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= M; ++m) {
    std::int64_t total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > m && g2 > m) break;
      const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
      if (g1 <= m) total += sign * p[m - g1];
      if (g2 <= m) total += sign * p[m - g2];
    }
    p[m] = total;
  }
  return p;
}

cdouble partition_gf(cdouble s, int M) {
  if (M < 1) throw domain_error("partition_gf: M must be >= 1");
  if (!(std::abs(s) < 1.0)) throw domain_error("partition_gf: need |s| < 1");
  const auto p = partition_numbers(M);
  cdouble acc{0.0, 0.0};
  for (int m = M; m >= 0; --m) acc = acc * s + static_cast<double>(p[m]);
  return acc;
}

double partition_gf_tail_bound(double abs_s, int M) {
  // p(m) grows sub-exponentially; a geometric majorant from the first dropped
  // term is adequate for the |s| <= e^{-2 pi^2 p} range this runs at.
  const auto p = partition_numbers(M + 1);
  const double first = static_cast<double>(p[M + 1]) * std::pow(abs_s, M + 1);
  return first / (1.0 - abs_s);
}

double asymptotic_constant(const AsymptoticParams& params) {
  if (!(params.p > 0.0)) throw domain_error("asymptotic_constant: p must be positive");
  if (!(params.tau > 0.0 && params.tau < 1.0))
    throw domain_error("asymptotic_constant: tau must be in (0,1)");
  const cdouble f_plus = partition_gf(std::exp(-params.p * params.q_plus()),
                                      params.gf_truncation);
  const cdouble f_minus = partition_gf(std::exp(-params.p * params.q_minus()),
                                       params.gf_truncation);
  const cdouble prod = f_plus * f_minus;
  if (std::abs(prod.imag()) > 1e-12 * std::abs(prod))
    throw numeric_error("asymptotic_constant: conjugate factors not real");
  return std::exp(params.p * kPi * kPi / 6.0) / std::sqrt(2.0 * kPi * params.p) *
         prod.real();
}

std::vector<ProbeRow> convergence_probe(const AsymptoticParams& params,
                                        std::span<const int> n_values, int threads) {
  const double target = asymptotic_constant(params);
  const double log_target = std::log(target);
  const double fe_target = free_energy(params.tau);

  std::vector<ProbeRow> rows;
  for (int n : n_values) {
    ProbeRow row;
    row.n = n;
    row.k = static_cast<int>(std::floor(params.p * n));
    row.ell = static_cast<int>(std::floor(params.tau * n));
    if (row.k < 1 || row.ell < 1 || row.ell > n - 1)
      throw domain_error("convergence_probe: k or ell degenerate at n=" + std::to_string(n));
    const int nk = n * row.k;
    const VolumeResult vol =
        volumes::volume_exact({n, row.k, row.ell}, threads);
    if (vol.sign <= 0) throw numeric_error("convergence_probe: nonpositive volume");

    const double log_scale =
        nk * (1.0 + std::log(std::sin(kPi * row.ell / n)) - std::log(kPi));
    row.log_lhs = -log_scale + nk * std::log(double(row.k)) + vol.log_abs;
    row.log_target = log_target;
    row.rel_err_constant = std::abs(std::expm1(row.log_lhs - log_target));
    row.free_energy_lhs = (nk * std::log(double(row.k)) + vol.log_abs) / nk;
    row.free_energy_err = std::abs(row.free_energy_lhs - fe_target);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace asym
}  // namespace beadlab
