#include "beadlab/mc_oracles.hpp"

#include <algorithm>
#include <cmath>

namespace beadlab {
namespace mc {
namespace {

BeadConfiguration draw_config(int n, int k, Rng& rng) {
  BeadConfiguration cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.strings.assign(n, std::vector<double>(k));
  for (auto& s : cfg.strings) {
    for (double& t : s) t = rng.uniform01();
    std::sort(s.begin(), s.end());
  }
  return cfg;
}

bool is_hit(const BeadConfiguration& cfg, int ell) {
  if (!torus::validate_configuration(cfg)) return false;
  return torus::occupied_set_at(cfg, 0.0).size() == ell;
}

}  // namespace

McEstimate volume_mc(int n, int k, int ell, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw domain_error("volume_mc: samples must be positive");
  if (n < 2 || n > 63 || k < 1) throw domain_error("volume_mc: need n in [2,63], k >= 1");
  Rng rng(seed);
  const double log_scale = -n * std::lgamma(k + 1.0);
  const double scale = std::exp(log_scale);

  Welford acc;
  Progress progress("mc volume", samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const BeadConfiguration cfg = draw_config(n, k, rng);
    acc.add(is_hit(cfg, ell) ? scale : 0.0);
    if ((i & 0xfffff) == 0) progress.tick(i);
  }
  progress.finish();

  McEstimate est;
  est.mean = acc.mean;
  est.std_error = acc.std_error();
  est.samples = samples;
  est.seed = seed;
  est.hit_fraction = acc.mean / scale;
  return est;
}

BeadConfiguration sample_uniform_config(int n, int k, int ell, std::uint64_t seed,
                                        std::uint64_t budget) {
  if (n < 2 || n > 63 || k < 1) throw domain_error("sampler: need n in [2,63], k >= 1");
  if (ell < 1 || ell > n - 1) throw domain_error("sampler: need 1 <= ell <= n-1");
  if (budget == 0) budget = current_budget().rejection_trials;
  Rng rng(seed);
  for (std::uint64_t trial = 1; trial <= budget; ++trial) {
    const BeadConfiguration cfg = draw_config(n, k, rng);
    if (is_hit(cfg, ell)) return cfg;
  }
  throw resource_error("sampler: rejection budget exhausted after " +
                       std::to_string(budget) + " trials (acceptance < " +
                       std::to_string(1.0 / double(budget)) + ")");
}

}  // namespace mc
}  // namespace beadlab
