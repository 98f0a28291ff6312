#include "beadlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "beadlab/asymptotics.hpp"
#include "beadlab/kernels.hpp"
#include "beadlab/mc_oracles.hpp"
#include "beadlab/ring_dynamics.hpp"
#include "beadlab/torus.hpp"
#include "beadlab/volumes.hpp"

namespace beadlab {
namespace verify {

cdouble partition_series_zeta(int n, cdouble zeta, cdouble T, int k_max) {
  cdouble total{0.0, 0.0};
  cdouble t_power{1.0, 0.0};  // T^{nk}
  cdouble t_block{1.0, 0.0};
  for (int i = 0; i < n; ++i) t_block *= T;
  for (int k = 0; k <= k_max; ++k) {
    for (int ell = 0; ell <= n; ++ell) {
      const VolumeResult vol = volumes::volume_exact({n, k, ell});
      if (vol.sign == 0) continue;
      cdouble z_power{1.0, 0.0};
      for (int i = 0; i < ell; ++i) z_power *= zeta;
      total += t_power * z_power * vol.value;
    }
    t_power *= t_block;
  }
  return total;
}

cdouble partition_series(int n, cdouble lambda, cdouble T, int k_max) {
  return partition_series_zeta(n, std::exp(-lambda), T, k_max);
}

cdouble fredholm_truncated(cdouble beta, int theta2, cdouble T, int n, int M) {
  cdouble prod{1.0, 0.0};
  for (const cdouble& z : roots_of_parity(n, theta2)) {
    const cdouble num = 2.0 * beta * T * z + T * T * z * z;
    cdouble factor = 1.0 / (1.0 + T * z / beta);
    for (int m = 0; m <= M; ++m)
      factor *= 1.0 + num / (beta * beta + 4.0 * kPi * kPi * m * m);
    prod *= factor;
  }
  return prod;
}

namespace {

class Recorder {
public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void check(const std::string& name, bool pass, double metric,
             const std::string& detail = "") {
    results_.push_back({suite_, name, pass, metric, detail});
  }

  /// pass iff metric <= bound
  void bound(const std::string& name, double metric, double limit) {
    check(name, metric <= limit, metric, "limit " + std::to_string(limit));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::vector<CheckResult> suite_torus() {
  Recorder rec("torus");
  const int cases[][3] = {{2, 1, 1}, {3, 2, 1}, {4, 2, 2}, {5, 1, 2}, {6, 1, 3}};
  double worst_tilt = 0.0, worst_p = 0.0, worst_q = 0.0;
  bool paths_ok = true, reflect_ok = true, rotate_ok = true;
  for (const auto& c : cases) {
    const int n = c[0], k = c[1], ell = c[2];
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const BeadConfiguration cfg = mc::sample_uniform_config(n, k, ell, seed);
      const int got_ell = torus::occupation_number(cfg);
      worst_tilt = std::max(worst_tilt, std::abs(torus::tilt(cfg) * n - got_ell));
      const auto sums = torus::gap_sums(cfg);
      worst_p = std::max(worst_p, std::abs(sums.p_sum - n));
      worst_q = std::max(worst_q, std::abs(sums.q_sum - got_ell));

      const OccupationPath path = torus::build_occupation_path(cfg);
      Rng rng(seed * 77 + 5);
      for (int s = 0; s < 64; ++s) {
        const double t = rng.uniform01();
        const RingSet via_path = path.state_at(t);
        if (via_path.size() != got_ell) paths_ok = false;
        if (!(via_path == torus::occupied_set_at(cfg, t))) paths_ok = false;
      }

      const BeadConfiguration mirrored = torus::reflect(cfg);
      if (!torus::validate_configuration(mirrored) ||
          torus::occupation_number(mirrored) != n - got_ell)
        reflect_ok = false;

      const BeadConfiguration turned = torus::rotate(cfg, rng.uniform01());
      if (!torus::validate_configuration(turned) ||
          torus::occupation_number(turned) != got_ell)
        rotate_ok = false;
    }
  }
  rec.bound("tilt times n equals occupation number", worst_tilt, 1e-12);
  rec.bound("same-string gaps total the torus measure", worst_p, 1e-12);
  rec.bound("up-string gaps total the occupation number", worst_q, 1e-12);
  rec.check("occupation path constant and pointwise-consistent", paths_ok, paths_ok ? 0 : 1);
  rec.check("reflection flips the occupation number", reflect_ok, reflect_ok ? 0 : 1);
  rec.check("rotation preserves validity and occupation", rotate_ok, rotate_ok ? 0 : 1);
  return rec.take();
}

std::vector<CheckResult> suite_volumes() {
  Recorder rec("volumes");

  double worst_series = 0.0;
  for (int n = 2; n <= 4; ++n)
    for (double lambda : {-1.0, 0.3, 1.0})
      for (double T : {0.1, 0.5, 1.0}) {
        const cdouble prod = volumes::partition_product(n, lambda, T);
        const cdouble series = partition_series(n, lambda, T, 8);
        worst_series = std::max(worst_series, std::abs(prod - series) / std::abs(prod));
      }
  rec.bound("product matches truncated volume series", worst_series, 1e-8);

  bool sign_ok = true;
  double worst_sym = 0.0, worst_centered = 0.0, worst_imag = 0.0;
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k <= 2; ++k)
      for (int ell = 0; ell <= n; ++ell) {
        const VolumeResult direct = volumes::volume_form({n, k, ell}, false);
        worst_imag = std::max(worst_imag, direct.imag_residual);
        const bool should_vanish = k >= 1 && (ell == 0 || ell == n);
        if (should_vanish != (direct.sign == 0) || direct.sign < 0) sign_ok = false;
        if (k >= 1 && !should_vanish) {
          const VolumeResult swapped = volumes::volume_form({n, k, n - ell}, false);
          worst_sym = std::max(worst_sym, std::abs(direct.log_abs - swapped.log_abs));
          volumes::volume_coefficient_extraction({n, k, ell});  // throws on mismatch
        }
      }
  for (int n = 2; n <= 12; ++n)
    for (int k = 0; k <= 2; ++k)
      for (int ell = 1; ell <= n - 1; ++ell) {
        const VolumeResult a = volumes::volume_exact({n, k, ell});
        const VolumeResult b = volumes::volume_exact_centered({n, k, ell});
        worst_centered =
            std::max(worst_centered, std::abs(std::expm1(a.log_abs - b.log_abs)));
        if (a.sign != b.sign) sign_ok = false;
      }
  rec.check("volumes nonnegative, zero exactly at full or empty occupation",
            sign_ok, sign_ok ? 0 : 1);
  rec.bound("ell <-> n-ell symmetry", worst_sym, 1e-10);
  rec.bound("centered subset formula matches", worst_centered, 1e-8);
  rec.bound("imaginary residual of volume sums", worst_imag, 1e-6);

  double worst_fred = 0.0;
  for (int n = 2; n <= 4; ++n)
    for (double lambda : {0.4, 1.1})
      for (double T : {0.2, 0.6})
        for (int t1 = 0; t1 <= 1; ++t1)
          for (int t2 = 0; t2 <= 1; ++t2) {
            const cdouble beta = cdouble(lambda, t1 * kPi);
            const cdouble det = volumes::fredholm_product(beta, t2, T, n);
            const double sgn = ((t1 + 1) * (t2 + n + 1)) % 2 == 0 ? 1.0 : -1.0;
            cdouble front = std::pow(1.0 - std::exp(-beta), n);
            const cdouble lhs = 0.5 * sgn * front * det;
            const cdouble rhs = volumes::partition_theta(n, lambda, T, t1, t2);
            worst_fred = std::max(worst_fred, std::abs(lhs - rhs) / std::abs(rhs));
          }
  rec.bound("sinh-ratio determinant reproduces the theta term", worst_fred, 1e-12);

  double worst_theta_sum = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const cdouble total = volumes::partition_product(n, 0.7, 0.3);
    cdouble sum{0.0, 0.0};
    for (int t1 = 0; t1 <= 1; ++t1)
      for (int t2 = 0; t2 <= 1; ++t2) sum += volumes::partition_theta(n, 0.7, 0.3, t1, t2);
    worst_theta_sum = std::max(worst_theta_sum, std::abs(sum - total) / std::abs(total));
  }
  rec.bound("theta terms sum to the partition function", worst_theta_sum, 1e-13);

  const VolumeResult one_thread = volumes::volume_exact({12, 2, 5}, 1);
  const VolumeResult four_threads = volumes::volume_exact({12, 2, 5}, 4);
  rec.bound("reduction order independent of thread count",
            std::abs(std::expm1(one_thread.log_abs - four_threads.log_abs)), 1e-12);
  return rec.take();
}

std::vector<CheckResult> suite_kernels() {
  Recorder rec("kernels");

  const double t_grid[] = {0.0, -0.45, -0.35, -0.15, -0.05, 0.15, 0.25, 0.35, 0.45, 0.5};
  struct Params {
    int n;
    cdouble beta;
    int theta2;
    cdouble T;
  };
  const Params sets[] = {{2, {0.8, 0.0}, 0, {0.4, 0.0}},
                         {3, {1.1, 0.2}, 1, {0.3, 0.1}},
                         {4, {0.6, 0.0}, 0, {0.5, 0.0}},
                         {5, {0.9, -0.1}, 1, {0.2, 0.0}},
                         {6, {1.3, 0.0}, 0, {0.7, 0.2}}};
  double worst_comp = 0.0;
  for (const auto& s : sets) {
    const TorusKernelParams p(s.n, s.beta, s.theta2, s.T);
    for (double t : t_grid)
      for (int h = 0; h < s.n; ++h) {
        const cdouble u = kernels::kernel_torus(p, Flavor::unoccupied, t, h);
        const cdouble o = kernels::kernel_torus(p, Flavor::occupied, t, h);
        const double indicator = (t == 0.0 && h == 0) ? 1.0 : 0.0;
        worst_comp = std::max(worst_comp, std::abs(u + o - indicator));
      }
  }
  rec.bound("complement kernel is delta minus occupation kernel", worst_comp, 1e-12);

  double worst_imag = 0.0, worst_cont = 0.0, worst_density = 0.0, worst_jump = 0.0;
  for (int n = 2; n <= 12; ++n)
    for (int ell = 1; ell <= n - 1; ++ell) {
      const RingKernelParams p = kernels::root_sets(n, ell);
      const Flavor flavors[] = {Flavor::bead, Flavor::occupied, Flavor::unoccupied};
      for (Flavor a : flavors)
        for (int h = -n + 1; h <= n - 1; ++h) {
          for (double s : {-0.7, -0.2, 0.0, 0.3, 1.1})
            worst_imag = std::max(worst_imag,
                                  std::abs(kernels::kernel_ring(p, a, s, h).imag()));
          const double side = (a == Flavor::occupied) ? -1e-9 : 1e-9;
          worst_cont = std::max(
              worst_cont, std::abs(kernels::kernel_ring(p, a, side, h) -
                                   kernels::kernel_ring(p, a, 0.0, h)));
          if (a == Flavor::bead && h == 1 - n) continue;  // exponent aliases to n
          const cdouble jump = kernels::kernel_jump(p, a, h);
          cdouble expect{0.0, 0.0};
          if (h == (a == Flavor::bead ? 1 : 0))
            expect = (a == Flavor::occupied) ? -1.0 : 1.0;
          worst_jump = std::max(worst_jump, std::abs(jump - expect));
        }
      const double mu_density = ring::chain_exit_rate(n, ell) / n;
      worst_density = std::max(
          {worst_density,
           std::abs(kernels::kernel_ring(p, Flavor::occupied, 0, 0).real() -
                    double(ell) / n),
           std::abs(kernels::kernel_ring(p, Flavor::bead, 0, 0).real() - mu_density),
           std::abs(kernels::kernel_ring(p, Flavor::unoccupied, 0, 0).real() -
                    double(n - ell) / n)});
    }
  rec.bound("ring kernel real on the real-displacement grid", worst_imag, 1e-12);
  rec.bound("one-sided continuity at the origin", worst_cont, 1e-6);
  rec.bound("one-point densities", worst_density, 1e-12);
  rec.bound("branch-sum jump across s=0", worst_jump, 1e-12);

  // all-occupied cross sections reproduce the stationary law
  double worst_stat = 0.0;
  for (int n = 4; n <= 8; ++n)
    for (int ell = 1; ell <= n - 1; ++ell) {
      const RingKernelParams p = kernels::root_sets(n, ell);
      for (const RingSet& state : ring::enumerate_states(n, ell)) {
        std::vector<KernelPoint> pts;
        for (int h : state.members()) pts.push_back({Flavor::occupied, 0.0, h});
        const cdouble det = kernels::mixed_correlation(pts, p);
        worst_stat = std::max(worst_stat,
                              std::abs(det.real() - ring::stationary_prob(state)));
      }
    }
  rec.bound("occupation determinant equals stationary weight", worst_stat, 1e-10);

  // determinant invariance under simultaneous permutation of the points
  {
    const RingKernelParams p = kernels::root_sets(6, 3);
    std::vector<KernelPoint> pts = {{Flavor::occupied, 0.0, 0},
                                    {Flavor::bead, 0.25, 2},
                                    {Flavor::unoccupied, 0.6, 4}};
    const cdouble base = kernels::mixed_correlation(pts, p);
    std::rotate(pts.begin(), pts.begin() + 1, pts.end());
    const cdouble rotated = kernels::mixed_correlation(pts, p);
    rec.bound("mixed determinant permutation invariant", std::abs(base - rotated), 1e-13);
  }
  return rec.take();
}

std::vector<CheckResult> suite_dynamics() {
  Recorder rec("dynamics");

  double worst_exit = 0.0, worst_balance = 0.0, worst_uniform = 0.0, worst_sum = 0.0;
  for (int n = 2; n <= 8; ++n)
    for (int ell = 1; ell <= n - 1; ++ell) {
      const double mu = ring::chain_exit_rate(n, ell);
      const auto states = ring::enumerate_states(n, ell);
      double prob_total = 0.0;
      for (const RingSet& state : states) {
        double out_rate = 0.0;
        for (const auto& m : ring::gordenko_rates(state)) out_rate += m.rate;
        worst_exit = std::max(worst_exit, std::abs(out_rate - mu) / mu);
        prob_total += ring::stationary_prob(state);
      }
      worst_sum = std::max(worst_sum, std::abs(prob_total - 1.0));

      // global balance: pi(E) * total out = sum over sources pi(E'') rate(E''->E)
      for (const RingSet& state : states) {
        double inflow = 0.0;
        for (const RingSet& source : states)
          for (const auto& m : ring::gordenko_rates(source))
            if (m.target == state) inflow += ring::stationary_prob(source) * m.rate;
        const double outflow = ring::stationary_prob(state) * mu;
        worst_balance = std::max(worst_balance, std::abs(inflow - outflow));

        double tasep_in = 0.0;
        for (const RingSet& source : states)
          for (const auto& m : ring::tasep_rates(source))
            if (m.target == state) tasep_in += m.rate;
        double tasep_out = 0.0;
        for (const auto& m : ring::tasep_rates(state)) tasep_out += m.rate;
        worst_uniform = std::max(worst_uniform, std::abs(tasep_in - tasep_out));
      }
    }
  rec.bound("constant exit rate", worst_exit, 1e-10);
  rec.bound("stationary weights sum to one", worst_sum, 1e-10);
  rec.bound("global balance of the chord-square law", worst_balance, 1e-10);
  rec.bound("uniform law balances the exclusion rates", worst_uniform, 1e-10);

  double worst_gen = 0.0;
  for (int n = 2; n <= 10; ++n)
    for (int ell = 1; ell <= n - 1; ++ell)
      worst_gen = std::max(worst_gen, ring::generator_identity_check(n, ell));
  rec.bound("generator eigen-identity for the chord product", worst_gen, 1e-10);

  bool det_ok = true;
  double worst_mod = 0.0;
  Rng rng(20240801);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const int ell = 1 + static_cast<int>(rng.below(std::min(n, 6)));
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < ell; ++i)
      std::swap(pool[i], pool[i + rng.below(n - i)]);
    std::vector<int> tuple(pool.begin(), pool.begin() + ell);
    try {
      const cdouble det = ring::det_root_matrix(tuple, n);
      const double dval = ring::delta(RingSet::from_members(n, tuple));
      worst_mod = std::max(worst_mod, std::abs(std::abs(det) - dval) /
                                          std::max(1.0, dval));
    } catch (const numeric_error&) {
      det_ok = false;
    }
  }
  rec.check("root-matrix determinant identity on random tuples", det_ok, det_ok ? 0 : 1);
  rec.bound("root-matrix modulus equals chord product", worst_mod, 1e-10);

  double worst_rate = 0.0;
  for (int n = 2; n <= 5; ++n)
    for (int ell = 1; ell <= n - 1; ++ell)
      for (const RingSet& state : ring::enumerate_states(n, ell))
        for (const auto& m : ring::gordenko_rates(state)) {
          const double est = ring::rate_from_kernel(state, m.from);
          worst_rate = std::max(worst_rate, std::abs(est - m.rate));
        }
  rec.bound("kernel-differentiated rates match chord ratios", worst_rate, 1e-3);

  // kernel transition probabilities against the uniformised exponential
  {
    const auto states = ring::enumerate_states(4, 2);
    const auto q = ring::rate_matrix(ChainKind::gordenko, states);
    double worst_tp = 0.0, worst_norm = 0.0;
    for (double t : {0.1, 1.0}) {
      const auto pt = ring::transition_matrix_expm(q, int(states.size()), t);
      for (std::size_t i = 0; i < states.size(); ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < states.size(); ++j) {
          const double kern = ring::transition_prob_kernel(states[i], states[j], t);
          worst_tp = std::max(worst_tp, std::abs(kern - pt[i * states.size() + j]));
          row_sum += kern;
        }
        worst_norm = std::max(worst_norm, std::abs(row_sum - 1.0));
      }
    }
    rec.bound("kernel transitions match the matrix exponential", worst_tp, 1e-8);
    rec.bound("kernel transition rows sum to one", worst_norm, 1e-8);
  }

  // unit-mean martingale weight under the non-colliding chain
  {
    const ChainState start(4, RingSet::from_members(4, {0, 2}));
    Welford acc;
    for (std::uint64_t r = 0; r < 10000; ++r) {
      const Trajectory traj = ring::simulate(ChainKind::gordenko, start, 1.0, 900 + r);
      acc.add(ring::martingale_weight(traj, 1.0));
    }
    const double dev = std::abs(acc.mean - 1.0);
    rec.check("martingale weight has unit mean", dev <= 3.0 * acc.std_error(), dev,
              "3se " + std::to_string(3.0 * acc.std_error()));

    // conditional version: restart from reached states over [s, t]
    bool nested_ok = true;
    for (std::uint64_t outer = 0; outer < 5; ++outer) {
      const Trajectory head = ring::simulate(ChainKind::gordenko, start, 0.5, 41 + outer);
      const ChainState mid(4, head.state_at(0.5));
      Welford inner;
      for (std::uint64_t r = 0; r < 3000; ++r) {
        const Trajectory tail =
            ring::simulate(ChainKind::gordenko, mid, 0.5, 7000 + 100 * outer + r);
        inner.add(ring::martingale_weight(tail, 0.5));
      }
      if (std::abs(inner.mean - 1.0) > 3.0 * inner.std_error()) nested_ok = false;
    }
    rec.check("martingale property conditional on the path so far", nested_ok,
              nested_ok ? 0 : 1);

    const Trajectory a = ring::simulate(ChainKind::gordenko, start, 5.0, 123);
    const Trajectory b = ring::simulate(ChainKind::gordenko, start, 5.0, 123);
    const bool same = a.events.size() == b.events.size() &&
                      std::equal(a.events.begin(), a.events.end(), b.events.begin(),
                                 [](const Trajectory::Event& x, const Trajectory::Event& y) {
                                   return x.time == y.time && x.from == y.from;
                                 });
    rec.check("identical seeds give identical trajectories", same, same ? 0 : 1);
  }
  return rec.take();
}

std::vector<CheckResult> suite_mc() {
  Recorder rec("mc");

  const double exact = volumes::volume_exact({3, 1, 2}).value;
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const McEstimate est = mc::volume_mc(3, 1, 2, 100000, seed);
    if (std::abs(est.mean - exact) <= 3.0 * est.std_error) ++covered;
  }
  rec.check("estimator covers the exact volume at 3 sigma", covered >= 19, covered,
            "19 of 20 required");

  const McEstimate lo = mc::volume_mc(4, 1, 1, 200000, 5);
  const McEstimate hi = mc::volume_mc(4, 1, 3, 200000, 5);
  const double joint = std::hypot(lo.std_error, hi.std_error);
  rec.check("ell and n-ell estimates agree within joint 3 sigma",
            std::abs(lo.mean - hi.mean) <= 3.0 * joint, std::abs(lo.mean - hi.mean));

  // merge order must not move the mean
  {
    Rng rng(99);
    std::vector<Welford> parts(8);
    for (int i = 0; i < 4000; ++i) parts[i % 8].add(rng.uniform01());
    Welford forward, backward;
    for (int i = 0; i < 8; ++i) forward.merge(parts[i]);
    for (int i = 7; i >= 0; --i) backward.merge(parts[i]);
    rec.bound("welford merge order stable", std::abs(forward.mean - backward.mean), 1e-12);
  }

  bool sampler_ok = true;
  double worst_q = 0.0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const BeadConfiguration cfg = mc::sample_uniform_config(4, 2, 2, seed);
    if (!torus::validate_configuration(cfg) || torus::occupation_number(cfg) != 2)
      sampler_ok = false;
    worst_q = std::max(worst_q, std::abs(torus::gap_sums(cfg).q_sum - 2.0));
  }
  const BeadConfiguration c1 = mc::sample_uniform_config(5, 1, 2, 31);
  const BeadConfiguration c2 = mc::sample_uniform_config(5, 1, 2, 31);
  sampler_ok = sampler_ok && c1.to_json_text() == c2.to_json_text();
  rec.check("rejection sampler output valid and deterministic", sampler_ok,
            sampler_ok ? 0 : 1);
  rec.bound("sampled configurations have exact occupied length", worst_q, 1e-12);
  return rec.take();
}

std::vector<CheckResult> suite_asymptotics() {
  Recorder rec("asymptotics");

  double worst_rel = 0.0, worst_sym = 0.0, worst_shift = 0.0;
  for (double tau : {0.1, 0.25, 0.5, 0.8}) {
    worst_rel = std::max(worst_rel,
                         std::abs(asym::surface_tension(1.0, tau) + asym::free_energy(tau)));
    worst_sym = std::max(worst_sym, std::abs(asym::surface_tension(1.7, tau) -
                                             asym::surface_tension(1.7, 1.0 - tau)));
    worst_shift = std::max(worst_shift,
                           std::abs(asym::surface_tension(2.0, tau) -
                                    asym::surface_tension(1.0, tau) + std::log(2.0)));
  }
  rec.bound("surface tension at unit gap negates the free energy", worst_rel, 1e-14);
  rec.bound("surface tension symmetric in the tilt", worst_sym, 1e-14);
  rec.bound("surface tension additive in log gap", worst_shift, 1e-14);

  const auto p = asym::partition_numbers(20);
  const std::int64_t pinned[] = {1, 1, 2, 3, 5, 7};
  bool counts_ok = true;
  for (int m = 0; m <= 5; ++m) counts_ok = counts_ok && p[m] == pinned[m];
  counts_ok = counts_ok && p[10] == 42 && p[20] == 627;
  rec.check("partition counts from the pentagonal recurrence", counts_ok,
            counts_ok ? 0 : 1);

  const cdouble plus = asym::partition_gf(std::exp(cdouble(-1.0, 0.7)), 64);
  const cdouble minus = asym::partition_gf(std::exp(cdouble(-1.0, -0.7)), 64);
  rec.bound("conjugate arguments give conjugate series", std::abs(plus - std::conj(minus)),
            1e-14);

  const AsymptoticParams params{1.0, 0.5, 64};
  const double constant = asym::asymptotic_constant(params);
  rec.check("limit constant real and positive", constant > 0, constant);
  const double tail = asym::partition_gf_tail_bound(
      std::abs(std::exp(-params.p * params.q_plus())), params.gf_truncation);
  const double factor_sq =
      std::norm(asym::partition_gf(std::exp(-params.p * params.q_plus()), 64));
  rec.check("generating factors at least the leading term", factor_sq >= 1.0 - 2.0 * tail,
            factor_sq);

  const int ns[] = {8, 12, 16, 20};
  for (double tau : {0.5, 0.25}) {
    const auto rows = asym::convergence_probe({1.0, tau, 64}, ns);
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      decreasing = decreasing && rows[i].rel_err_constant < rows[i - 1].rel_err_constant;
    rec.check("probe error strictly shrinks with n at tilt " + std::to_string(tau),
              decreasing, rows.back().rel_err_constant);
  }
  return rec.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"torus", "volumes", "kernels", "dynamics", "mc", "asymptotics"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "torus") return suite_torus();
  if (name == "volumes") return suite_volumes();
  if (name == "kernels") return suite_kernels();
  if (name == "dynamics") return suite_dynamics();
  if (name == "mc") return suite_mc();
  if (name == "asymptotics") return suite_asymptotics();
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw domain_error("unknown verification suite: " + name);
}

}  // namespace verify
}  // namespace beadlab
