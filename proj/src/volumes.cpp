#include "beadlab/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace beadlab {
namespace volumes {
namespace {

std::uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __uint128_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > ~0ULL) return ~0ULL;
  }
  return static_cast<std::uint64_t>(r);
}

// Next bitmask with the same popcount (Gosper); masks ascend numerically.
std::uint64_t next_subset(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(v) + 1));
}

// Subset of given rank in ascending-bitmask order (combinatorial number system).
std::uint64_t unrank_subset(std::uint64_t rank, int m) {
  std::uint64_t mask = 0;
  for (int i = m; i >= 1; --i) {
    int c = i - 1;
    while (binom_u64(c + 1, i) <= rank) ++c;
    mask |= 1ULL << c;
    rank -= binom_u64(c, i);
  }
  return mask;
}

struct ChunkResult {
  double max_log = -std::numeric_limits<double>::infinity();
  cdouble rescaled_sum{0.0, 0.0};
};

enum class SubsetFilter { all, centered };

// Two-pass accumulation of (sum of roots over S)^{power} over size-m subsets.
// Pass 1 finds the maximal log-modulus, pass 2 sums terms rescaled by it.
// Chunks combine in index order, so results are reproducible per thread count.
LogComplex accumulate_subsets(int n, int m, int power, int threads, SubsetFilter filter) {
  const std::uint64_t total = binom_u64(n, m);
  const Budget budget = current_budget();
  if (total > budget.subset_terms)
    throw resource_error("subset enumeration over budget: " + std::to_string(total) +
                         " terms (limit " + std::to_string(budget.subset_terms) + ")");
  if (m == 0) return LogComplex::zero();  // empty root sum, zero to any positive power

  const auto roots = roots_of_parity(n, 0);

  // Per-term log-polar value; false marks a skipped (zero or filtered) term.
  auto term_of = [&](std::uint64_t mask, double& log_mod, double& phase) -> bool {
    cdouble w{0.0, 0.0};
    std::uint64_t bits = mask;
    while (bits) {
      w += roots[__builtin_ctzll(bits)];
      bits &= bits - 1;
    }
    const double mod = std::abs(w);
    if (mod < 1e-9) return false;  // zero root sum contributes nothing
    if (filter == SubsetFilter::centered) {
      // Window [-pi/2n, 3pi/2n) in units of pi/2n.  Root sums can land exactly
      // on a boundary; the tolerance keeps an exact left endpoint inside and
      // an exact right endpoint outside, whichever way rounding tips it.
      const double scaled = std::arg(w) * (2.0 * n) / kPi;
      if (!(scaled >= -1.0 - 1e-9 && scaled < 3.0 - 1e-9)) return false;
    }
    log_mod = power * std::log(mod);
    phase = LogComplex::wrap_phase(power * std::arg(w));
    return true;
  };

  threads = std::max(1, threads);
  const int chunks = static_cast<int>(
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads)));
  std::vector<std::uint64_t> starts(chunks + 1);
  for (int c = 0; c <= chunks; ++c)
    starts[c] = total * static_cast<std::uint64_t>(c) / chunks;

  auto run_pass = [&](bool second_pass, double global_max,
                      std::vector<ChunkResult>& results) {
    auto work = [&](int c) {
      std::uint64_t mask = unrank_subset(starts[c], m);
      ChunkResult r;
      Progress progress("volume enumeration", total);
      for (std::uint64_t i = starts[c]; i < starts[c + 1]; ++i) {
        double lm, ph;
        if (term_of(mask, lm, ph)) {
          if (!second_pass) {
            r.max_log = std::max(r.max_log, lm);
          } else {
            r.rescaled_sum += std::polar(std::exp(lm - global_max), ph);
          }
        }
        if (c == 0 && (i & 0xffff) == 0) progress.tick(i);
        if (i + 1 < starts[c + 1]) mask = next_subset(mask);
      }
      results[c] = r;
    };
    if (chunks == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int c = 0; c < chunks; ++c) pool.emplace_back(work, c);
      for (auto& t : pool) t.join();
    }
  };

  std::vector<ChunkResult> pass1(chunks), pass2(chunks);
  run_pass(false, 0.0, pass1);
  double global_max = -std::numeric_limits<double>::infinity();
  for (const auto& r : pass1) global_max = std::max(global_max, r.max_log);
  if (std::isinf(global_max)) return LogComplex::zero();

  run_pass(true, global_max, pass2);
  cdouble acc{0.0, 0.0};
  for (const auto& r : pass2) acc += r.rescaled_sum;  // fixed chunk order
  if (acc == cdouble(0.0, 0.0)) return LogComplex::zero();
  return LogComplex::from_log_polar(global_max + std::log(std::abs(acc)), std::arg(acc));
}

void check_query(const VolumeQuery& q) {
  if (q.n < 2 || q.n > 63) throw domain_error("volume: n must be in [2,63]");
  if (q.k < 0) throw domain_error("volume: k must be nonnegative");
  if (q.ell < 0 || q.ell > q.n) throw domain_error("volume: ell must be in {0,...,n}");
}

VolumeResult binomial_case(const VolumeQuery& q) {
  VolumeResult r;
  r.value = binomial(q.n, q.ell);
  r.log_abs = std::log(r.value);
  r.sign = 1;
  r.method = "binomial";
  return r;
}

VolumeResult finish_subset_volume(const LogComplex& sum, int sign_exponent, int nk,
                                  double extra_log_factor, std::string method) {
  VolumeResult r;
  r.method = std::move(method);
  const SignedLog collapsed = collapse_to_real(sum);
  r.imag_residual = collapsed.imag_residual;
  if (collapsed.sign != 0 && r.imag_residual > 1e-6)
    throw numeric_error("volume sum: imaginary residual " + std::to_string(r.imag_residual) +
                        " exceeds 1e-6");
  if (collapsed.sign == 0) {
    r.sign = 0;
    r.log_abs = -std::numeric_limits<double>::infinity();
    r.value = 0.0;
    return r;
  }
  const int formula_sign = (sign_exponent % 2 == 0) ? 1 : -1;
  r.sign = formula_sign * collapsed.sign;
  r.log_abs = collapsed.log_abs - std::lgamma(nk + 1.0) + extra_log_factor;
  r.value = r.sign * std::exp(r.log_abs);
  return r;
}

}  // namespace

LogComplex subset_power_sum(int n, int m, int power, int threads) {
  return accumulate_subsets(n, m, power, threads, SubsetFilter::all);
}

VolumeResult volume_form(const VolumeQuery& q, bool complement_side, int threads) {
  check_query(q);
  if (q.k == 0) return binomial_case(q);
  if (q.ell == 0 || q.ell == q.n) {
    VolumeResult r;
    r.method = complement_side ? "exact-complement" : "exact-direct";
    return r;  // empty and full occupation are impossible with beads present
  }
  const int nk = q.n * q.k;
  const int m = complement_side ? q.n - q.ell : q.ell;
  const int sign_exponent = complement_side ? q.k * (q.n + q.ell + 1) : q.k * (q.ell + 1);
  const LogComplex sum = subset_power_sum(q.n, m, nk, threads);
  return finish_subset_volume(sum, sign_exponent, nk, 0.0,
                              complement_side ? "exact-complement" : "exact-direct");
}

VolumeResult volume_exact(const VolumeQuery& q, int threads) {
  check_query(q);
  if (q.k == 0) return binomial_case(q);
  // The two families have the same subset count; per-term cost scales with the
  // subset cardinality, so enumerate the smaller side.
  const bool complement = q.n - q.ell < q.ell;
  return volume_form(q, complement, threads);
}

VolumeResult volume_exact_centered(const VolumeQuery& q, int threads) {
  check_query(q);
  if (q.ell < 1) throw domain_error("volume centered: ell must be >= 1");
  if (q.k == 0) return binomial_case(q);
  if (q.ell == q.n) {
    VolumeResult r;
    r.method = "centered";
    return r;
  }
  const int nk = q.n * q.k;
  const LogComplex sum =
      accumulate_subsets(q.n, q.ell, nk, threads, SubsetFilter::centered);
  return finish_subset_volume(sum, q.k * (q.ell + 1), nk, std::log(double(q.n)),
                              "centered");
}

VolumeResult volume_coefficient_extraction(const VolumeQuery& q, int threads) {
  const VolumeResult direct = volume_form(q, false, threads);
  if (q.k == 0) return direct;
  const VolumeResult comp = volume_form(q, true, threads);
  if (direct.sign != comp.sign ||
      (direct.sign != 0 && std::abs(direct.log_abs - comp.log_abs) > 1e-10))
    throw numeric_error("volume coefficient extraction: subset-family forms disagree");
  return comp;
}

cdouble partition_theta_zeta(int n, cdouble zeta, cdouble T, int theta1, int theta2) {
  if (theta1 != 0 && theta1 != 1) throw domain_error("partition: theta1 must be 0 or 1");
  if (theta2 != 0 && theta2 != 1) throw domain_error("partition: theta2 must be 0 or 1");
  if (n < 1) throw domain_error("partition: n must be positive");
  const double s1 = (theta1 % 2 == 0) ? 1.0 : -1.0;
  const double sgn = ((theta1 + 1) * (theta2 + n + 1)) % 2 == 0 ? 1.0 : -1.0;
  cdouble prod{1.0, 0.0};
  for (const cdouble& z : roots_of_parity(n, theta2)) prod *= std::exp(T * z) - s1 * zeta;
  return 0.5 * sgn * prod;
}

cdouble partition_theta(int n, cdouble lambda, cdouble T, int theta1, int theta2) {
  return partition_theta_zeta(n, std::exp(-lambda), T, theta1, theta2);
}

cdouble partition_product_zeta(int n, cdouble zeta, cdouble T) {
  cdouble total{0.0, 0.0};
  for (int t1 = 0; t1 <= 1; ++t1)
    for (int t2 = 0; t2 <= 1; ++t2) total += partition_theta_zeta(n, zeta, T, t1, t2);
  return total;
}

cdouble partition_product(int n, cdouble lambda, cdouble T) {
  return partition_product_zeta(n, std::exp(-lambda), T);
}

cdouble fredholm_product(cdouble beta, int theta2, cdouble T, int n) {
  if (n < 1) throw domain_error("fredholm: n must be positive");
  const double cycles = beta.imag() / (2.0 * kPi);
  if (std::abs(beta.real()) < 1e-12 && std::abs(cycles - std::round(cycles)) < 1e-12)
    throw pole_error("fredholm: beta lies in 2*pi*i*Z");
  const cdouble denom = std::sinh(beta / 2.0);
  cdouble prod{1.0, 0.0};
  for (const cdouble& z : roots_of_parity(n, theta2))
    prod *= std::sinh((beta + T * z) / 2.0) / denom;
  return prod;
}

}  // namespace volumes
}  // namespace beadlab
