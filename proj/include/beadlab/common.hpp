#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace beadlab {

using cdouble = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Raised on inputs outside an operation's domain (CLI exit code 2).
class domain_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a kernel or determinant is evaluated at a pole.
class pole_error : public domain_error {
public:
  using domain_error::domain_error;
};

/// Raised when an internal numerical consistency check fails
/// (e.g. a sum that must be real comes out with a large imaginary part).
class numeric_error : public domain_error {
public:
  using domain_error::domain_error;
};

/// Raised when an enumeration or rejection budget is exceeded (CLI exit code 3).
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::uint64_t subset_terms = 5'000'000;
  std::uint64_t rejection_trials = 100'000'000;
};

/// Budget for long enumerations; BEAD_LAB_BUDGET overrides both limits.
Budget current_budget();

// ---------------------------------------------------------------------------
// Deterministic RNG.  Streams derived from a 64-bit seed; identical
// (seed, stream) pairs always reproduce identical draws.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded via splitmix64.  Hand-rolled so that draws are
/// bit-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed ^ (0xd1342543de82ef95ULL * (stream + 1));
    for (auto& word : state_) word = splitmix64(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0,1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Exponential with the given rate (rate > 0).
  double exponential(double rate) {
    double u;
    do { u = uniform01(); } while (u >= 1.0);
    return -std::log1p(-u) / rate;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    // Lemire rejection; unbiased.
    while (true) {
      std::uint64_t x = next_u64();
      __uint128_t m = static_cast<__uint128_t>(x) * bound;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= bound || lo >= (-bound) % bound) return static_cast<std::uint64_t>(m >> 64);
    }
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

// ---------------------------------------------------------------------------
// Small dense complex linear algebra (partial-pivot elimination).
// ---------------------------------------------------------------------------

/// Determinant of a dense complex matrix stored row-major; destroys `a`.
cdouble det_inplace(std::vector<cdouble>& a, int n);

/// Binomial coefficient as a double (exact for the n <= 63 range used here).
double binomial(int n, int k);

/// n-th roots of (-1)^{theta2}: angles pi*(2j+theta2)/n, computed per index.
std::vector<cdouble> roots_of_parity(int n, int theta2);

/// Throttled progress reporting to stderr (about 1 Hz); never writes stdout.
class Progress {
public:
  explicit Progress(std::string label, std::uint64_t total);
  void tick(std::uint64_t done);
  void finish();

private:
  std::string label_;
  std::uint64_t total_;
  double last_emit_;
  bool emitted_ = false;
};

}  // namespace beadlab
