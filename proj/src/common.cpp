#include "beadlab/common.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

namespace beadlab {

Budget current_budget() {
  Budget b;
  if (const char* env = std::getenv("BEAD_LAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) {
      b.subset_terms = v;
      b.rejection_trials = v;
    }
  }
  return b;
}

cdouble det_inplace(std::vector<cdouble>& a, int n) {
  cdouble det(1.0, 0.0);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double m = std::abs(a[r * n + col]);
      if (m > best) {
        best = m;
        pivot = r;
      }
    }
    if (best == 0.0) return {0.0, 0.0};
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = -det;
    }
    const cdouble p = a[col * n + col];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const cdouble f = a[r * n + col] / p;
      if (f == cdouble(0.0, 0.0)) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

std::vector<cdouble> roots_of_parity(int n, int theta2) {
  std::vector<cdouble> roots(n);
  for (int j = 0; j < n; ++j) {
    const double angle = kPi * (2.0 * j + theta2) / n;
    roots[j] = std::polar(1.0, angle);
  }
  return roots;
}

namespace {
double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}
}  // namespace

Progress::Progress(std::string label, std::uint64_t total)
    : label_(std::move(label)), total_(total), last_emit_(now_seconds()) {}

void Progress::tick(std::uint64_t done) {
  const double t = now_seconds();
  if (t - last_emit_ < 1.0) return;
  last_emit_ = t;
  emitted_ = true;
  std::fprintf(stderr, "%s: %llu/%llu\n", label_.c_str(),
               static_cast<unsigned long long>(done),
               static_cast<unsigned long long>(total_));
}

void Progress::finish() {
  if (emitted_) std::fprintf(stderr, "%s: done\n", label_.c_str());
}

}  // namespace beadlab
