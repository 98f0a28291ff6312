#include "beadlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace beadlab {

Flavor flavor_from_char(char c) {
  switch (c) {
    case 'b': return Flavor::bead;
    case 'o': return Flavor::occupied;
    case 'u': return Flavor::unoccupied;
  }
  throw domain_error("flavor must be one of b, o, u");
}

char flavor_to_char(Flavor f) {
  switch (f) {
    case Flavor::bead: return 'b';
    case Flavor::occupied: return 'o';
    default: return 'u';
  }
}

namespace {

bool near_pole(cdouble w) {
  const double cycles = w.imag() / (2.0 * kPi);
  return std::abs(w.real()) < 1e-12 && std::abs(cycles - std::round(cycles)) < 1e-12;
}

// z^e for |z| = 1 via the phase, stable for the integer exponents used here.
cdouble unit_pow(cdouble z, long e) { return std::polar(1.0, e * std::arg(z)); }

double bracket(double t, Flavor alpha) {
  return t + (t < 0 ? 1.0 : 0.0) + (alpha == Flavor::occupied && t == 0.0 ? 1.0 : 0.0);
}

}  // namespace

TorusKernelParams::TorusKernelParams(int n_, cdouble beta_, int theta2_, cdouble T_)
    : n(n_), beta(beta_), theta2(theta2_), T(T_) {
  if (n < 1) throw domain_error("torus kernel: n must be positive");
  if (theta2 != 0 && theta2 != 1) throw domain_error("torus kernel: theta2 must be 0 or 1");
  if (near_pole(beta)) throw pole_error("torus kernel: beta lies in 2*pi*i*Z");
  roots = roots_of_parity(n, theta2);
  for (const cdouble& z : roots)
    if (near_pole(beta + T * z))
      throw pole_error("torus kernel: beta + T z lies in 2*pi*i*Z");
}

namespace kernels {

RingKernelParams root_sets(int n, int ell) {
  if (n < 2 || ell < 1 || ell > n - 1)
    throw domain_error("root_sets: need n >= 2 and 1 <= ell <= n-1");
  RingKernelParams p;
  p.n = n;
  p.ell = ell;
  p.theta2 = (n + ell + 1) % 2;
  auto roots = roots_of_parity(n, p.theta2);
  std::sort(roots.begin(), roots.end(), [](cdouble a, cdouble b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  // The parity of theta2 guarantees a clean real-part split at index ell.
  if (roots[ell].real() - roots[ell - 1].real() < 1e-12)
    throw numeric_error("root_sets: real-part tie at the split boundary");
  p.left.assign(roots.begin(), roots.begin() + ell);
  p.right.assign(roots.begin() + ell, roots.end());
  for (const auto& part : {p.left, p.right}) {
    cdouble sum = std::accumulate(part.begin(), part.end(), cdouble{0.0, 0.0});
    if (std::abs(sum.imag()) > 1e-9)
      throw numeric_error("root_sets: root set not conjugation-symmetric");
  }
  return p;
}

cdouble kernel_torus(const TorusKernelParams& p, Flavor alpha, double t, long h) {
  if (!(t > -1.0 && t < 1.0)) throw domain_error("kernel_torus: t must lie in (-1,1)");
  const double br = bracket(t, alpha);
  const long e = (alpha == Flavor::bead ? 1 : 0) - h;
  cdouble sum{0.0, 0.0};
  for (const cdouble& z : p.roots) {
    const cdouble w = p.beta + p.T * z;
    sum += unit_pow(z, e) * std::exp(-w * br) / (1.0 - std::exp(-w));
  }
  cdouble out = sum / static_cast<double>(p.n);
  if (alpha == Flavor::bead) out *= p.T;
  if (alpha == Flavor::occupied) out = -out;
  return out;
}

cdouble kernel_ring(const RingKernelParams& p, Flavor alpha, double s, long h) {
  h %= p.n;  // reduced into (-n, n)
  const long e = (alpha == Flavor::bead ? 1 : 0) - h;
  const bool right_branch = (s > 0.0) || (s == 0.0 && alpha != Flavor::occupied);
  const auto& part = right_branch ? p.right : p.left;
  cdouble sum{0.0, 0.0};
  for (const cdouble& z : part) sum += unit_pow(z, e) * std::exp(-z * s);
  cdouble out = sum / static_cast<double>(p.n);
  if (!right_branch) out = -out;
  if (alpha == Flavor::occupied) out = -out;
  return out;
}

namespace {

template <class Kernel>
cdouble correlation_det(std::span<const KernelPoint> pts, Kernel&& kernel) {
  const int N = static_cast<int>(pts.size());
  if (N == 0) throw domain_error("mixed_correlation: need at least one point");
  std::vector<cdouble> a(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      a[i * N + j] = kernel(pts[i].alpha, pts[j].t - pts[i].t, pts[j].h - pts[i].h);
  return det_inplace(a, N);
}

}  // namespace

cdouble mixed_correlation(std::span<const KernelPoint> points, const TorusKernelParams& p) {
  return correlation_det(points, [&](Flavor a, double dt, long dh) {
    return kernel_torus(p, a, dt, dh);
  });
}

cdouble mixed_correlation(std::span<const KernelPoint> points, const RingKernelParams& p) {
  return correlation_det(points, [&](Flavor a, double ds, long dh) {
    return kernel_ring(p, a, ds, dh);
  });
}

cdouble kernel_jump(const RingKernelParams& p, Flavor alpha, long h) {
  h %= p.n;
  const long e = (alpha == Flavor::bead ? 1 : 0) - h;
  cdouble sum{0.0, 0.0};
  for (const cdouble& z : p.left) sum += unit_pow(z, e);
  for (const cdouble& z : p.right) sum += unit_pow(z, e);
  cdouble out = sum / static_cast<double>(p.n);
  if (alpha == Flavor::occupied) out = -out;
  return out;
}

namespace {

// Kernels of the inversion identity on the replicated torus, evaluated at
// displacement (dt, from h to h') for row flavor alpha.
cdouble replica_c(const TorusKernelParams& p, Flavor alpha, int h, int hp, double dt) {
  const int target = (h + (alpha == Flavor::bead ? 1 : 0)) % p.n;
  if (hp != target) return {0.0, 0.0};
  double sign = (alpha == Flavor::occupied) ? -1.0 : 1.0;
  if (p.theta2 == 1 && alpha == Flavor::bead && hp == 0) sign = -sign;
  return sign * std::exp(-p.beta * bracket(dt, alpha)) / (1.0 - std::exp(-p.beta));
}

cdouble replica_j(const TorusKernelParams& p, Flavor alpha, int h, int hp, double dt) {
  const long e = (alpha == Flavor::bead ? 1 : 0) - hp + h;
  const double br = bracket(dt, alpha);
  cdouble sum{0.0, 0.0};
  for (const cdouble& z : p.roots) {
    const cdouble w = p.beta + p.T * z;
    sum += unit_pow(z, e) * std::exp(-w * br) / (1.0 - std::exp(-w));
  }
  cdouble out = sum / static_cast<double>(p.n);
  if (alpha == Flavor::occupied) out = -out;
  return out;
}

}  // namespace

double verify_inversion(const TorusKernelParams& p, int grid) {
  if (grid < 8) throw domain_error("verify_inversion: grid must be >= 8");
  const int M = grid;
  const int D = 3 * p.n * M;
  const Flavor flavors[3] = {Flavor::bead, Flavor::occupied, Flavor::unoccupied};

  auto node = [&](int j) { return (j + 0.5) / M; };
  auto index = [&](int a, int h, int j) { return (a * p.n + h) * M + j; };

  std::vector<cdouble> J(static_cast<std::size_t>(D) * D), C(static_cast<std::size_t>(D) * D);
  for (int a = 0; a < 3; ++a)
    for (int h = 0; h < p.n; ++h)
      for (int j = 0; j < M; ++j) {
        const int row = index(a, h, j);
        for (int hp = 0; hp < p.n; ++hp)
          for (int jp = 0; jp < M; ++jp) {
            const double dt = node(jp) - node(j);
            const cdouble jv = replica_j(p, flavors[a], h, hp, dt);
            const cdouble cv = replica_c(p, flavors[a], h, hp, dt);
            // Neither kernel depends on the column flavor.
            for (int ap = 0; ap < 3; ++ap) {
              J[row * static_cast<std::size_t>(D) + index(ap, hp, jp)] = jv;
              C[row * static_cast<std::size_t>(D) + index(ap, hp, jp)] = cv;
            }
          }
      }

  // residual of J + T*(J o C) - C with the midpoint composition rule
  double residual = 0.0;
  std::vector<cdouble> rowbuf(D);
  for (int r = 0; r < D; ++r) {
    std::fill(rowbuf.begin(), rowbuf.end(), cdouble{0.0, 0.0});
    for (int m = 0; m < D; ++m) {
      const cdouble jv = J[r * static_cast<std::size_t>(D) + m];
      if (jv == cdouble(0.0, 0.0)) continue;
      const cdouble* crow = &C[m * static_cast<std::size_t>(D)];
      for (int c = 0; c < D; ++c) rowbuf[c] += jv * crow[c];
    }
    for (int c = 0; c < D; ++c) {
      const cdouble entry = J[r * static_cast<std::size_t>(D) + c] +
                            p.T * rowbuf[c] / static_cast<double>(M) -
                            C[r * static_cast<std::size_t>(D) + c];
      residual = std::max(residual, std::abs(entry));
    }
  }
  return residual;
}

double stream_identity_error(cdouble lam_a, cdouble lam_b, double t, double tp, int grid) {
  if (grid < 2) throw domain_error("stream check: grid must be >= 2");
  if (std::abs(lam_a - lam_b) < 1e-12)
    throw domain_error("stream check: the two exponents must differ");
  auto res = [](double x) { return x + (x < 0 ? 1.0 : 0.0); };
  cdouble quad{0.0, 0.0};
  for (int j = 0; j < grid; ++j) {
    const double s = (j + 0.5) / grid;
    quad += std::exp(-lam_a * res(s - t)) / (1.0 - std::exp(-lam_a)) *
            std::exp(-lam_b * res(tp - s)) / (1.0 - std::exp(-lam_b));
  }
  quad /= static_cast<double>(grid);
  const cdouble closed =
      (std::exp(-lam_b * res(tp - t)) / (1.0 - std::exp(-lam_b)) -
       std::exp(-lam_a * res(tp - t)) / (1.0 - std::exp(-lam_a))) /
      (lam_a - lam_b);
  return std::abs(quad - closed);
}

std::vector<SineProbeRow> sine_probe(double tau, std::span<const double> s_values,
                                     std::span<const int> n_values) {
  std::vector<SineProbeRow> rows;
  for (int n : n_values) {
    const int ell = static_cast<int>(std::floor(tau * n));
    const RingKernelParams p = root_sets(n, ell);
    const double te = static_cast<double>(ell) / n;  // realised tilt
    for (double s : s_values) {
      const double kv = kernel_ring(p, Flavor::bead, s, 0).real();
      const double sv = (s == 0.0)
                            ? std::sin(kPi * te) / kPi
                            : std::exp(s * std::cos(kPi * te)) *
                                  std::sin(s * std::sin(kPi * te)) / (kPi * s);
      rows.push_back({n, s, kv, sv});
    }
  }
  return rows;
}

}  // namespace kernels
}  // namespace beadlab
