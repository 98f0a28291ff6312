#pragma once

#include <cmath>
#include <limits>

#include "beadlab/common.hpp"

namespace beadlab {

/// Complex number stored as (log-modulus, phase).  Exists because terms such
/// as (sin(pi l/n)/sin(pi/n))^{nk} overflow doubles long before the desk-scale
/// parameter range is exhausted.  Multiplication is exact in log space;
/// addition rescales by the larger modulus.
struct LogComplex {
  double log_mod = -std::numeric_limits<double>::infinity();
  double phase = 0.0;  // in (-pi, pi]; zero element keeps phase 0

  static LogComplex zero() { return {}; }

  static LogComplex from_complex(cdouble z) {
    if (z == cdouble(0.0, 0.0)) return zero();
    return {std::log(std::abs(z)), std::arg(z)};
  }

  static LogComplex from_real(double x) {
    if (x == 0.0) return zero();
    return {std::log(std::abs(x)), x > 0 ? 0.0 : kPi};
  }

  static LogComplex from_log_polar(double log_mod, double phase) {
    return {log_mod, wrap_phase(phase)};
  }

  bool is_zero() const { return std::isinf(log_mod) && log_mod < 0; }

  /// May under- or overflow double range; log form stays exact.
  cdouble to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_mod), phase);
  }

  LogComplex operator*(const LogComplex& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return {log_mod + o.log_mod, wrap_phase(phase + o.phase)};
  }

  LogComplex operator/(const LogComplex& o) const {
    return {log_mod - o.log_mod, wrap_phase(phase - o.phase)};
  }

  /// Integer power via exp(e * log): avoids underflow in binary powering.
  LogComplex pow(double e) const {
    if (is_zero()) return e == 0.0 ? from_real(1.0) : zero();
    return {e * log_mod, wrap_phase(e * phase)};
  }

  LogComplex operator+(const LogComplex& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const LogComplex& big = (log_mod >= o.log_mod) ? *this : o;
    const LogComplex& small = (log_mod >= o.log_mod) ? o : *this;
    cdouble s = std::polar(1.0, big.phase) +
                std::polar(std::exp(small.log_mod - big.log_mod), small.phase);
    if (s == cdouble(0.0, 0.0)) return zero();
    return {big.log_mod + std::log(std::abs(s)), std::arg(s)};
  }

  static double wrap_phase(double p) {
    p = std::remainder(p, 2.0 * kPi);
    if (p <= -kPi) p += 2.0 * kPi;
    return p;
  }
};

/// Signed-real collapse of a LogComplex known to be real up to rounding.
struct SignedLog {
  int sign = 0;          // -1, 0, +1
  double log_abs = -std::numeric_limits<double>::infinity();
  double imag_residual = 0.0;  // |Im| / |z| before the collapse

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

inline SignedLog collapse_to_real(const LogComplex& z) {
  SignedLog out;
  if (z.is_zero()) return out;
  const double re = std::cos(z.phase);
  const double im = std::sin(z.phase);
  out.imag_residual = std::abs(im);
  if (re == 0.0) return out;  // sign stays 0; caller checks the residual
  out.sign = re > 0 ? 1 : -1;
  out.log_abs = z.log_mod + std::log(std::abs(re));
  return out;
}

}  // namespace beadlab
