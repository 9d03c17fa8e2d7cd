#ifndef QHOL_SCALAR_HPP
#define QHOL_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

namespace qhol {

using Complex = std::complex<double>;

/// Coefficients whose modulus falls below this are dropped from sparse maps.
inline constexpr double kPruneThreshold = 1e-12;
/// Relative band used for modulus comparisons (W(k) membership, q checks).
inline constexpr double kModulusTolerance = 1e-9;
/// Relative tolerance for series equality and inequality checks.
inline constexpr double kRelativeTolerance = 1e-9;

/// Integer power by repeated squaring; negative exponents invert.
template <typename T>
T ipow(T base, std::int64_t exponent) {
  if (exponent < 0) {
    base = T(1) / base;
    exponent = -exponent;
  }
  T result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

inline bool approx_equal(Complex a, Complex b, double rel_tol = kRelativeTolerance) {
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b)) + kPruneThreshold;
}

inline bool approx_equal(double a, double b, double rel_tol = kRelativeTolerance) {
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b)) + kPruneThreshold;
}

/// a <= b up to a relative band.
inline bool approx_le(double a, double b, double rel_tol = kRelativeTolerance) {
  return a <= b + rel_tol * std::max(std::abs(a), std::abs(b)) + kPruneThreshold;
}

}  // namespace qhol

#endif
