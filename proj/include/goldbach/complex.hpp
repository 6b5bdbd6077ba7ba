#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace goldbach {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// e(x) = exp(2 pi i x), with x reduced mod 1 first so large arguments keep
/// their phase accuracy; exact at the quarter turns.
inline Complex unit_phase(double x) {
  const double frac = x - std::floor(x);
  if (frac == 0.0) return {1.0, 0.0};
  if (frac == 0.5) return {-1.0, 0.0};
  if (frac == 0.25) return {0.0, 1.0};
  if (frac == 0.75) return {0.0, -1.0};
  return std::polar(1.0, kTwoPi * frac);
}

/// exp(2 pi i k / n) for integer k, exact at the quarter turns.
inline Complex root_of_unity(std::int64_t k, std::int64_t n) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace goldbach
