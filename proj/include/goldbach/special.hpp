#pragma once

// Complex Gamma, real-base complex powers and the Beta-weighted kernel
// W(X, z, w) = Gamma(z) Gamma(w) / Gamma(z + w) * X^(z + w) / (z + w).
//
// Accuracy budget: log_gamma to ~1e-15 absolute on its real part for
// |z| <= 1e4 (phase error grows like |z| log|z| * eps beyond that); gamma to
// 12+ significant digits wherever the result is representable.

#include <array>
#include <cmath>
#include <string>

#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"

namespace goldbach {

using ComplexPoint = Complex;

namespace detail {

inline bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline void check_gamma_pole(Complex z, const char* who) {
  if (is_nonpositive_integer(z)) {
    const auto n = static_cast<std::int64_t>(z.real());
    throw PoleError(std::string(who) + ": pole of Gamma at " + std::to_string(n), n);
  }
}

/// B_{2k} / (2k (2k - 1)) for the Stirling series, k = 1..12.
inline constexpr std::array<double, 12> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,         -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0, 77683.0 / 5796.0,   -236364091.0 / 1506960.0};

/// log sin(pi z) without overflow for large |Im z|.
inline Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  const Complex i{0.0, 1.0};
  if (y > 1.0) return -i * kPi * z + std::log(Complex{0.0, 0.5}) + std::log(1.0 - std::exp(kTwoPi * i * z));
  if (y < -1.0) return i * kPi * z + std::log(Complex{0.0, -0.5}) + std::log(1.0 - std::exp(-kTwoPi * i * z));
  return std::log(std::sin(kPi * z));
}

}  // namespace detail

/// log Gamma(z). For Im z != 0 and Re z > -10 this is the branch continuous
/// off the negative real axis; elsewhere only exp(log_gamma) is meaningful.
inline Complex log_gamma(Complex z) {
  detail::check_gamma_pole(z, "log_gamma");
  if (z.real() < -10.0) {
    return std::log(kPi) - detail::log_sin_pi(z) - log_gamma(1.0 - z);
  }
  Complex shift{0.0, 0.0};
  Complex w = z;
  while (std::abs(w) < 16.0) {
    shift += std::log(w);
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  Complex power = inv;
  for (double c : detail::kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(kTwoPi) + series - shift;
}

/// Gamma(z) by the Lanczos approximation (g = 7, 9 terms) with reflection.
inline Complex gamma(Complex z) {
  detail::check_gamma_pole(z, "gamma");
  static constexpr std::array<double, 9> kLanczos = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  Complex result;
  if (std::abs(z) > 100.0 || std::abs(z.imag()) > 100.0) {
    result = std::exp(log_gamma(z));
  } else if (z.real() < 0.5) {
    result = kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  } else {
    const Complex x = z - 1.0;
    Complex acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
    const Complex t = x + 7.5;
    result = std::sqrt(kTwoPi) * std::exp((x + 0.5) * std::log(t) - t) * acc;
  }
  if (!is_finite(result)) throw OutOfRange("gamma: result overflows double precision");
  return result;
}

/// X^s on the principal branch.
inline Complex power(double X, Complex s) {
  if (!(X > 0.0)) throw InvalidArgument("power: base must be positive");
  const Complex result = std::exp(s * std::log(X));
  if (!is_finite(result)) throw OutOfRange("power: result overflows double precision");
  return result;
}

/// W(X, z, w), evaluated in log space so large |Im| does not underflow early.
inline Complex w_kernel(double X, Complex z, Complex w) {
  if (!(X > 0.0)) throw InvalidArgument("w_kernel: X must be positive");
  const Complex sum = z + w;
  if (detail::is_nonpositive_integer(z) || detail::is_nonpositive_integer(w) ||
      detail::is_nonpositive_integer(sum)) {
    throw KernelSingularity("w_kernel: z, w or z + w is a pole of Gamma");
  }
  const Complex log_value = log_gamma(z) + log_gamma(w) - log_gamma(sum) + sum * std::log(X);
  const Complex result = std::exp(log_value) / sum;
  if (!is_finite(result)) throw OutOfRange("w_kernel: result overflows double precision");
  return result;
}

}  // namespace goldbach
