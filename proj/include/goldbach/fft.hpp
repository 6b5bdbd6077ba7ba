#pragma once

// Thin FFTW wrappers. Plans use FFTW_ESTIMATE so the chosen algorithm, and
// therefore every output bit, is the same from run to run.

#include <fftw3.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"

namespace goldbach {

/// In-place DFT, X_k = sum_j x_j exp(-2 pi i jk / n); the inverse applies exp(+...) and 1/n.
inline void fft(std::span<Complex> data, bool inverse = false) {
  const std::size_t n = data.size();
  if (n == 0) return;
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buffer, buffer, inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) throw Error("fft: FFTW could not create a plan");
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : data) x *= scale;
  }
}

/// c[k] = sum_i a[i] b[k - i] for 0 <= k < out_len.
inline std::vector<double> convolve_real(std::span<const double> a, std::span<const double> b,
                                         std::size_t out_len) {
  std::vector<double> out(out_len, 0.0);
  if (a.empty() || b.empty() || out_len == 0) return out;
  const std::size_t full = a.size() + b.size() - 1;
  std::size_t n = 1;
  while (n < full) n <<= 1U;
  const std::size_t bins = n / 2 + 1;
  std::vector<double> ra(n, 0.0), rb(n, 0.0);
  std::copy(a.begin(), a.end(), ra.begin());
  std::copy(b.begin(), b.end(), rb.begin());
  std::vector<Complex> fa(bins), fb(bins);
  auto forward = [n](std::vector<double>& in, std::vector<Complex>& spectrum) {
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                          reinterpret_cast<fftw_complex*>(spectrum.data()),
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw Error("convolve_real: FFTW could not create a plan");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  };
  forward(ra, fa);
  forward(rb, fb);
  for (std::size_t i = 0; i < bins; ++i) fa[i] *= fb[i];
  fftw_plan back = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(fa.data()), ra.data(),
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (back == nullptr) throw Error("convolve_real: FFTW could not create a plan");
  fftw_execute(back);
  fftw_destroy_plan(back);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < std::min(out_len, full); ++k) out[k] = ra[k] * scale;
  return out;
}

}  // namespace goldbach
