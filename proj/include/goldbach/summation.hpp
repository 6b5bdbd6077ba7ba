#pragma once

#include <cmath>
#include <complex>

namespace goldbach {

/// Neumaier's variant of Kahan summation. Exact for the error of each
/// addition, so sums of many mixed-sign terms keep their low-order bits.
template <typename T>
class CompensatedSum;

template <>
class CompensatedSum<double> {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator-=(double x) { return *this += -x; }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

template <>
class CompensatedSum<std::complex<double>> {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(std::complex<double> init) : re_(init.real()), im_(init.imag()) {}

  CompensatedSum& operator+=(std::complex<double> x) {
    re_ += x.real();
    im_ += x.imag();
    return *this;
  }
  CompensatedSum& operator-=(std::complex<double> x) { return *this += -x; }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

}  // namespace goldbach
