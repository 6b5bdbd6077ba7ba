#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "goldbach/special.hpp"

using namespace goldbach;
// Qualified: glibc also exports a ::gamma(double) that returns log|Gamma|.
using goldbach::gamma;

namespace {

void expect_close(Complex got, Complex want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}

}  // namespace

TEST(Gamma, SmallExamples) {
  expect_close(goldbach::gamma(1.0), 1.0, 1e-14);
  expect_close(goldbach::gamma(2.0), 1.0, 1e-14);
  expect_close(goldbach::gamma(0.5), std::sqrt(kPi), 1e-14);
  expect_close(goldbach::gamma(5.0), 24.0, 1e-13);
}

TEST(Gamma, ReferenceValues) {
  expect_close(gamma({0.5, 14.134725}), {-1.445553843760696e-10, -5.522788768774066e-10}, 1e-12);
  expect_close(gamma({3.7, -2.2}), {-1.885026013041873, -0.8497909415945894}, 1e-12);
  expect_close(gamma({-2.5, 0.3}), {-0.6138229974377415, -0.2112326149370418}, 1e-12);
}

TEST(Gamma, MagnitudeFollowsStirling) {
  // |Gamma(1/2 + it)| = sqrt(pi / cosh(pi t)).
  for (double t : {14.134725, 50.0, 120.0, 300.0}) {
    const double log_expected = 0.5 * (std::log(kPi) - kPi * t - std::log1p(std::exp(-2.0 * kPi * t)) + std::log(2.0));
    EXPECT_NEAR(std::log(std::abs(gamma(Complex{0.5, t}))) - log_expected, 0.0, 1e-12) << t;
  }
}

TEST(Gamma, PolesAreReported) {
  for (int n : {0, -1, -7}) {
    try {
      goldbach::gamma(static_cast<double>(n));
      FAIL() << n;
    } catch (const PoleError& e) {
      EXPECT_EQ(e.pole(), n);
    }
  }
  EXPECT_THROW(log_gamma(-3.0), PoleError);
}

TEST(Gamma, OverflowIsAnError) { EXPECT_THROW(goldbach::gamma(200.0), OutOfRange); }

TEST(Gamma, RecurrenceOnRandomPoints) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> radius(0.0, 50.0), angle(-kPi, kPi);
  for (int i = 0; i < 1000; ++i) {
    const Complex s = std::polar(radius(rng), angle(rng));
    if (std::abs(s) < 0.05) continue;
    const Complex lhs = gamma(s + 1.0);
    const Complex rhs = s * gamma(s);
    ASSERT_LE(std::abs(lhs - rhs), 1e-11 * std::abs(lhs)) << s;
  }
}

TEST(LogGamma, LargeImaginaryPart) {
  const Complex v = log_gamma({0.25, 1000.0});
  EXPECT_NEAR(v.real(), -1571.604327073625, 1e-10);
  const double wrapped = std::remainder(v.imag() - 5907.362590317105, kTwoPi);
  EXPECT_NEAR(wrapped, 0.0, 1e-9);
}

TEST(LogGamma, AgreesWithLgammaOnRealAxis) {
  for (double x : {0.1, 0.5, 1.5, 7.25, 30.0, 170.5}) EXPECT_NEAR(log_gamma(x).real(), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
}

TEST(LogGamma, ReflectionRegion) {
  const Complex z{-12.3, 4.0};
  const Complex direct = gamma(z);
  expect_close(std::exp(log_gamma(z)), direct, 1e-11);
}

TEST(Power, Examples) {
  expect_close(power(7.5, 0.0), 1.0, 1e-15);
  expect_close(power(100.0, 0.5), 10.0, 1e-15);
  expect_close(power(10.0, {0.0, 1.0}), {std::cos(std::log(10.0)), std::sin(std::log(10.0))}, 1e-15);
  EXPECT_NEAR(power(10.0, {0.0, 1.0}).real(), -0.66820, 1e-5);
  EXPECT_NEAR(power(10.0, {0.0, 1.0}).imag(), 0.74398, 1e-5);
  EXPECT_THROW(power(0.0, 1.0), InvalidArgument);
  EXPECT_THROW(power(-2.0, 1.0), InvalidArgument);
}

TEST(WKernel, Identities) {
  for (double X : {2.0, 10.0, 1e4}) expect_close(w_kernel(X, 1.0, 1.0), X * X / 2.0, 1e-14);
  expect_close(w_kernel(16.0, 0.5, 0.5), 16.0 * kPi, 1e-14);
  const Complex rho{0.5, 14.134725141734693};
  const double X = 1234.5;
  expect_close(w_kernel(X, rho, 1.0), power(X, rho + 1.0) / (rho * (rho + 1.0)), 1e-12);
}

TEST(WKernel, Singularities) {
  EXPECT_THROW(w_kernel(10.0, 0.0, 1.0), KernelSingularity);
  EXPECT_THROW(w_kernel(10.0, 1.0, -2.0), KernelSingularity);
  EXPECT_THROW(w_kernel(10.0, Complex{0.5, 1.0}, Complex{-0.5, -1.0}), KernelSingularity);
  EXPECT_THROW(w_kernel(0.0, 1.0, 1.0), InvalidArgument);
}

TEST(WKernel, ConjugateSymmetry) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.1, 2.0), im(-200.0, 200.0), xs(2.0, 1e6);
  for (int i = 0; i < 200; ++i) {
    const Complex z{re(rng), im(rng)}, w{re(rng), im(rng)};
    const double X = xs(rng);
    const Complex a = w_kernel(X, std::conj(z), std::conj(w));
    const Complex b = std::conj(w_kernel(X, z, w));
    ASSERT_LE(std::abs(a - b), 1e-12 * std::abs(b));
  }
}

TEST(WKernel, DecaysLikeInverseSquareOrdinate) {
  const double X = 1e4;
  for (double gamma_ord : {100.0, 1000.0, 10000.0}) {
    const Complex w = w_kernel(X, {0.5, gamma_ord}, 1.0);
    const double scaled = std::abs(w) * gamma_ord * gamma_ord / std::pow(X, 1.5);
    EXPECT_NEAR(scaled, 1.0, 2.0 / gamma_ord);
  }
}
