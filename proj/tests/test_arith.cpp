#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "goldbach/arith.hpp"
#include "goldbach/characters.hpp"

using namespace goldbach;

namespace {

const MangoldtTable& table10k() {
  static const MangoldtTable t = sieve_mangoldt(10000);
  return t;
}

// Trial-division Lambda(n), independent of the sieve.
double lambda_naive(std::uint64_t n) {
  if (n < 2) return 0.0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

}  // namespace

TEST(Sieve, SmallValues) {
  const auto t = sieve_mangoldt(10);
  EXPECT_EQ(t.limit(), 10u);
  EXPECT_EQ(t[1], 0.0);
  EXPECT_DOUBLE_EQ(t[4], std::log(2.0));
  EXPECT_EQ(t[6], 0.0);
  EXPECT_DOUBLE_EQ(t[9], std::log(3.0));
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= 10; ++n) sum += t[n];
  EXPECT_NEAR(sum, 7.832014180505469, 1e-13);
}

TEST(Sieve, RejectsTinyLimit) {
  EXPECT_THROW(sieve_mangoldt(1), InvalidArgument);
  EXPECT_THROW(sieve_mangoldt(-5), InvalidArgument);
  EXPECT_NO_THROW(sieve_mangoldt(2));
}

TEST(Sieve, MatchesTrialDivisionAcrossSegments) {
  const auto t = sieve_mangoldt(300000);
  for (std::uint64_t n = 1; n <= 300000; n += (n < 5000 ? 1 : 97)) {
    ASSERT_DOUBLE_EQ(t[n], lambda_naive(n)) << n;
  }
  for (std::uint64_t n = 131072 - 20; n <= 131072 + 20; ++n) ASSERT_DOUBLE_EQ(t[n], lambda_naive(n)) << n;
}

TEST(Sieve, DivisorSumIsLogN) {
  const auto& t = table10k();
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    double s = 0.0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      s += t[d];
      if (d * d != n) s += t[n / d];
    }
    const double expected = std::log(static_cast<double>(n));
    ASSERT_NEAR(s, expected, 1e-12 * std::max(1.0, expected)) << n;
  }
}

TEST(Sieve, BinaryRoundTrip) {
  const auto t = sieve_mangoldt(1000);
  std::stringstream buffer;
  t.save(buffer);
  EXPECT_EQ(buffer.str().size(), 8u * 1001u);
  const auto back = MangoldtTable::load(buffer);
  ASSERT_EQ(back.limit(), 1000u);
  for (std::uint64_t n = 0; n <= 1000; ++n) EXPECT_EQ(back[n], t[n]);
}

TEST(Sieve, LoadRejectsTruncatedData) {
  const auto t = sieve_mangoldt(100);
  std::stringstream buffer;
  t.save(buffer);
  std::string data = buffer.str();
  data.resize(data.size() - 8);
  std::stringstream cut(data);
  EXPECT_THROW(MangoldtTable::load(cut), IoError);
}

TEST(Psi, Examples) {
  const auto& t = table10k();
  EXPECT_EQ(psi(t, 1.5), 0.0);
  EXPECT_DOUBLE_EQ(psi(t, 2), std::log(2.0));
  EXPECT_NEAR(psi(t, 100), 94.04531122935739, 1e-12);
  EXPECT_DOUBLE_EQ(psi(t, 10.0), psi(t, 10.999));
  EXPECT_THROW(psi(t, 10001), OutOfRange);
  EXPECT_THROW(psi(t, -1), OutOfRange);
}

TEST(Psi, ProgressionExamples) {
  const auto& t = table10k();
  EXPECT_NEAR(psi_progression(t, 10, 4, 1), std::log(5.0) + std::log(3.0), 1e-14);
  EXPECT_EQ(psi_progression(t, 2, 3, 1), 0.0);
  EXPECT_THROW(psi_progression(t, 10, 4, 2), InvalidResidue);
  EXPECT_THROW(psi_progression(t, 10, 6, 3), InvalidResidue);
  for (double x : {2.0, 17.5, 100.0, 9999.0}) EXPECT_NEAR(psi_progression(t, x, 1, 1), psi(t, x), 1e-10);
}

TEST(Psi, ProgressionsPartitionPsi) {
  const auto& t = table10k();
  for (std::uint64_t q = 1; q <= 30; ++q) {
    const double x = 10000;
    double total = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) == 1) total += psi_progression(t, x, q, static_cast<std::int64_t>(a));
    }
    for (std::uint64_t n = 2; n <= 10000; ++n) {
      if (std::gcd(n, q) != 1) total += t[n];
    }
    EXPECT_NEAR(total, psi(t, x), 1e-9) << q;
  }
}

TEST(Psi, TwistedExamples) {
  const auto& t = table10k();
  EXPECT_NEAR(psi_twisted(t, 10, trivial_character()).real(), 7.832014180505469, 1e-13);
  const auto g4 = build_group(4);
  EXPECT_EQ(psi_twisted(t, 1.5, g4[1]), Complex{});
  const Complex v = psi_twisted(t, 10, g4[1]);
  EXPECT_NEAR(v.real(), std::log(5.0) - std::log(7.0), 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}

TEST(Psi, TwistedIsCharacterCombinationOfProgressions) {
  const auto& t = table10k();
  for (std::uint64_t q : {5u, 7u, 12u}) {
    for (const auto& chi : build_group(q)) {
      Complex combined{};
      for (std::uint64_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) == 1) combined += chi(static_cast<std::int64_t>(a)) * psi_progression(t, 5000, q, a);
      }
      const Complex direct = psi_twisted(t, 5000, chi);
      EXPECT_NEAR(std::abs(direct - combined), 0.0, 1e-9) << chi.label();
    }
  }
}

TEST(Psi, PrincipalTwistDropsPrimesDividingModulus) {
  const auto& t = table10k();
  const auto chi0 = build_group(12).principal();
  double removed = 0.0;
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    if (n % 2 == 0 || n % 3 == 0) removed += t[n];
  }
  EXPECT_NEAR(psi_twisted(t, 3000, chi0).real(), psi(t, 3000) - removed, 1e-9);
}

TEST(PsiMu, Examples) {
  const auto& t = table10k();
  const auto one = trivial_character();
  EXPECT_NEAR(psi_mu(t, 5, 0.5, one).real(), 1.870172091056353, 1e-13);
  for (double mu : {0.25, 0.5, 1.0}) EXPECT_EQ(psi_mu(t, 2, mu, one), Complex{});
  // Strict cutoff: n = 6 is excluded, so this is psi(5).
  EXPECT_NEAR(psi_mu(t, 6, 1.0, one).real(), psi(t, 5), 1e-14);
  EXPECT_NEAR(psi_mu(t, 6, 1.0, one).real(), 4.0943445622221, 1e-12);
  EXPECT_NEAR(psi_mu(t, 6.5, 1.0, one).real(), psi(t, 6.5), 1e-14);
}

TEST(PsiMu, RejectsBadMu) {
  const auto& t = table10k();
  EXPECT_THROW(psi_mu(t, 5, 0.0, trivial_character()), InvalidArgument);
  EXPECT_THROW(psi_mu(t, 5, 1.5, trivial_character()), InvalidArgument);
  EXPECT_THROW(psi_mu(t, 20000, 0.5, trivial_character()), OutOfRange);
}

TEST(PsiMu, MonotoneInXAtMuOne) {
  const auto& t = table10k();
  for (double mu : {1.0}) {
    double previous = 0.0;
    for (double x = 2.0; x <= 400.0; x += 0.37) {
      const double value = psi_mu(t, x, mu, trivial_character()).real();
      ASSERT_GE(value, previous - 1e-12) << x;
      previous = value;
    }
  }
}

TEST(PsiMu, DecreasesBetweenPrimePowersBelowMuOne) {
  // (x - n)^(mu - 1) falls as x grows, so psi_mu dips between prime powers.
  const auto& t = table10k();
  const auto one = trivial_character();
  EXPECT_GT(psi_mu(t, 3.1, 0.5, one).real(), psi_mu(t, 3.9, 0.5, one).real());
}

TEST(Chebyshev, AccumulatorTracksPsi) {
  const auto& t = table10k();
  ChebyshevAccumulator acc(t);
  double previous = 0.0;
  for (double x = 0.0; x <= 10000.0; x += 13.7) {
    const double v = acc.advance_to(x);
    EXPECT_GE(v, previous);
    EXPECT_NEAR(v, psi(t, x), 1e-9);
    previous = v;
  }
  EXPECT_THROW(acc.advance_to(1.0), InvalidArgument);
}
