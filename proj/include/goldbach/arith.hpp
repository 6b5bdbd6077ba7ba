#pragma once

// Von Mangoldt sieve and Chebyshev-type sums.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "goldbach/characters.hpp"
#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"
#include "goldbach/summation.hpp"

namespace goldbach {

/// Lambda(n) for 0 <= n <= limit (Lambda(0) = Lambda(1) = 0) with the running
/// sums psi(n) alongside.
class MangoldtTable {
 public:
  MangoldtTable(std::uint64_t limit, std::vector<double> values)
      : limit_(limit), values_(std::move(values)) {
    if (values_.size() != limit_ + 1) throw InvalidArgument("MangoldtTable: size does not match limit");
    prefix_.resize(values_.size());
    CompensatedSum<double> running;
    for (std::size_t n = 0; n < values_.size(); ++n) {
      running += values_[n];
      prefix_[n] = running.value();
    }
  }

  std::uint64_t limit() const { return limit_; }
  double operator[](std::uint64_t n) const { return values_[n]; }
  std::span<const double> values() const { return values_; }
  /// psi(n) = sum_{m <= n} Lambda(m).
  double prefix(std::uint64_t n) const { return prefix_[n]; }

  /// Binary layout: u64 limit, then Lambda(1..limit) as f64, all little-endian.
  void save(std::ostream& out) const {
    write_u64(out, limit_);
    for (std::uint64_t n = 1; n <= limit_; ++n) write_u64(out, std::bit_cast<std::uint64_t>(values_[n]));
    if (!out) throw IoError("MangoldtTable::save: write failed");
  }

  static MangoldtTable load(std::istream& in) {
    const std::uint64_t limit = read_u64(in);
    if (!in || limit < 2 || limit > (std::uint64_t{1} << 33)) {
      throw IoError("MangoldtTable::load: bad header");
    }
    std::vector<double> values(limit + 1, 0.0);
    for (std::uint64_t n = 1; n <= limit; ++n) values[n] = std::bit_cast<double>(read_u64(in));
    if (!in) throw IoError("MangoldtTable::load: truncated table");
    return MangoldtTable(limit, std::move(values));
  }

 private:
  static void write_u64(std::ostream& out, std::uint64_t v) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(bytes), 8);
  }
  static std::uint64_t read_u64(std::istream& in) {
    unsigned char bytes[8] = {};
    in.read(reinterpret_cast<char*>(bytes), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return v;
  }

  std::uint64_t limit_;
  std::vector<double> values_;
  std::vector<double> prefix_;
};

/// Segmented Eratosthenes: only primes up to sqrt(limit) are kept while marking.
inline MangoldtTable sieve_mangoldt(std::int64_t limit_in) {
  if (limit_in < 2) throw InvalidArgument("sieve_mangoldt: limit must be at least 2");
  const auto limit = static_cast<std::uint64_t>(limit_in);
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;

  std::vector<std::uint64_t> base_primes;
  {
    std::vector<bool> composite(root + 1, false);
    for (std::uint64_t p = 2; p <= root; ++p) {
      if (composite[p]) continue;
      base_primes.push_back(p);
      for (std::uint64_t m = p * p; m <= root; m += p) composite[m] = true;
    }
  }

  std::vector<double> values(limit + 1, 0.0);
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 17;
  std::vector<unsigned char> marked(kSegment);
  for (std::uint64_t low = 2; low <= limit; low += kSegment) {
    const std::uint64_t high = std::min(low + kSegment - 1, limit);
    std::fill(marked.begin(), marked.end(), 0);
    for (const auto p : base_primes) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t m = start; m <= high; m += p) marked[m - low] = 1;
    }
    for (std::uint64_t n = low; n <= high; ++n) {
      if (!marked[n - low]) values[n] = std::log(static_cast<double>(n));
    }
  }
  for (const auto p : base_primes) {
    const double log_p = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p * p; pk <= limit; pk *= p) {
      values[pk] = log_p;
      if (pk > limit / p) break;
    }
  }
  return MangoldtTable(limit, std::move(values));
}

namespace detail {

inline std::uint64_t checked_floor(const MangoldtTable& table, double x, const char* who) {
  if (!(x >= 0.0) || x > static_cast<double>(table.limit())) {
    throw OutOfRange(std::string(who) + ": argument outside [0, table limit]");
  }
  return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace detail

/// Streaming psi(x): feed nondecreasing x.
class ChebyshevAccumulator {
 public:
  explicit ChebyshevAccumulator(const MangoldtTable& table) : table_(&table) {}

  double advance_to(double x) {
    const auto top = detail::checked_floor(*table_, x, "ChebyshevAccumulator");
    if (x < x_) throw InvalidArgument("ChebyshevAccumulator: x must be nondecreasing");
    for (; next_ <= top; ++next_) sum_ += (*table_)[next_];
    x_ = x;
    return value();
  }
  double x() const { return x_; }
  double value() const { return sum_.value(); }

 private:
  const MangoldtTable* table_;
  std::uint64_t next_ = 1;
  double x_ = 0.0;
  CompensatedSum<double> sum_;
};

/// psi(x) = sum_{n <= x} Lambda(n); the integer x itself is included.
inline double psi(const MangoldtTable& table, double x) {
  return table.prefix(detail::checked_floor(table, x, "psi"));
}

inline double psi_progression(const MangoldtTable& table, double x, std::uint64_t q, std::int64_t a) {
  if (q == 0) throw InvalidArgument("psi_progression: modulus must be positive");
  const std::uint64_t r = positive_mod(a, q);
  if (std::gcd(r, q) != 1) throw InvalidResidue("psi_progression: gcd(a, q) != 1");
  const auto top = detail::checked_floor(table, x, "psi_progression");
  CompensatedSum<double> sum;
  for (std::uint64_t n = (r == 0 ? q : r); n <= top; n += q) sum += table[n];
  return sum.value();
}

inline Complex psi_twisted(const MangoldtTable& table, double x, const DirichletCharacter& chi) {
  const auto top = detail::checked_floor(table, x, "psi_twisted");
  CompensatedSum<Complex> sum;
  for (std::uint64_t n = 2; n <= top; ++n) {
    if (table[n] != 0.0) sum += chi(static_cast<std::int64_t>(n)) * table[n];
  }
  return sum.value();
}

/// psi_mu(x, chi) = sum_{n < x} chi(n) Lambda(n) (x - n)^(mu - 1); strict cutoff.
inline Complex psi_mu(const MangoldtTable& table, double x, double mu, const DirichletCharacter& chi) {
  if (!(mu > 0.0 && mu <= 1.0)) throw InvalidArgument("psi_mu: mu must lie in (0, 1]");
  detail::checked_floor(table, x, "psi_mu");
  CompensatedSum<Complex> sum;
  for (std::uint64_t n = 2; static_cast<double>(n) < x; ++n) {
    if (table[n] == 0.0) continue;
    const double weight = mu == 1.0 ? 1.0 : std::pow(x - static_cast<double>(n), mu - 1.0);
    sum += chi(static_cast<std::int64_t>(n)) * (table[n] * weight);
  }
  return sum.value();
}

}  // namespace goldbach
