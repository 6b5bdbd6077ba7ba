#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "goldbach/error.hpp"

namespace goldbach {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value;  // prime^exponent
};

/// Trial division; moduli in this library are small.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// p-adic valuation of n > 0.
inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Smallest primitive root modulo the odd prime power p^k.
inline std::uint64_t smallest_primitive_root(std::uint64_t p, unsigned k) {
  if (p == 2) throw InvalidArgument("smallest_primitive_root: p must be odd");
  std::uint64_t pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  const std::uint64_t order = pk / p * (p - 1);
  std::vector<std::uint64_t> cofactors;
  for (const auto& f : factorize(order)) cofactors.push_back(order / f.prime);
  for (std::uint64_t g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (auto c : cofactors) {
      if (powmod(g, c, pk) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw InvalidArgument("smallest_primitive_root: no primitive root found");
}

inline std::uint64_t positive_mod(std::int64_t n, std::uint64_t q) {
  const auto m = static_cast<std::int64_t>(q);
  const std::int64_t r = n % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace goldbach
