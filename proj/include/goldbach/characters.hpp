#pragma once

// Dirichlet characters built from the CRT decomposition of (Z/qZ)*.
//
// Generators: for an odd prime power p^k the smallest primitive root modulo
// p^k; for 2^k (k >= 3) the pair <-1> x <5>, for 4 just <-1>. A character is
// the exponent vector (e_1, ..., e_r) with chi(g_i) = e(e_i / ord(g_i)); the
// factors are ordered by increasing prime, and for p = 2 the -1 factor comes
// first. The index of a character is the lexicographic rank of its exponent
// vector, so index 0 is always the principal character and "q.index" is a
// stable label.

#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"
#include "goldbach/numtheory.hpp"
#include "goldbach/summation.hpp"

namespace goldbach {

/// Structure of (Z/qZ)* as a product of cyclic factors with discrete-log tables.
class UnitGroup {
 public:
  static constexpr std::uint32_t kNotUnit = 0xFFFFFFFFU;

  struct Factor {
    std::uint64_t prime;
    unsigned prime_exponent;
    std::uint64_t prime_power;  // modulus of the local component
    std::uint64_t generator;
    std::uint64_t order;
    std::vector<std::uint32_t> dlog;  // indexed by residue mod prime_power
  };

  explicit UnitGroup(std::uint64_t q) : modulus_(q) {
    if (q == 0) throw InvalidArgument("UnitGroup: modulus must be positive");
    for (const auto& pp : factorize(q)) {
      if (pp.prime == 2) {
        add_two_power(pp.exponent, pp.value);
      } else {
        add_odd_prime_power(pp);
      }
    }
    exponent_ = 1;
    phi_ = 1;
    for (const auto& f : factors_) {
      exponent_ = std::lcm(exponent_, f.order);
      phi_ *= f.order;
    }
  }

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t phi() const { return phi_; }
  /// Exponent of the group: lcm of the factor orders.
  std::uint64_t exponent() const { return exponent_; }
  std::span<const Factor> factors() const { return factors_; }

 private:
  void add_odd_prime_power(const PrimePower& pp) {
    Factor f{pp.prime, pp.exponent, pp.value, smallest_primitive_root(pp.prime, pp.exponent),
             pp.value / pp.prime * (pp.prime - 1), {}};
    f.dlog.assign(pp.value, kNotUnit);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < f.order; ++i) {
      f.dlog[x] = static_cast<std::uint32_t>(i);
      x = mulmod(x, f.generator, pp.value);
    }
    factors_.push_back(std::move(f));
  }

  void add_two_power(unsigned k, std::uint64_t two_k) {
    if (k == 1) return;  // (Z/2Z)* is trivial
    Factor minus_one{2, k, two_k, two_k - 1, 2, std::vector<std::uint32_t>(two_k, kNotUnit)};
    if (k == 2) {
      minus_one.dlog[1] = 0;
      minus_one.dlog[3] = 1;
      factors_.push_back(std::move(minus_one));
      return;
    }
    Factor five{2, k, two_k, 5, two_k / 4, std::vector<std::uint32_t>(two_k, kNotUnit)};
    std::uint64_t x = 1;
    for (std::uint64_t v = 0; v < five.order; ++v) {
      minus_one.dlog[x] = 0;
      five.dlog[x] = static_cast<std::uint32_t>(v);
      const std::uint64_t neg = two_k - x;
      minus_one.dlog[neg] = 1;
      five.dlog[neg] = static_cast<std::uint32_t>(v);
      x = mulmod(x, 5, two_k);
    }
    factors_.push_back(std::move(minus_one));
    factors_.push_back(std::move(five));
  }

  std::uint64_t modulus_;
  std::uint64_t phi_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<Factor> factors_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents)
      : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto factors = group_->factors();
    if (exponents_.size() != factors.size()) {
      throw InvalidArgument("DirichletCharacter: exponent vector does not match the unit group");
    }
    const std::uint64_t q = group_->modulus();
    const std::uint64_t lambda = group_->exponent();
    index_ = 0;
    principal_ = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (exponents_[i] >= factors[i].order) {
        throw InvalidArgument("DirichletCharacter: exponent out of range");
      }
      index_ = index_ * factors[i].order + exponents_[i];
      principal_ = principal_ && exponents_[i] == 0;
    }
    phase_.assign(q, -1);
    values_.assign(q, Complex{0.0, 0.0});
    real_ = true;
    for (std::uint64_t n = 0; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      std::uint64_t k = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::uint64_t local = factors[i].dlog[n % factors[i].prime_power];
        k = (k + mulmod(exponents_[i] * (lambda / factors[i].order) % lambda, local, lambda)) % lambda;
      }
      phase_[n] = static_cast<std::int64_t>(k);
      values_[n] = root_of_unity(static_cast<std::int64_t>(k), static_cast<std::int64_t>(lambda));
      real_ = real_ && (2 * k) % lambda == 0;
    }
    parity_ = (q <= 2 || values_[q - 1].real() > 0.0) ? 0 : 1;
    conductor_ = compute_conductor();
  }

  std::uint64_t modulus() const { return group_->modulus(); }
  std::uint64_t index() const { return index_; }
  std::span<const std::uint64_t> exponents() const { return exponents_; }
  const std::shared_ptr<const UnitGroup>& group() const { return group_; }

  /// chi(n) for any integer n.
  Complex operator()(std::int64_t n) const { return values_[positive_mod(n, modulus())]; }
  /// Value table on 0..q-1 (zero off the unit group).
  std::span<const Complex> values() const { return values_; }
  /// chi(n) = e(phase(n) / exponent); -1 off the unit group.
  std::int64_t phase(std::uint64_t n) const { return phase_[n % modulus()]; }

  bool is_principal() const { return principal_; }
  bool is_real() const { return real_; }
  bool is_primitive() const { return conductor_ == modulus(); }
  std::uint64_t conductor() const { return conductor_; }
  /// 0 if chi(-1) = 1, else 1.
  int parity() const { return parity_; }

  std::string label() const { return std::to_string(modulus()) + "." + std::to_string(index_); }

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::uint64_t compute_conductor() const {
    std::uint64_t conductor = 1;
    const auto factors = group_->factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& f = factors[i];
      if (f.prime != 2) {
        if (exponents_[i] == 0) continue;
        const unsigned j = f.prime_exponent - valuation(exponents_[i], f.prime);
        for (unsigned r = 0; r < j; ++r) conductor *= f.prime;
        continue;
      }
      // The 2-part spans one factor (mod 4) or two consecutive factors.
      if (f.prime_exponent == 2) {
        if (exponents_[i] != 0) conductor *= 4;
        continue;
      }
      const std::uint64_t e1 = exponents_[i];
      const std::uint64_t e2 = exponents_[i + 1];
      if (e2 != 0) {
        const unsigned j = f.prime_exponent - valuation(e2, 2);
        conductor <<= j;
      } else if (e1 != 0) {
        conductor *= 4;
      }
      ++i;
    }
    return conductor;
  }

  std::shared_ptr<const UnitGroup> group_;
  std::vector<std::uint64_t> exponents_;
  std::uint64_t index_ = 0;
  std::vector<Complex> values_;
  std::vector<std::int64_t> phase_;
  bool principal_ = true;
  bool real_ = true;
  int parity_ = 0;
  std::uint64_t conductor_ = 1;
};

class CharacterGroup {
 public:
  explicit CharacterGroup(std::uint64_t q) : group_(std::make_shared<const UnitGroup>(q)) {
    const auto factors = group_->factors();
    std::vector<std::uint64_t> exps(factors.size(), 0);
    characters_.reserve(group_->phi());
    for (std::uint64_t count = 0; count < group_->phi(); ++count) {
      characters_.emplace_back(group_, exps);
      // Odometer with the last factor running fastest: lexicographic order.
      for (std::size_t i = exps.size(); i-- > 0;) {
        if (++exps[i] < factors[i].order) break;
        exps[i] = 0;
      }
    }
  }

  std::uint64_t modulus() const { return group_->modulus(); }
  std::uint64_t phi() const { return group_->phi(); }
  std::size_t size() const { return characters_.size(); }
  const DirichletCharacter& operator[](std::size_t index) const { return characters_.at(index); }
  const DirichletCharacter& principal() const { return characters_.front(); }
  auto begin() const { return characters_.begin(); }
  auto end() const { return characters_.end(); }

  /// Index of the complex conjugate of character `index`.
  std::size_t conjugate_index(std::size_t index) const {
    const auto factors = group_->factors();
    const auto exps = characters_.at(index).exponents();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      rank = rank * factors[i].order + (factors[i].order - exps[i]) % factors[i].order;
    }
    return rank;
  }

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<DirichletCharacter> characters_;
};

inline CharacterGroup build_group(std::uint64_t q) {
  if (q == 0) throw InvalidArgument("build_group: modulus must be positive");
  return CharacterGroup(q);
}

inline DirichletCharacter conjugate(const DirichletCharacter& chi) {
  const auto factors = chi.group()->factors();
  std::vector<std::uint64_t> exps(chi.exponents().begin(), chi.exponents().end());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = (factors[i].order - exps[i]) % factors[i].order;
  return DirichletCharacter(chi.group(), std::move(exps));
}

/// The modulus-1 character, constant 1.
inline DirichletCharacter trivial_character() {
  return DirichletCharacter(std::make_shared<const UnitGroup>(1), {});
}

/// E(chi): 1 for principal characters (including the modulus-1 one), else 0.
inline int principal_indicator(const DirichletCharacter& chi) { return chi.is_principal() ? 1 : 0; }

struct PrimitiveInducer {
  std::uint64_t conductor;
  DirichletCharacter character;
};

/// The primitive character chi* mod q* inducing chi.
inline PrimitiveInducer conductor_and_primitive(const DirichletCharacter& chi) {
  if (chi.is_primitive()) return {chi.modulus(), chi};
  const std::uint64_t conductor = chi.conductor();
  auto target = std::make_shared<const UnitGroup>(conductor);
  const auto factors = chi.group()->factors();
  const auto exps = chi.exponents();
  std::vector<std::uint64_t> reduced;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.prime != 2) {
      if (exps[i] == 0) continue;
      const unsigned v = valuation(exps[i], f.prime);
      const unsigned j = f.prime_exponent - v;
      std::uint64_t pj = 1;
      for (unsigned r = 0; r < j; ++r) pj *= f.prime;
      const std::uint64_t order_j = pj / f.prime * (f.prime - 1);
      const std::uint64_t h = smallest_primitive_root(f.prime, j);
      std::uint64_t shrink = 1;
      for (unsigned r = 0; r < v; ++r) shrink *= f.prime;
      // chi*(h) = chi(h): e' / phi(p^j) = e * dlog_g(h) / phi(p^k).
      const std::uint64_t e = (exps[i] / shrink) % order_j;
      reduced.push_back(mulmod(e, f.dlog[h % f.prime_power], order_j));
      continue;
    }
    if (f.prime_exponent == 2) {
      if (exps[i] != 0) reduced.push_back(exps[i]);
      continue;
    }
    const std::uint64_t e1 = exps[i];
    const std::uint64_t e2 = exps[i + 1];
    if (e2 != 0) {
      const unsigned v = valuation(e2, 2);
      reduced.push_back(e1);
      reduced.push_back(e2 >> v);
    } else if (e1 != 0) {
      reduced.push_back(e1);
    }
    ++i;
  }
  DirichletCharacter primitive(std::move(target), std::move(reduced));
  if (!primitive.is_primitive()) {
    throw TheoremViolation("conductor_and_primitive: reduced character is not primitive (" +
                           primitive.label() + ")");
  }
  return {conductor, std::move(primitive)};
}

/// tau(chi) = sum_{n mod q} chi(n) e(n/q) for primitive chi.
inline Complex gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) {
    throw InvalidArgument("gauss_sum: character " + chi.label() + " is not primitive");
  }
  const auto q = static_cast<std::int64_t>(chi.modulus());
  CompensatedSum<Complex> sum;
  for (std::int64_t n = 0; n < q; ++n) {
    const Complex v = chi(n);
    if (v == Complex{}) continue;
    sum += v * root_of_unity(n, q);
  }
  return sum.value();
}

/// Parses "q.index".
inline DirichletCharacter character_from_label(std::string_view label) {
  const auto dot = label.find('.');
  std::uint64_t q = 0;
  std::uint64_t index = 0;
  auto parse = [&](std::string_view part, std::uint64_t& out) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    return ec == std::errc{} && ptr == part.data() + part.size();
  };
  if (dot == std::string_view::npos || !parse(label.substr(0, dot), q) ||
      !parse(label.substr(dot + 1), index) || q == 0) {
    throw InvalidArgument("character label must look like q.index, got '" + std::string(label) + "'");
  }
  CharacterGroup group(q);
  if (index >= group.size()) {
    throw InvalidArgument("character index out of range in '" + std::string(label) + "'");
  }
  return group[index];
}

}  // namespace goldbach
