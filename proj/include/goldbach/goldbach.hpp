#pragma once

// The two-progression representation function R(n, q1, a1, q2, a2), its
// prefix sums, and the assembled asymptotic formula
//   sum_{n <= X} R = (X^2/2 - G(X,q1,a1) - G(X,q2,a2) + H(X)) / (phi(q1) phi(q2)) + E(X).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "goldbach/arith.hpp"
#include "goldbach/characters.hpp"
#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"
#include "goldbach/fft.hpp"
#include "goldbach/lfun.hpp"
#include "goldbach/special.hpp"
#include "goldbach/summation.hpp"

namespace goldbach {

/// (q, a) with gcd(a, q) = 1; `a` is kept reduced to [0, q).
struct ResidueClass {
  std::uint64_t q = 1;
  std::uint64_t a = 0;

  ResidueClass() = default;
  ResidueClass(std::uint64_t modulus, std::int64_t residue) : q(modulus) {
    if (modulus == 0) throw InvalidArgument("ResidueClass: modulus must be positive");
    a = positive_mod(residue, modulus);
    if (std::gcd(a, q) != 1) {
      throw InvalidResidue("ResidueClass: gcd(" + std::to_string(residue) + ", " + std::to_string(q) + ") != 1");
    }
  }

  bool contains(std::uint64_t n) const { return n % q == a; }
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

struct ClassPair {
  ResidueClass first;
  ResidueClass second;
};

class RepresentationTable {
 public:
  RepresentationTable(ClassPair classes, std::vector<double> values) : classes_(classes), values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("RepresentationTable: empty value array");
    prefix_.resize(values_.size());
    CompensatedSum<double> running;
    for (std::size_t n = 0; n < values_.size(); ++n) {
      running += values_[n];
      prefix_[n] = running.value();
    }
  }

  std::uint64_t limit() const { return values_.size() - 1; }
  const ClassPair& classes() const { return classes_; }
  double operator[](std::uint64_t n) const { return values_.at(n); }
  std::span<const double> values() const { return values_; }

  /// sum_{n <= x} R(n), taken at floor(x).
  double prefix(double x) const {
    if (!(x >= 0.0) || x > static_cast<double>(limit())) {
      throw OutOfRange("RepresentationTable::prefix: x outside [0, limit]");
    }
    return prefix_[static_cast<std::size_t>(std::floor(x))];
  }

 private:
  ClassPair classes_;
  std::vector<double> values_;
  std::vector<double> prefix_;
};

namespace detail {

inline std::uint64_t checked_limit(const MangoldtTable& table, std::int64_t X, const char* who) {
  if (X < 0 || static_cast<std::uint64_t>(X) > table.limit()) {
    throw OutOfRange(std::string(who) + ": X must lie in [0, table limit]");
  }
  return static_cast<std::uint64_t>(X);
}

inline std::vector<double> restricted_lambda(const MangoldtTable& table, const ResidueClass& c, std::uint64_t X) {
  std::vector<double> out(X + 1, 0.0);
  for (std::uint64_t n = c.a == 0 ? c.q : c.a; n <= X; n += c.q) out[n] = table[n];
  return out;
}

}  // namespace detail

/// R(n) for n <= X by the double sum over prime powers.
inline RepresentationTable representation_direct(const MangoldtTable& table, const ClassPair& classes, std::int64_t X) {
  const auto top = detail::checked_limit(table, X, "representation_direct");
  std::vector<std::uint64_t> left, right;
  for (std::uint64_t m = 2; m <= top; ++m) {
    if (table[m] == 0.0) continue;
    if (classes.first.contains(m)) left.push_back(m);
    if (classes.second.contains(m)) right.push_back(m);
  }
  std::vector<CompensatedSum<double>> sums(top + 1);
  for (auto m1 : left) {
    for (auto m2 : right) {
      if (m1 + m2 > top) break;
      sums[m1 + m2] += table[m1] * table[m2];
    }
  }
  std::vector<double> values(top + 1, 0.0);
  for (std::uint64_t n = 0; n <= top; ++n) values[n] = sums[n].value();
  return RepresentationTable(classes, std::move(values));
}

/// R(n) for n <= X by FFT convolution. Nonzero values of R are at least
/// (log 2)^2, so anything below 0.1 is rounding noise and is set to 0.
inline RepresentationTable representation_fft(const MangoldtTable& table, const ClassPair& classes, std::int64_t X) {
  const auto top = detail::checked_limit(table, X, "representation_fft");
  const auto a = detail::restricted_lambda(table, classes.first, top);
  const auto b = detail::restricted_lambda(table, classes.second, top);
  auto values = convolve_real(a, b, top + 1);
  for (auto& v : values) {
    if (v < 0.1) v = 0.0;
  }
  return RepresentationTable(classes, std::move(values));
}

/// sum_{n <= X} sum_{k1 + k2 = n} chi1(k1) Lambda(k1) chi2(k2) Lambda(k2), directly.
inline Complex twisted_representation_sum(const MangoldtTable& table, const DirichletCharacter& chi1,
                                          const DirichletCharacter& chi2, std::int64_t X) {
  const auto top = detail::checked_limit(table, X, "twisted_representation_sum");
  std::vector<std::uint64_t> support;
  for (std::uint64_t m = 2; m <= top; ++m) {
    if (table[m] != 0.0) support.push_back(m);
  }
  CompensatedSum<Complex> sum;
  for (auto k1 : support) {
    const Complex w1 = chi1(static_cast<std::int64_t>(k1)) * table[k1];
    if (w1 == Complex{}) continue;
    for (auto k2 : support) {
      if (k1 + k2 > top) break;
      sum += w1 * chi2(static_cast<std::int64_t>(k2)) * table[k2];
    }
  }
  return sum.value();
}

/// Zero sets keyed by primitive character, all at one height. In computing
/// mode missing sets are produced on demand (and cached on disk when a
/// directory is given); otherwise every set must be inserted up front.
class ZeroBank {
 public:
  struct Options {
    double height = 1000.0;
    std::int64_t real_grid = 10000;
    bool compute_missing = true;
    std::optional<std::filesystem::path> cache_dir;
    std::ostream* log = nullptr;
  };

  explicit ZeroBank(Options options) : options_(std::move(options)) {
    detail::check_height(options_.height, "ZeroBank");
  }

  double height() const { return options_.height; }

  void insert(const DirichletCharacter& chi, ZeroSet set) {
    if (set.height != options_.height) {
      throw ConfigurationError("ZeroBank::insert: zero set for " + chi.label() + " has height " +
                               std::to_string(set.height) + ", bank height is " + std::to_string(options_.height));
    }
    critical_[key(chi)] = std::move(set);
  }

  /// Adds a real zero beta (synthetic, for exercising the real-zero terms).
  void inject_real_zero(const DirichletCharacter& chi, double beta) {
    if (!(beta >= 0.5 && beta < 1.0)) throw InvalidArgument("inject_real_zero: beta must lie in [1/2, 1)");
    auto& list = real_zeros(chi);
    list.push_back({chi.label(), ZeroKind::real, 0.0, beta, 0.0});
  }

  /// Zeros 0 < gamma <= height of L(s, chi).
  const ZeroSet& critical(const DirichletCharacter& chi) {
    const std::string k = key(chi);
    if (auto it = critical_.find(k); it != critical_.end()) return it->second;
    if (!options_.compute_missing) {
      throw ConfigurationError("no zero set for " + chi.label() + " (primitive " + k + ") at height " +
                               std::to_string(options_.height));
    }
    return critical_.emplace(k, load_or_compute(chi)).first->second;
  }

  /// Real zeros beta in [1/2, 1) of L(s, chi): scanned for real chi, empty
  /// for complex chi, plus anything injected.
  std::vector<Zero>& real_zeros(const DirichletCharacter& chi) {
    const std::string k = key(chi);
    if (auto it = real_.find(k); it != real_.end()) return it->second;
    std::vector<Zero> found;
    if (chi.is_real()) {
      std::vector<Zero> below;
      found = scan_real_zeros(chi, options_.real_grid, &below);
      for (const auto& z : below) {
        say("real zero below 1/2 (informational): " + chi.label() + " beta = " + format(z.real_position));
      }
      for (const auto& z : found) say("real zero: " + chi.label() + " beta = " + format(z.real_position));
    }
    return real_.emplace(k, std::move(found)).first->second;
  }

  /// Every nontrivial zero of L(s, chi) up to height: critical zeros with
  /// both signs of gamma (the negative ones from conj(chi)) and real zeros.
  std::vector<Complex> all_zeros(const DirichletCharacter& chi) {
    std::vector<Complex> out;
    for (const auto& z : critical(chi).zeros) out.emplace_back(0.5, z.ordinate);
    for (const auto& z : critical(conjugate(chi)).zeros) out.emplace_back(0.5, -z.ordinate);
    for (const auto& z : real_zeros(chi)) out.emplace_back(z.real_position, 0.0);
    return out;
  }

 private:
  static std::string key(const DirichletCharacter& chi) {
    return conductor_and_primitive(chi).character.label();
  }

  static std::string format(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
  }

  void say(const std::string& line) const {
    if (options_.log != nullptr) *options_.log << line << "\n";
  }

  ZeroSet load_or_compute(const DirichletCharacter& chi) {
    const auto inducer = conductor_and_primitive(chi).character;
    std::optional<std::filesystem::path> file;
    if (options_.cache_dir) {
      file = *options_.cache_dir / ("zeros_" + std::to_string(inducer.modulus()) + "_" +
                                    std::to_string(inducer.index()) + ".txt");
      if (auto cached = read_cache(*file, inducer)) return *cached;
    }
    ZeroSet set = find_critical_zeros(inducer, options_.height);
    say("computed " + std::to_string(set.zeros.size()) + " zeros of " + inducer.label() + " up to height " +
        format(options_.height));
    if (file) {
      std::error_code ec;
      std::filesystem::create_directories(file->parent_path(), ec);
      std::ofstream out(*file);
      if (!out) throw IoError("cannot write zero cache '" + file->string() + "'");
      write_zero_table(out, set);
      if (!out) throw IoError("cannot write zero cache '" + file->string() + "'");
    }
    return set;
  }

  std::optional<ZeroSet> read_cache(const std::filesystem::path& file, const DirichletCharacter& inducer) const {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    double height = -1.0;
    long long count = -1;
    if (std::sscanf(second.c_str(), "# height %lf count %lld", &height, &count) != 2 ||
        first != "# character " + inducer.label()) {
      say("zero cache " + file.string() + " has an unreadable header, recomputing");
      return std::nullopt;
    }
    if (height != options_.height) {
      say("zero cache " + file.string() + " is for height " + format(height) + ", wanted " +
          format(options_.height) + "; invalidated");
      return std::nullopt;
    }
    in.seekg(0);
    ZeroSet set = read_zero_table(in, inducer);
    if (static_cast<long long>(set.zeros.size()) != count) {
      say("zero cache " + file.string() + " lists " + std::to_string(set.zeros.size()) + " zeros but claims " +
          std::to_string(count) + "; invalidated");
      return std::nullopt;
    }
    set.height = height;
    set.count_certificate = count;
    set.source = ZeroSource::computed;
    say("loaded " + std::to_string(set.zeros.size()) + " zeros of " + inducer.label() + " from " + file.string());
    return set;
  }

  Options options_;
  std::map<std::string, ZeroSet> critical_;
  std::map<std::string, std::vector<Zero>> real_;
};

struct GTerm {
  Complex value;
  double tail_bound = 0.0;  // estimate of the neglected |gamma| > T part
};

namespace detail {

/// W(X, rho, kappa), using X^(rho+1) / (rho (rho+1)) when kappa = 1.
inline Complex w_at(double X, Complex rho, double kappa) {
  if (kappa == 1.0) return power(X, rho + 1.0) / (rho * (rho + 1.0));
  return w_kernel(X, rho, kappa);
}

/// Sum over |gamma| > T of |W(X, rho, kappa)| for one character of conductor
/// q*, using |W| ~ Gamma(kappa) X^(1/2+kappa) |gamma|^(-1-kappa) and zero
/// density log(q* t / 2 pi) / (2 pi) for each sign of gamma.
inline double zero_sum_tail(double X, double kappa, double T, std::uint64_t conductor) {
  if (T <= 0.0) return std::numeric_limits<double>::infinity();
  const double log_term = std::max(0.0, std::log(static_cast<double>(conductor) * T / kTwoPi));
  return std::tgamma(kappa) * std::pow(X, 0.5 + kappa) * std::pow(T, -kappa) * (log_term / kappa + 1.0 / (kappa * kappa)) /
         kPi;
}

inline Complex g_character(double X, const std::vector<Complex>& zeros, double kappa) {
  CompensatedSum<Complex> sum;
  for (const Complex& rho : zeros) sum += w_at(X, rho, kappa);
  return sum.value();
}

}  // namespace detail

/// G^kappa(X, chi) = sum over the nontrivial zeros of W(X, rho, kappa).
inline Complex g_term_character(double X, const DirichletCharacter& chi, ZeroBank& bank, double kappa = 1.0) {
  return detail::g_character(X, bank.all_zeros(chi), kappa);
}

/// G^kappa(X, q, a) = sum_{chi mod q} conj(chi(a)) G^kappa(X, chi), with a
/// tail estimate for the zeros above the bank height.
inline GTerm g_term(double X, const ResidueClass& c, ZeroBank& bank, double kappa = 1.0) {
  if (!(kappa > 0.0)) throw InvalidArgument("g_term: kappa must be positive");
  GTerm out;
  CompensatedSum<Complex> sum;
  for (const auto& chi : build_group(c.q)) {
    sum += std::conj(chi(static_cast<std::int64_t>(c.a))) * g_term_character(X, chi, bank, kappa);
    out.tail_bound += detail::zero_sum_tail(X, kappa, bank.height(), chi.conductor());
  }
  out.value = sum.value();
  return out;
}

/// H(X) for the pair of classes; zero when no L(s, chi_i) has a real zero.
inline Complex h_term(double X, const ClassPair& classes, ZeroBank& bank) {
  const auto g1 = build_group(classes.first.q);
  const auto g2 = build_group(classes.second.q);
  auto betas = [&bank](const DirichletCharacter& chi) {
    std::vector<double> out;
    for (const auto& z : bank.real_zeros(chi)) out.push_back(z.real_position);
    return out;
  };
  std::vector<std::vector<double>> b1, b2;
  bool any = false;
  for (const auto& chi : g1) {
    b1.push_back(betas(chi));
    any = any || !b1.back().empty();
  }
  for (const auto& chi : g2) {
    b2.push_back(betas(chi));
    any = any || !b2.back().empty();
  }
  if (!any) return {0.0, 0.0};
  CompensatedSum<Complex> total;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    const auto& chi1 = g1[i];
    const Complex c1 = std::conj(chi1(static_cast<std::int64_t>(classes.first.a)));
    for (std::size_t j = 0; j < g2.size(); ++j) {
      const auto& chi2 = g2[j];
      if (b1[i].empty() && b2[j].empty()) continue;
      const Complex weight = c1 * std::conj(chi2(static_cast<std::int64_t>(classes.second.a)));
      CompensatedSum<Complex> inner;
      for (double beta2 : b2[j]) inner += g_term_character(X, chi1, bank, beta2);
      for (double beta1 : b1[i]) inner += g_term_character(X, chi2, bank, beta1);
      for (double beta1 : b1[i]) {
        for (double beta2 : b2[j]) inner -= w_kernel(X, beta1, beta2);
      }
      total += weight * inner.value();
    }
  }
  return total.value();
}

struct TheoremReport {
  double X = 0.0;
  ClassPair classes;
  double lhs = 0.0;
  double main_term = 0.0;
  double g_term_1 = 0.0;
  double g_term_2 = 0.0;
  double h_term = 0.0;
  double residual = 0.0;
  double height = 0.0;
  double truncation_bound = 0.0;
  double bound_ratio = 0.0;
  /// Largest |imaginary part| dropped from G1, G2, H (should be rounding noise).
  double imaginary_residue = 0.0;
};

/// Assembles both sides at X. The LHS is the prefix sum at floor(X); every
/// term on the right uses X itself.
inline TheoremReport theorem_report(const RepresentationTable& rep, double X, ZeroBank& bank) {
  if (!(X >= 2.0)) throw InvalidArgument("theorem_report: X must be at least 2");
  const auto& classes = rep.classes();
  TheoremReport r;
  r.X = X;
  r.classes = classes;
  r.height = bank.height();
  const double phi = static_cast<double>(euler_phi(classes.first.q) * euler_phi(classes.second.q));
  r.lhs = rep.prefix(X);
  r.main_term = X * X / (2.0 * phi);
  const GTerm g1 = g_term(X, classes.first, bank);
  const GTerm g2 = g_term(X, classes.second, bank);
  const Complex h = h_term(X, classes, bank);
  r.g_term_1 = g1.value.real() / phi;
  r.g_term_2 = g2.value.real() / phi;
  r.h_term = h.real() / phi;
  r.imaginary_residue = std::max({std::abs(g1.value.imag()), std::abs(g2.value.imag()), std::abs(h.imag())}) / phi;
  r.residual = r.lhs - r.main_term + r.g_term_1 + r.g_term_2 - r.h_term;
  r.truncation_bound = (g1.tail_bound + g2.tail_bound) / phi;
  const double scale = X * std::log(X) * std::log(static_cast<double>(classes.first.q) * X) *
                       std::log(static_cast<double>(classes.second.q) * X);
  r.bound_ratio = std::abs(r.residual) / scale;
  return r;
}

struct RuppelReport {
  double X = 0.0;
  std::uint64_t q = 1;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  double lhs = 0.0;
  double main_term = 0.0;           // X^2 / (2 phi(q)^2)
  double ruppel_residual = 0.0;     // lhs - main_term
  double real_zero_terms = 0.0;     // the real-zero corrections of the augmented expansion
  double augmented_residual = 0.0;  // lhs - (main_term + real_zero_terms)
  double theorem_residual = 0.0;    // E(X) with every G and H term included
  double delta = 0.5;               // 1/2, or the largest real zero mod q
  double ruppel_scale = 0.0;        // X^(1+delta) max(1, log q)^2
};

/// Side-by-side residuals for one modulus q and classes a, b.
inline RuppelReport ruppel_comparison(const RepresentationTable& rep, double X, ZeroBank& bank) {
  const auto& classes = rep.classes();
  if (classes.first.q != classes.second.q) {
    throw InvalidArgument("ruppel_comparison: both classes must share one modulus");
  }
  const std::uint64_t q = classes.first.q;
  RuppelReport r;
  r.X = X;
  r.q = q;
  r.a = classes.first.a;
  r.b = classes.second.a;
  const double phi = static_cast<double>(euler_phi(q));
  r.lhs = rep.prefix(X);
  r.main_term = X * X / (2.0 * phi * phi);
  r.ruppel_residual = r.lhs - r.main_term;
  const auto group = build_group(q);
  CompensatedSum<Complex> single, pairs;
  for (const auto& chi : group) {
    const Complex weight = std::conj(chi(static_cast<std::int64_t>(r.a))) + std::conj(chi(static_cast<std::int64_t>(r.b)));
    for (const auto& z : bank.real_zeros(chi)) {
      const double beta = z.real_position;
      r.delta = std::max(r.delta, beta);
      single += weight * (std::pow(X, beta + 1.0) / (beta * (beta + 1.0)));
    }
  }
  for (const auto& chi : group) {
    const auto& zc = bank.real_zeros(chi);
    if (zc.empty()) continue;
    for (const auto& psi_char : group) {
      const auto& zp = bank.real_zeros(psi_char);
      const Complex weight =
          std::conj(chi(static_cast<std::int64_t>(r.a))) * std::conj(psi_char(static_cast<std::int64_t>(r.b)));
      for (const auto& u : zc) {
        for (const auto& v : zp) pairs += weight * w_kernel(X, u.real_position, v.real_position);
      }
    }
  }
  r.real_zero_terms = (-single.value() + pairs.value()).real() / (phi * phi);
  r.augmented_residual = r.lhs - r.main_term - r.real_zero_terms;
  r.theorem_residual = theorem_report(rep, X, bank).residual;
  const double log_q = std::max(1.0, std::log(static_cast<double>(q)));
  r.ruppel_scale = std::pow(X, 1.0 + r.delta) * log_q * log_q;
  return r;
}

inline constexpr const char* kTheoremCsvHeader = "X,q1,a1,q2,a2,lhs,main,g1,g2,h,residual,bound_ratio,T,tail_bound";

inline std::string format_sci(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17e", v);
  return buffer;
}

inline void write_theorem_row(std::ostream& out, const TheoremReport& r) {
  out << format_sci(r.X) << ',' << r.classes.first.q << ',' << r.classes.first.a << ',' << r.classes.second.q << ','
      << r.classes.second.a << ',' << format_sci(r.lhs) << ',' << format_sci(r.main_term) << ','
      << format_sci(r.g_term_1) << ',' << format_sci(r.g_term_2) << ',' << format_sci(r.h_term) << ','
      << format_sci(r.residual) << ',' << format_sci(r.bound_ratio) << ',' << format_sci(r.height) << ','
      << format_sci(r.truncation_bound) << '\n';
}

/// Geometrically spaced sample points over [lo, hi], both ends included.
inline std::vector<double> geometric_samples(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi >= lo) || count == 0) throw InvalidArgument("geometric_samples: need 0 < lo <= hi, count > 0");
  std::vector<double> out;
  if (count == 1) return {hi};
  const double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back(i + 1 == count ? hi : lo * std::exp(ratio * static_cast<double>(i)));
  return out;
}

}  // namespace goldbach
