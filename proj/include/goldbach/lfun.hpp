#pragma once

// Dirichlet L-functions: Hurwitz zeta by Euler-Maclaurin, L(s, chi), the
// completed function and its root number, zeros on the critical line with an
// argument-principle count certificate, real zeros, L'/L(1, chi) and plain
// text zero tables.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "goldbach/characters.hpp"
#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"
#include "goldbach/special.hpp"
#include "goldbach/summation.hpp"

namespace goldbach {

namespace detail {

/// B_{2k} / (2k)! for k = 1..24.
inline constexpr std::array<double, 24> kBernoulliOverFactorial = {
    8.3333333333333333333e-2,   -1.3888888888888888889e-3,  3.3068783068783068783e-5,
    -8.2671957671957671958e-7,  2.0876756987868098979e-8,   -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.174868698558061873e-16,  5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21,  -8.9535174270375468504e-23, 2.2679524523376830603e-24,
    -5.7447906688722024453e-26, 1.4551724756148649019e-27,  -3.6859949406653101782e-29,
    9.336734257095044672e-31,   -2.3650224157006299346e-32, 5.9906717624821343047e-34,
    -1.5174548844682902617e-35, 3.8437581254541882322e-37,  -9.7363530726466910353e-39};

/// Number of directly summed terms: every ratio of consecutive correction
/// terms is then below 1/4.
inline std::int64_t euler_maclaurin_terms(Complex s, double a) {
  const double needed = (std::abs(s) + 2.0 * kBernoulliOverFactorial.size()) / kPi - a;
  return std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(needed)));
}

/// (e^u - 1) / u.
inline Complex expm1_ratio(Complex u) {
  if (std::abs(u) < 1e-2) {
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int k = 2; k <= 9; ++k) {
      term *= u / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return (std::exp(u) - 1.0) / u;
}

/// zeta(s, a) when `regularized` is false, zeta(s, a) - 1/(s - 1) otherwise.
inline Complex hurwitz_impl(Complex s, double a, bool regularized) {
  const std::int64_t n_terms = euler_maclaurin_terms(s, a);
  Complex head{0.0, 0.0};
  for (std::int64_t n = 0; n < n_terms; ++n) head += std::exp(-s * std::log(static_cast<double>(n) + a));
  const double base = static_cast<double>(n_terms) + a;
  const double log_base = std::log(base);
  const Complex base_pow = std::exp(-s * log_base);  // (N + a)^(-s)
  Complex tail;
  if (regularized) {
    // ((N + a)^(1 - s) - 1) / (s - 1)
    tail = -log_base * expm1_ratio((1.0 - s) * log_base);
  } else {
    tail = base_pow * base / (s - 1.0);
  }
  tail += 0.5 * base_pow;
  Complex rising = s * base_pow / base;  // (s)_{2k-1} (N + a)^(-s-2k+1) at k = 1
  const double inv_base2 = 1.0 / (base * base);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    tail += kBernoulliOverFactorial[k] * rising;
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + j) * (s + j + 1.0) * inv_base2;
  }
  return head + tail;
}

inline void check_hurwitz_shift(double a, const char* who) {
  if (!(a > 0.0 && a <= 1.0)) throw InvalidArgument(std::string(who) + ": a must lie in (0, 1]");
}

}  // namespace detail

/// zeta(s, a) = sum_{n >= 0} (n + a)^(-s), 0 < a <= 1.
inline Complex hurwitz_zeta(Complex s, double a) {
  detail::check_hurwitz_shift(a, "hurwitz_zeta");
  if (s == Complex{1.0, 0.0}) throw PoleError("hurwitz_zeta: pole at s = 1", 1);
  return detail::hurwitz_impl(s, a, false);
}

/// zeta(s, a) - 1/(s - 1), entire in s; equals -digamma(a) at s = 1.
inline Complex hurwitz_zeta_regularized(Complex s, double a) {
  detail::check_hurwitz_shift(a, "hurwitz_zeta_regularized");
  return detail::hurwitz_impl(s, a, true);
}

/// L(s, chi) = q^(-s) sum_{a=1}^{q} chi(a) zeta(s, a/q). For nonprincipal chi
/// the pole parts cancel and the regularized sum is used, so s = 1 is fine.
inline Complex l_value(Complex s, const DirichletCharacter& chi) {
  const std::uint64_t q = chi.modulus();
  const bool principal = chi.is_principal();
  if (principal && s == Complex{1.0, 0.0}) {
    throw PoleError("l_value: principal character " + chi.label() + " has a pole at s = 1", 1);
  }
  Complex sum{0.0, 0.0};
  const double qd = static_cast<double>(q);
  for (std::uint64_t r = 1; r <= q; ++r) {
    const Complex c = chi(static_cast<std::int64_t>(r));
    if (c == Complex{}) continue;
    const double a = static_cast<double>(r) / qd;
    sum += c * (principal ? detail::hurwitz_impl(s, a, false) : detail::hurwitz_impl(s, a, true));
  }
  return sum * std::exp(-s * std::log(qd));
}

/// epsilon(chi) = tau(chi) / (i^a sqrt(q)) for primitive chi.
inline Complex root_number(const DirichletCharacter& chi) {
  const Complex tau = gauss_sum(chi);
  const Complex i_pow = chi.parity() == 0 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
  return tau / (i_pow * std::sqrt(static_cast<double>(chi.modulus())));
}

/// log of the completed function. For q = 1 this is
/// xi(s) = (s - 1) pi^(-s/2) Gamma(s/2 + 1) zeta(s); otherwise
/// (q/pi)^((s+a)/2) Gamma((s+a)/2) L(s, chi). Only the value mod 2 pi i of
/// the imaginary part is meaningful.
inline Complex log_completed(Complex s, const DirichletCharacter& chi) {
  if (!chi.is_primitive()) {
    throw InvalidArgument("log_completed: character " + chi.label() + " is not primitive");
  }
  if (chi.modulus() == 1) {
    return std::log(s - 1.0) - 0.5 * s * std::log(kPi) + log_gamma(0.5 * s + 1.0) + std::log(l_value(s, chi));
  }
  const Complex half = 0.5 * (s + static_cast<double>(chi.parity()));
  return half * std::log(static_cast<double>(chi.modulus()) / kPi) + log_gamma(half) + std::log(l_value(s, chi));
}

/// The real-valued rotation of the completed function on the critical line:
/// Z(t) = Re(exp(i theta(t)) L(1/2 + it, chi) / sqrt(epsilon)), with
/// theta(t) = Im log Gamma((1/2 + a + it)/2) + (t/2) log(q/pi).
class CriticalLine {
 public:
  explicit CriticalLine(DirichletCharacter chi) : chi_(std::move(chi)) {
    if (!chi_.is_primitive()) {
      throw InvalidArgument("CriticalLine: character " + chi_.label() + " is not primitive");
    }
    inv_sqrt_root_number_ = 1.0 / std::sqrt(root_number(chi_));
    log_q_over_pi_ = std::log(static_cast<double>(chi_.modulus()) / kPi);
  }

  const DirichletCharacter& character() const { return chi_; }

  double theta(double t) const {
    const Complex z{0.5 * (0.5 + chi_.parity()), 0.5 * t};
    return log_gamma(z).imag() + 0.5 * t * log_q_over_pi_;
  }

  double z(double t) const {
    const Complex value = std::polar(1.0, theta(t)) * l_value({0.5, t}, chi_) * inv_sqrt_root_number_;
    return value.real();
  }

  /// Average zero spacing near height t, clamped for small t.
  double mean_gap(double t) const {
    const double density = std::log(static_cast<double>(chi_.modulus()) * std::max(t, kTwoPi * 2.0) / kTwoPi);
    return kTwoPi / std::max(density, 1.0);
  }

 private:
  DirichletCharacter chi_;
  Complex inv_sqrt_root_number_;
  double log_q_over_pi_ = 0.0;
};

enum class ZeroKind { critical_line, real };
enum class ZeroSource { computed, ingested };

struct Zero {
  std::string character;  // "q.index"
  ZeroKind kind = ZeroKind::critical_line;
  double ordinate = 0.0;       // gamma, for critical-line zeros
  double real_position = 0.5;  // beta, for real zeros
  double certified_accuracy = 0.0;

  Complex rho() const { return kind == ZeroKind::real ? Complex{real_position, 0.0} : Complex{0.5, ordinate}; }
};

/// Zeros 0 < gamma <= height of one L(s, chi). The gamma < 0 zeros of chi are
/// the conjugates of the positive ones of conj(chi).
struct ZeroSet {
  std::string character;
  double height = 0.0;
  std::vector<Zero> zeros;
  std::int64_t count_certificate = 0;
  ZeroSource source = ZeroSource::computed;
};

namespace detail {

inline double wrap_phase(double d) { return d - kTwoPi * std::round(d / kTwoPi); }

class PhaseWalker {
 public:
  explicit PhaseWalker(const DirichletCharacter& chi) : chi_(chi) {}

  double phase(Complex s) const { return log_completed(s, chi_).imag(); }

  /// Continuous change of arg along the segment [a, b].
  double change(Complex a, Complex b, double pa, double pb, int depth = 0) const {
    const Complex m = 0.5 * (a + b);
    const double pm = phase(m);
    const double whole = wrap_phase(pb - pa);
    const double left = wrap_phase(pm - pa);
    const double right = wrap_phase(pb - pm);
    const double limit = kPi / 4.0;
    if (std::abs(whole) < limit && std::abs(left) < limit && std::abs(right) < limit &&
        std::abs(left + right - whole) < 1e-6) {
      return left + right;
    }
    if (depth >= kMaxDepth) {
      throw CertificationFailure("argument principle: phase of the completed function of " + chi_.label() +
                                 " could not be resolved near s = " + std::to_string(m.real()) + " + " +
                                 std::to_string(m.imag()) + "i");
    }
    return change(a, m, pa, pm, depth + 1) + change(m, b, pm, pb, depth + 1);
  }

  /// Sum of changes along a polyline split into pieces no longer than `step`.
  double along(Complex from, Complex to, double step) const {
    const auto pieces = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(std::abs(to - from) / step)));
    CompensatedSum<double> total;
    Complex a = from;
    double pa = phase(a);
    for (std::int64_t k = 1; k <= pieces; ++k) {
      const Complex b = k == pieces ? to : from + (to - from) * (static_cast<double>(k) / static_cast<double>(pieces));
      const double pb = phase(b);
      total += change(a, b, pa, pb);
      a = b;
      pa = pb;
    }
    return total.value();
  }

 private:
  static constexpr int kMaxDepth = 40;
  const DirichletCharacter& chi_;
};

inline void check_height(double T, const char* who) {
  if (!(T >= 0.0 && T <= 1e4)) throw InvalidArgument(std::string(who) + ": height must lie in [0, 1e4]");
}

}  // namespace detail

/// Number of zeros of the completed function of primitive chi in the
/// rectangle [-0.1, 1.1] x (0, T], from its winding number along the boundary.
inline std::int64_t count_zeros_argument_principle(const DirichletCharacter& chi, double T) {
  detail::check_height(T, "count_zeros_argument_principle");
  if (T == 0.0) return 0;
  const CriticalLine line(chi);
  const detail::PhaseWalker walker(chi);
  const double step = std::min(0.5, 0.25 * line.mean_gap(T));
  const Complex c0{-0.1, 0.0};
  const Complex c1{1.1, 0.0};
  const Complex c2{1.1, T};
  const Complex c3{-0.1, T};
  CompensatedSum<double> winding;
  winding += walker.along(c0, c1, step);
  winding += walker.along(c1, c2, step);
  winding += walker.along(c2, c3, step);
  winding += walker.along(c3, c0, step);
  const double turns = winding.value() / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.1) {
    throw CertificationFailure("argument principle: winding number " + std::to_string(turns) + " for " +
                               chi.label() + " is not close to an integer");
  }
  return static_cast<std::int64_t>(rounded);
}

namespace detail {

inline double bracket_root(const std::function<double(double)>& f, double lo, double hi, double flo, double fhi,
                           double* accuracy) {
  if (flo == 0.0) {
    *accuracy = 0.0;
    return lo;
  }
  if (fhi == 0.0) {
    *accuracy = 0.0;
    return hi;
  }
  boost::uintmax_t iterations = 200;
  const auto tol = [](double a, double b) { return std::abs(b - a) <= 2e-12 * std::max(1.0, std::abs(a)); };
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iterations);
  *accuracy = 0.5 * (b - a);
  return 0.5 * (a + b);
}

inline std::vector<Zero> critical_zeros_on_grid(const CriticalLine& line, double T, int level) {
  std::vector<Zero> out;
  const std::string label = line.character().label();
  const double refine = std::ldexp(1.0, -level);
  std::function<double(double)> z = [&line](double t) { return line.z(t); };
  double t0 = 0.0;
  double z0 = line.z(t0);
  while (t0 < T) {
    const double t1 = std::min(T, t0 + 0.125 * refine * line.mean_gap(t0));
    const double z1 = line.z(t1);
    if ((z0 < 0.0 && z1 > 0.0) || (z0 > 0.0 && z1 < 0.0) || (z1 == 0.0 && t1 < T)) {
      double accuracy = 0.0;
      const double gamma = bracket_root(z, t0, t1, z0, z1, &accuracy);
      if (gamma > 0.0) out.push_back({label, ZeroKind::critical_line, gamma, 0.5, accuracy});
    }
    t0 = t1;
    z0 = z1;
  }
  return out;
}

}  // namespace detail

/// All zeros 1/2 + i gamma with 0 < gamma <= T of L(s, chi). Non-primitive
/// characters use the zeros of their primitive inducer. Sign changes of Z(t)
/// are located on a grid of about eight points per mean spacing; if they do
/// not account for the argument-principle count the grid is halved, up to six
/// times, before giving up with CertificationFailure.
inline ZeroSet find_critical_zeros(const DirichletCharacter& chi, double T) {
  detail::check_height(T, "find_critical_zeros");
  const auto inducer = conductor_and_primitive(chi);
  const CriticalLine line(inducer.character);
  ZeroSet set;
  set.character = chi.label();
  set.height = T;
  set.source = ZeroSource::computed;
  if (T == 0.0) return set;
  set.count_certificate = count_zeros_argument_principle(inducer.character, T);
  std::int64_t last = -1;
  for (int level = 0; level <= 6; ++level) {
    auto zeros = detail::critical_zeros_on_grid(line, T, level);
    last = static_cast<std::int64_t>(zeros.size());
    if (last == set.count_certificate) {
      for (auto& zero : zeros) zero.character = set.character;
      set.zeros = std::move(zeros);
      return set;
    }
    if (last > set.count_certificate) break;
  }
  throw CertificationFailure("find_critical_zeros: " + chi.label() + " up to T = " + std::to_string(T) +
                             ": located " + std::to_string(last) + " sign changes but the argument principle counts " +
                             std::to_string(set.count_certificate));
}

/// Fast evaluation of L(sigma, chi) for real sigma and real chi; the logs
/// log(n + a/q) are computed once.
class RealLSeries {
 public:
  explicit RealLSeries(const DirichletCharacter& chi, double max_abs_sigma = 2.0) : q_(chi.modulus()) {
    if (!chi.is_real()) throw InvalidArgument("RealLSeries: character " + chi.label() + " is not real");
    principal_ = chi.is_principal();
    const double qd = static_cast<double>(q_);
    log_q_ = std::log(qd);
    for (std::uint64_t r = 1; r <= q_; ++r) {
      const double c = chi(static_cast<std::int64_t>(r)).real();
      if (c == 0.0) continue;
      Residue res;
      res.sign = c;
      res.a = static_cast<double>(r) / qd;
      res.n_terms = detail::euler_maclaurin_terms(Complex{max_abs_sigma, 0.0}, res.a);
      res.logs.resize(static_cast<std::size_t>(res.n_terms));
      for (std::int64_t n = 0; n < res.n_terms; ++n) res.logs[n] = std::log(static_cast<double>(n) + res.a);
      residues_.push_back(std::move(res));
    }
  }

  double operator()(double sigma) const {
    if (principal_ && sigma == 1.0) throw PoleError("RealLSeries: pole at s = 1", 1);
    double sum = 0.0;
    for (const auto& r : residues_) sum += r.sign * hurwitz(sigma, r);
    return sum * std::exp(-sigma * log_q_);
  }

 private:
  struct Residue {
    double sign = 0.0;
    double a = 0.0;
    std::int64_t n_terms = 0;
    std::vector<double> logs;
  };

  double hurwitz(double s, const Residue& r) const {
    double head = 0.0;
    for (double l : r.logs) head += std::exp(-s * l);
    const double base = static_cast<double>(r.n_terms) + r.a;
    const double log_base = std::log(base);
    const double base_pow = std::exp(-s * log_base);
    double tail = principal_ ? base_pow * base / (s - 1.0)
                             : -log_base * detail::expm1_ratio(Complex{(1.0 - s) * log_base, 0.0}).real();
    tail += 0.5 * base_pow;
    double rising = s * base_pow / base;
    const double inv_base2 = 1.0 / (base * base);
    for (std::size_t k = 0; k < detail::kBernoulliOverFactorial.size(); ++k) {
      tail += detail::kBernoulliOverFactorial[k] * rising;
      const double j = 2.0 * static_cast<double>(k) + 1.0;
      rising *= (s + j) * (s + j + 1.0) * inv_base2;
    }
    return head + tail;
  }

  std::uint64_t q_;
  bool principal_ = false;
  double log_q_ = 0.0;
  std::vector<Residue> residues_;
};

namespace detail {

inline std::vector<Zero> scan_interval(const RealLSeries& L, const std::string& label, double lo, double hi,
                                       std::int64_t grid, bool include_hi) {
  std::vector<Zero> out;
  std::function<double(double)> f = [&L](double s) { return L(s); };
  const double h = (hi - lo) / static_cast<double>(grid);
  const std::int64_t last = include_hi ? grid : grid - 1;
  double s0 = lo;
  double f0 = L(s0);
  if (f0 == 0.0) out.push_back({label, ZeroKind::real, 0.0, s0, 0.0});
  for (std::int64_t k = 1; k <= last; ++k) {
    const double s1 = lo + h * static_cast<double>(k);
    const double f1 = L(s1);
    if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0) || f1 == 0.0) {
      double accuracy = 0.0;
      const double beta = bracket_root(f, s0, s1, f0, f1, &accuracy);
      out.push_back({label, ZeroKind::real, 0.0, beta, accuracy});
    }
    s0 = s1;
    f0 = f1;
  }
  return out;
}

}  // namespace detail

/// Real zeros beta in [1/2, 1) of L(s, chi) for real chi, by a sign-change
/// scan with `grid` steps and root refinement. Non-primitive characters are
/// scanned through their inducer (the extra Euler factors are positive for
/// real s > 0). Zeros in (0, 1/2) are appended to `below_half` when given.
inline std::vector<Zero> scan_real_zeros(const DirichletCharacter& chi, std::int64_t grid,
                                         std::vector<Zero>* below_half = nullptr) {
  if (grid < 1000) throw InvalidArgument("scan_real_zeros: grid must be at least 1000");
  if (!chi.is_real()) throw InvalidArgument("scan_real_zeros: character " + chi.label() + " is not real");
  const auto inducer = conductor_and_primitive(chi);
  const RealLSeries L(inducer.character);
  const bool nonprincipal = !inducer.character.is_principal();
  auto found = detail::scan_interval(L, chi.label(), 0.5, 1.0, grid, nonprincipal);
  std::erase_if(found, [](const Zero& z) { return z.real_position >= 1.0; });
  if (below_half != nullptr) {
    auto low = detail::scan_interval(L, chi.label(), 0.0, 0.5, grid, false);
    std::erase_if(low, [](const Zero& z) { return z.real_position <= 0.0 || z.real_position >= 0.5; });
    below_half->insert(below_half->end(), low.begin(), low.end());
  }
  return found;
}

struct SiegelReport {
  std::uint64_t modulus = 1;
  double landau_constant_c1 = 0.1;
  double threshold = 1.0;  // 1 - c1 / log q
  std::size_t characters_scanned = 0;
  struct Offender {
    std::string character;
    double beta;
  };
  std::optional<Offender> offender;
};

/// Scans every real character mod q and flags a real zero beyond
/// 1 - c1/log q. Two flagged zeros raise TheoremViolation.
inline SiegelReport siegel_audit(std::uint64_t q, double c1, std::int64_t grid = 10000) {
  if (!(c1 > 0.0)) throw InvalidArgument("siegel_audit: c1 must be positive");
  SiegelReport report;
  report.modulus = q;
  report.landau_constant_c1 = c1;
  if (q <= 1) return report;
  report.threshold = 1.0 - c1 / std::log(static_cast<double>(q));
  for (const auto& chi : build_group(q)) {
    if (!chi.is_real()) continue;
    ++report.characters_scanned;
    for (const auto& zero : scan_real_zeros(chi, grid)) {
      if (zero.real_position <= report.threshold) continue;
      if (report.offender) {
        throw TheoremViolation("siegel_audit: second Siegel zero mod " + std::to_string(q) + " (" +
                               report.offender->character + " at " + std::to_string(report.offender->beta) +
                               ", " + chi.label() + " at " + std::to_string(zero.real_position) + ")");
      }
      report.offender = SiegelReport::Offender{chi.label(), zero.real_position};
    }
  }
  return report;
}

/// L'/L(1, chi) for nonprincipal chi: five-point central difference of order
/// four with step h = 1e-3 along the real axis.
inline Complex log_derivative_at_one(const DirichletCharacter& chi) {
  if (chi.is_principal()) {
    throw InvalidArgument("log_derivative_at_one: character " + chi.label() + " is principal");
  }
  constexpr double h = 1e-3;
  auto L = [&chi](double s) { return l_value(Complex{s, 0.0}, chi); };
  const Complex derivative = (-L(1.0 + 2.0 * h) + 8.0 * L(1.0 + h) - 8.0 * L(1.0 - h) + L(1.0 - 2.0 * h)) / (12.0 * h);
  return derivative / L(1.0);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses ascending positive ordinates, one per line; blank lines and '#'
/// comments are skipped. With `recertify`, Z(t) must change sign across
/// [gamma - 1e-5, gamma + 1e-5] for each ordinate.
inline ZeroSet read_zero_table(std::istream& in, const DirichletCharacter& chi, bool recertify = false) {
  ZeroSet set;
  set.character = chi.label();
  set.source = ZeroSource::ingested;
  std::optional<CriticalLine> line;
  if (recertify) line.emplace(conductor_and_primitive(chi).character);
  constexpr double kWindow = 1e-5;
  std::string raw;
  std::size_t line_number = 0;
  double previous = 0.0;
  while (std::getline(in, raw)) {
    ++line_number;
    const auto text = detail::trim(raw);
    if (text.empty() || text.front() == '#') continue;
    double gamma = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), gamma);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(gamma)) {
      throw IngestionError("zero table line " + std::to_string(line_number) + ": cannot parse '" + std::string(text) +
                               "'",
                           line_number);
    }
    if (!(gamma > previous)) {
      throw IngestionError("zero table line " + std::to_string(line_number) + ": ordinate " + std::string(text) +
                               " is not positive and strictly increasing",
                           line_number);
    }
    if (line) {
      const double lo = line->z(gamma - kWindow);
      const double hi = line->z(gamma + kWindow);
      if (!((lo <= 0.0 && hi >= 0.0) || (lo >= 0.0 && hi <= 0.0))) {
        throw IngestionError("zero table line " + std::to_string(line_number) + ": ordinate " + std::string(text) +
                                 " fails the sign check for " + chi.label(),
                             line_number);
      }
    }
    set.zeros.push_back({set.character, ZeroKind::critical_line, gamma, 0.5, recertify ? kWindow : 0.0});
    previous = gamma;
  }
  set.height = previous;
  set.count_certificate = static_cast<std::int64_t>(set.zeros.size());
  return set;
}

inline ZeroSet ingest_zero_table(const std::string& path, const DirichletCharacter& chi, bool recertify = false) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero table '" + path + "'");
  return read_zero_table(in, chi, recertify);
}

inline void write_zero_table(std::ostream& out, const ZeroSet& set) {
  out << "# character " << set.character << "\n";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", set.height);
  out << "# height " << buffer << " count " << set.count_certificate << "\n";
  for (const auto& zero : set.zeros) {
    std::snprintf(buffer, sizeof buffer, "%.17g", zero.ordinate);
    out << buffer << "\n";
  }
}

}  // namespace goldbach
