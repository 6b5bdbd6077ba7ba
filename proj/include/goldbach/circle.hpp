#pragma once

// Circle-method harness: the damped exponential sum S~(alpha, chi), the
// finite geometric sum T(y, alpha), and numerical checks of the explicit
// formula, the Hankel-type integral, the detection integrals, the mean-square
// estimate and the Cesaro-weighted explicit formula.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "goldbach/arith.hpp"
#include "goldbach/characters.hpp"
#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"
#include "goldbach/fft.hpp"
#include "goldbach/lfun.hpp"
#include "goldbach/quadrature.hpp"
#include "goldbach/special.hpp"
#include "goldbach/summation.hpp"

namespace goldbach {

/// alpha in [-1/2, 1/2] and z = 1/N - 2 pi i alpha.
struct ThetaPoint {
  double alpha = 0.0;
  std::int64_t N = 2;
  Complex z;

  ThetaPoint(double a, std::int64_t n) : alpha(a), N(n) {
    if (!(a >= -0.5 && a <= 0.5)) throw InvalidArgument("ThetaPoint: alpha must lie in [-1/2, 1/2]");
    if (n < 2) throw InvalidArgument("ThetaPoint: N must be at least 2");
    z = Complex(1.0 / static_cast<double>(n), -kTwoPi * a);
  }
};

/// Largest n kept in the damped sums: the first n with e^(-n/N) < 1e-18.
inline std::uint64_t damped_cutoff(std::int64_t N) {
  return static_cast<std::uint64_t>(std::ceil(static_cast<double>(N) * std::log(1e18)));
}

/// The nonzero terms chi(n) Lambda(n) e^(-n/N), n up to the cutoff.
struct DampedCoefficients {
  std::int64_t N = 2;
  std::vector<std::uint64_t> n;
  std::vector<Complex> c;
};

inline DampedCoefficients damped_coefficients(std::int64_t N, const DirichletCharacter* chi,
                                              const MangoldtTable& table) {
  if (N < 2) throw InvalidArgument("damped_coefficients: N must be at least 2");
  const std::uint64_t cutoff = damped_cutoff(N);
  if (table.limit() < cutoff) {
    throw TableTooSmall("damped sum with N = " + std::to_string(N) + " needs a Mangoldt table up to " +
                        std::to_string(cutoff) + ", have " + std::to_string(table.limit()));
  }
  DampedCoefficients out;
  out.N = N;
  const double inv_N = 1.0 / static_cast<double>(N);
  for (std::uint64_t m = 2; m <= cutoff; ++m) {
    if (table[m] == 0.0) continue;
    const Complex w = chi == nullptr ? Complex{1.0, 0.0} : (*chi)(static_cast<std::int64_t>(m));
    if (w == Complex{}) continue;
    out.n.push_back(m);
    out.c.push_back(w * (table[m] * std::exp(-static_cast<double>(m) * inv_N)));
  }
  return out;
}

inline Complex s_tilde(double alpha, const DampedCoefficients& coeffs) {
  CompensatedSum<Complex> sum;
  for (std::size_t k = 0; k < coeffs.n.size(); ++k) {
    sum += coeffs.c[k] * unit_phase(static_cast<double>(coeffs.n[k]) * alpha);
  }
  return sum.value();
}

/// S~(alpha, chi) = sum chi(n) Lambda(n) e^(-n/N) e(n alpha).
inline Complex s_tilde(const ThetaPoint& point, const DirichletCharacter& chi, const MangoldtTable& table) {
  return s_tilde(point.alpha, damped_coefficients(point.N, &chi, table));
}

/// S~(alpha) = sum Lambda(n) e^(-n/N) e(n alpha).
inline Complex s_tilde(const ThetaPoint& point, const MangoldtTable& table) {
  return s_tilde(point.alpha, damped_coefficients(point.N, nullptr, table));
}

/// T(y, alpha) = sum_{1 <= m <= y} e(m alpha).
inline Complex t_sum(double y, double alpha) {
  if (!(y >= 0.0)) throw InvalidArgument("t_sum: y must be nonnegative");
  const double M = std::floor(y);
  if (M == 0.0) return {0.0, 0.0};
  const double a = alpha - std::round(alpha);
  if (a == 0.0) return {M, 0.0};
  // e((M+1) a / 2) sin(pi M a) / sin(pi a); the rounding error of M a is
  // carried separately since the quotient amplifies it.
  const double product = M * a;
  const double product_error = std::fma(M, a, -product);
  const double ratio = std::sin(kPi * (std::fmod(product, 2.0) + product_error)) / std::sin(kPi * a);
  return unit_phase(0.5 * (M + 1.0) * a) * ratio;
}

/// L equal panels covering [-1/2, 1/2), each carrying the 20-point
/// Gauss-Legendre rule.
class PanelGrid {
 public:
  explicit PanelGrid(std::size_t panels) : panels_(panels), rule_(&gauss_legendre20()) {
    if (panels == 0) throw InvalidArgument("PanelGrid: need at least one panel");
  }

  std::size_t panels() const { return panels_; }
  std::size_t order() const { return rule_->nodes.size(); }
  double width() const { return 1.0 / static_cast<double>(panels_); }
  double left(std::size_t p) const { return -0.5 + static_cast<double>(p) * width(); }
  /// Offset of node i inside any panel.
  double offset(std::size_t i) const { return 0.5 * width() * (1.0 + rule_->nodes[i]); }
  double node(std::size_t p, std::size_t i) const { return left(p) + offset(i); }
  double weight(std::size_t i) const { return 0.5 * width() * rule_->weights[i]; }

 private:
  std::size_t panels_;
  const GaussLegendreRule* rule_;
};

/// S~ at every node of the grid, indexed [p * order + i]. For a fixed node
/// offset u the nodes form the lattice -1/2 + u + p/L, so folding n mod L
/// reduces the whole column to one length-L transform.
inline std::vector<Complex> sample_s_tilde(const PanelGrid& grid, const DampedCoefficients& coeffs) {
  const std::size_t L = grid.panels();
  const std::size_t order = grid.order();
  std::vector<Complex> out(L * order);
  std::vector<Complex> folded(L);
  for (std::size_t i = 0; i < order; ++i) {
    std::fill(folded.begin(), folded.end(), Complex{});
    const double shift = grid.offset(i) - 0.5;
    for (std::size_t k = 0; k < coeffs.n.size(); ++k) {
      const std::uint64_t n = coeffs.n[k];
      folded[n % L] += coeffs.c[k] * unit_phase(static_cast<double>(n) * shift);
    }
    fft(folded, true);
    for (std::size_t p = 0; p < L; ++p) out[p * order + i] = folded[p] * static_cast<double>(L);
  }
  return out;
}

namespace detail {

inline std::size_t next_power_of_two(double x) {
  std::size_t n = 1;
  while (static_cast<double>(n) < x) n <<= 1U;
  return n;
}

/// Doubles the panel count until two successive values agree to rel_tol.
inline Complex refine_panels(const std::function<Complex(std::size_t)>& at, std::size_t start, double rel_tol,
                             std::size_t max_panels, const char* who) {
  Complex previous = at(start);
  for (std::size_t L = 2 * start; L <= max_panels; L *= 2) {
    const Complex current = at(L);
    if (std::abs(current - previous) <= rel_tol * std::max(1.0, std::abs(current))) return current;
    previous = current;
  }
  throw QuadratureError(std::string(who) + ": panel refinement did not settle below " +
                        std::to_string(max_panels) + " panels");
}

inline std::string format_g(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

inline Complex z_power(Complex z, Complex s) { return std::exp(-s * std::log(z)); }

}  // namespace detail

/// One row of a residual log.
struct Verification {
  std::string job;
  std::string parameters;  // "key=value;..."
  Complex lhs;
  Complex rhs;
  double residual = 0.0;  // |lhs - rhs|
  double normalization = 1.0;
  double ratio = 0.0;  // residual / normalization
};

inline constexpr const char* kVerificationCsvHeader =
    "job,parameters,lhs_re,lhs_im,rhs_re,rhs_im,residual,normalization,ratio";

inline void write_verification_row(std::ostream& out, const Verification& v) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, "%s,%s,%.17e,%.17e,%.17e,%.17e,%.17e,%.17e,%.17e\n", v.job.c_str(),
                v.parameters.c_str(), v.lhs.real(), v.lhs.imag(), v.rhs.real(), v.rhs.imag(), v.residual,
                v.normalization, v.ratio);
  out << buffer;
}

struct ExplicitFormulaResidual {
  ThetaPoint point;
  std::string character;
  Complex lhs;
  Complex rhs;
  Complex residual;
  std::size_t zeros_used = 0;
  /// |residual| / (sqrt(N) log(qN)) and |residual| / log(qN).
  double normalized = 0.0;
  double normalized_log = 0.0;
  double scale = 1.0;  // sqrt(N) log(qN)

  Verification row() const {
    return {"explicit",
            "q=" + character.substr(0, character.find('.')) + ";chi=" + character + ";N=" + std::to_string(point.N) +
                ";alpha=" + detail::format_g(point.alpha) + ";zeros=" + std::to_string(zeros_used),
            lhs,
            rhs,
            std::abs(residual),
            scale,
            normalized};
  }
};

/// Zeros with |Im rho| <= T.
inline std::vector<Complex> truncate_zeros(std::span<const Complex> zeros, double T) {
  std::vector<Complex> out;
  for (const Complex& rho : zeros) {
    if (std::abs(rho.imag()) <= T) out.push_back(rho);
  }
  return out;
}

/// S~(alpha, chi) against 1/z - sum_rho Gamma(rho) z^-rho (q = 1) or
/// -sum_rho Gamma(rho) z^-rho + L'/L(1, conj chi) (q >= 2). `zeros` lists
/// every nontrivial zero used, both signs of gamma and real zeros included.
inline ExplicitFormulaResidual verify_explicit_formula(const ThetaPoint& point, const DirichletCharacter& chi,
                                                       std::span<const Complex> zeros, const MangoldtTable& table) {
  if (!chi.is_primitive()) {
    throw InvalidArgument("verify_explicit_formula: character " + chi.label() + " is not primitive");
  }
  const std::uint64_t q = chi.modulus();
  ExplicitFormulaResidual out{point, chi.label(), {}, {}, {}, zeros.size(), 0.0, 0.0, 1.0};
  out.lhs = s_tilde(point, chi, table);
  CompensatedSum<Complex> zero_sum;
  const Complex log_z = std::log(point.z);
  for (const Complex& rho : zeros) zero_sum += std::exp(log_gamma(rho) - rho * log_z);
  out.rhs = -zero_sum.value();
  if (q == 1) {
    out.rhs += 1.0 / point.z;
  } else {
    out.rhs += log_derivative_at_one(conjugate(chi));
  }
  out.residual = out.lhs - out.rhs;
  const double log_qN = std::log(static_cast<double>(q) * static_cast<double>(point.N));
  out.scale = std::sqrt(static_cast<double>(point.N)) * log_qN;
  out.normalized = std::abs(out.residual) / out.scale;
  out.normalized_log = std::abs(out.residual) / log_qN;
  return out;
}

struct HankelCheck {
  std::int64_t n = 0;
  double mu = 1.0;
  std::int64_t N = 2;
  Complex value;
  double error_estimate = 0.0;
  /// e^(-n/N) n^(mu-1) / Gamma(mu) for n > 0, else 0.
  double prediction = 0.0;
  /// 2^mu / |n|, or log N for n = 0.
  double envelope = 0.0;

  double deviation() const { return std::abs(value - prediction); }
  bool within_envelope() const { return deviation() <= envelope; }
};

/// int_{-1/2}^{1/2} e(-n alpha) / z^mu d alpha by adaptive Gauss-Kronrod.
inline HankelCheck hankel_integral(std::int64_t n, double mu, std::int64_t N, double abs_tol = 1e-10) {
  if (!(mu > 0.0 && mu <= 2.0)) throw InvalidArgument("hankel_integral: mu must lie in (0, 2]");
  if (n == 0 && mu > 1.0) throw InvalidArgument("hankel_integral: n = 0 requires mu <= 1");
  if (N < 2) throw InvalidArgument("hankel_integral: N must be at least 2");
  const double inv_N = 1.0 / static_cast<double>(N);
  const double nd = static_cast<double>(n);
  auto f = [=](double a) {
    return unit_phase(-nd * a) * detail::z_power(Complex(inv_N, -kTwoPi * a), mu);
  };
  // Breaks resolve the peak of width ~1/N at 0 and put a few oscillations
  // in each starting interval.
  std::vector<double> breaks;
  const double step = std::min(0.5, 1.0 / std::max<double>(4.0, 2.0 * std::abs(nd)));
  for (double b = -0.5 + step; b < 0.5 - 1e-15; b += step) breaks.push_back(b);
  for (double scale = inv_N; scale < 0.5; scale *= 4.0) {
    breaks.push_back(-scale);
    breaks.push_back(scale);
  }
  breaks.push_back(0.0);
  std::sort(breaks.begin(), breaks.end());
  const auto result = integrate_adaptive(f, -0.5, 0.5, abs_tol, breaks);
  HankelCheck out;
  out.n = n;
  out.mu = mu;
  out.N = N;
  out.value = result.value;
  out.error_estimate = result.error_estimate;
  if (n > 0) out.prediction = std::exp(-nd * inv_N + (mu - 1.0) * std::log(nd) - std::lgamma(mu));
  out.envelope = n == 0 ? std::log(static_cast<double>(N)) : std::pow(2.0, mu) / std::abs(nd);
  return out;
}

/// int T(y, -alpha) / z^mu d alpha against (1/Gamma(mu)) sum_{m <= y} e^(-m/N) m^(mu-1),
/// normalized by log y.
inline Verification verify_t_detect(double y, double mu, std::int64_t N) {
  if (!(y > 2.0)) throw InvalidArgument("verify_t_detect: y must exceed 2");
  if (!(mu > 0.0 && mu <= 2.0)) throw InvalidArgument("verify_t_detect: mu must lie in (0, 2]");
  if (N < 2) throw InvalidArgument("verify_t_detect: N must be at least 2");
  if (y > 20.0 * static_cast<double>(N)) throw OutOfRange("verify_t_detect: y must not exceed 20 N");
  const double inv_N = 1.0 / static_cast<double>(N);
  auto at = [&](std::size_t L) {
    const PanelGrid grid(L);
    CompensatedSum<Complex> sum;
    for (std::size_t p = 0; p < L; ++p) {
      for (std::size_t i = 0; i < grid.order(); ++i) {
        const double a = grid.node(p, i);
        sum += t_sum(y, -a) * detail::z_power(Complex(inv_N, -kTwoPi * a), mu) * grid.weight(i);
      }
    }
    return sum.value();
  };
  const std::size_t start = detail::next_power_of_two(std::max(4.0 * y, 8.0 * static_cast<double>(N)));
  Verification v;
  v.job = "t_detect";
  v.parameters = "y=" + detail::format_g(y) + ";mu=" + detail::format_g(mu) + ";N=" + std::to_string(N);
  v.lhs = detail::refine_panels(at, start, 1e-11, std::size_t{1} << 22, "verify_t_detect");
  CompensatedSum<double> rhs;
  for (double m = 1.0; m <= y; m += 1.0) rhs += std::exp(-m * inv_N + (mu - 1.0) * std::log(m));
  v.rhs = rhs.value() / std::tgamma(mu);
  v.residual = std::abs(v.lhs - v.rhs);
  v.normalization = std::log(y);
  v.ratio = v.residual / v.normalization;
  return v;
}

/// int T(y, -alpha) S~(alpha, chi) / z^mu d alpha against
/// (1/Gamma(mu)) sum_{m <= y} e^(-m/N) psi_mu(m, chi), normalized by N log(yN).
inline Verification verify_detect(double y, double mu, const DirichletCharacter& chi, std::int64_t N,
                                  const MangoldtTable& table) {
  if (!(y > 2.0)) throw InvalidArgument("verify_detect: y must exceed 2");
  if (!(mu > 0.0 && mu <= 1.0)) throw InvalidArgument("verify_detect: mu must lie in (0, 1]");
  if (N < 2) throw InvalidArgument("verify_detect: N must be at least 2");
  if (y > static_cast<double>(N)) throw OutOfRange("verify_detect: y must not exceed N");
  const auto coeffs = damped_coefficients(N, &chi, table);
  const double inv_N = 1.0 / static_cast<double>(N);
  auto at = [&](std::size_t L) {
    const PanelGrid grid(L);
    const auto s = sample_s_tilde(grid, coeffs);
    CompensatedSum<Complex> sum;
    for (std::size_t p = 0; p < L; ++p) {
      for (std::size_t i = 0; i < grid.order(); ++i) {
        const double a = grid.node(p, i);
        sum += t_sum(y, -a) * s[p * grid.order() + i] * detail::z_power(Complex(inv_N, -kTwoPi * a), mu) *
               grid.weight(i);
      }
    }
    return sum.value();
  };
  Verification v;
  v.job = "detect";
  v.parameters = "y=" + detail::format_g(y) + ";mu=" + detail::format_g(mu) + ";chi=" + chi.label() +
                 ";N=" + std::to_string(N);
  v.lhs = detail::refine_panels(at, detail::next_power_of_two(16.0 * static_cast<double>(N)), 1e-10,
                                std::size_t{1} << 22, "verify_detect");
  CompensatedSum<Complex> rhs;
  for (double m = 1.0; m <= y; m += 1.0) rhs += std::exp(-m * inv_N) * psi_mu(table, m, mu, chi);
  v.rhs = rhs.value() / std::tgamma(mu);
  v.residual = std::abs(v.lhs - v.rhs);
  v.normalization = static_cast<double>(N) * std::log(y * static_cast<double>(N));
  v.ratio = v.residual / v.normalization;
  return v;
}

struct MeanSquareResult {
  std::string character;
  std::int64_t N = 2;
  double xi = 0.5;
  double integral = 0.0;
  double normalization = 0.0;  // N xi (log qN)^2
  double ratio = 0.0;
  std::size_t panels = 0;
  /// Contribution of each dyadic band 2^(k-1)/N < |alpha| <= 2^k/N (band 0
  /// is |alpha| <= 1/N), the last one cut at xi.
  std::vector<double> bands;

  Verification row() const {
    return {"mean_square",
            "chi=" + character + ";N=" + std::to_string(N) + ";xi=" + detail::format_g(xi),
            {integral, 0.0},
            {normalization, 0.0},
            integral,
            normalization,
            ratio};
  }
};

/// int_{-xi}^{xi} |S~(alpha, chi) - E(chi)/z + sum_beta Gamma(beta)/z^beta|^2 d alpha.
inline MeanSquareResult mean_square(const DirichletCharacter& chi, std::int64_t N, double xi,
                                    std::span<const double> betas, const MangoldtTable& table) {
  if (!(xi > 0.0 && xi <= 0.5)) throw InvalidArgument("mean_square: xi must lie in (0, 1/2]");
  const auto coeffs = damped_coefficients(N, &chi, table);
  const double inv_N = 1.0 / static_cast<double>(N);
  const double principal = chi.is_principal() ? 1.0 : 0.0;
  std::vector<double> gamma_beta;
  for (double beta : betas) gamma_beta.push_back(std::tgamma(beta));
  auto correction = [&](double a) {
    const Complex z(inv_N, -kTwoPi * a);
    Complex c = -principal / z;
    for (std::size_t k = 0; k < betas.size(); ++k) c += gamma_beta[k] * detail::z_power(z, betas[k]);
    return c;
  };
  auto band_of = [&](double a) {
    std::size_t k = 0;
    for (double edge = inv_N; std::abs(a) > edge; edge *= 2.0) ++k;
    return k;
  };
  const auto& rule = gauss_legendre20();
  std::vector<double> bands;
  auto add = [&bands](std::size_t k, double v) {
    if (bands.size() <= k) bands.resize(k + 1, 0.0);
    bands[k] += v;
  };
  // Pieces of [-xi, xi] not covered by whole panels, integrated directly.
  auto partial = [&](double lo, double hi) {
    if (!(hi > lo)) return;
    const double half = 0.5 * (hi - lo);
    const double mid = lo + half;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double a = mid + half * rule.nodes[i];
      add(band_of(a), std::norm(s_tilde(a, coeffs) + correction(a)) * half * rule.weights[i]);
    }
  };
  std::size_t used = 0;
  auto at = [&](std::size_t L) {
    const PanelGrid grid(L);
    const auto s = sample_s_tilde(grid, coeffs);
    bands.clear();
    std::size_t first = L, last = 0;
    for (std::size_t p = 0; p < L; ++p) {
      if (grid.left(p) < -xi || grid.left(p) + grid.width() > xi) continue;
      first = std::min(first, p);
      last = std::max(last, p);
      const double mid = grid.left(p) + 0.5 * grid.width();
      double panel = 0.0;
      for (std::size_t i = 0; i < grid.order(); ++i) {
        panel += std::norm(s[p * grid.order() + i] + correction(grid.node(p, i))) * grid.weight(i);
      }
      add(band_of(mid), panel);
    }
    if (first <= last) {
      partial(-xi, grid.left(first));
      partial(grid.left(last) + grid.width(), xi);
    } else {
      partial(-xi, xi);
    }
    used = L;
    CompensatedSum<double> total;
    for (double b : bands) total += b;
    return Complex(total.value(), 0.0);
  };
  MeanSquareResult out;
  out.character = chi.label();
  out.N = N;
  out.xi = xi;
  out.integral = detail::refine_panels(at, detail::next_power_of_two(16.0 * static_cast<double>(N)), 1e-9,
                                       std::size_t{1} << 22, "mean_square")
                     .real();
  out.panels = used;
  out.bands = bands;
  const double log_qN = std::log(static_cast<double>(chi.modulus()) * static_cast<double>(N));
  out.normalization = static_cast<double>(N) * xi * log_qN * log_qN;
  out.ratio = out.integral / out.normalization;
  return out;
}

/// sum_{m <= M} psi_mu(m, chi) against
/// E(chi) M^(mu+1) / (mu (mu+1)) - G^mu(M, chi) + (M^mu / mu) L'/L(1, conj chi*),
/// the last term only for nonprincipal chi; normalized by M log(2q) log M.
/// `zeros` are the nontrivial zeros of L(s, chi) entering G^mu.
inline Verification verify_cal_osc(std::int64_t M, double mu, const DirichletCharacter& chi,
                                   std::span<const Complex> zeros, const MangoldtTable& table) {
  if (M < 2) throw InvalidArgument("verify_cal_osc: M must be at least 2");
  if (!(mu > 0.5 && mu <= 1.0)) throw InvalidArgument("verify_cal_osc: mu must lie in (1/2, 1]");
  if (static_cast<std::uint64_t>(M) > table.limit()) throw TableTooSmall("verify_cal_osc: table shorter than M");
  // sum_{m <= M} psi_mu(m) = sum_{n < M} chi(n) Lambda(n) P(M - n), P(j) = sum_{k <= j} k^(mu-1).
  std::vector<double> P(static_cast<std::size_t>(M) + 1, 0.0);
  {
    CompensatedSum<double> running;
    for (std::int64_t k = 1; k <= M; ++k) {
      running += mu == 1.0 ? 1.0 : std::pow(static_cast<double>(k), mu - 1.0);
      P[static_cast<std::size_t>(k)] = running.value();
    }
  }
  CompensatedSum<Complex> lhs;
  for (std::int64_t n = 2; n < M; ++n) {
    if (table[static_cast<std::uint64_t>(n)] == 0.0) continue;
    lhs += chi(n) * (table[static_cast<std::uint64_t>(n)] * P[static_cast<std::size_t>(M - n)]);
  }
  const double Md = static_cast<double>(M);
  CompensatedSum<Complex> rhs;
  if (chi.is_principal()) rhs += Complex(std::pow(Md, mu + 1.0) / (mu * (mu + 1.0)), 0.0);
  for (const Complex& rho : zeros) rhs -= w_kernel(Md, rho, mu);
  if (!chi.is_principal()) {
    const auto inducer = conductor_and_primitive(chi).character;
    rhs += std::pow(Md, mu) / mu * log_derivative_at_one(conjugate(inducer));
  }
  Verification v;
  v.job = "cal_osc";
  v.parameters = "M=" + std::to_string(M) + ";mu=" + detail::format_g(mu) + ";chi=" + chi.label() +
                 ";zeros=" + std::to_string(zeros.size());
  v.lhs = lhs.value();
  v.rhs = rhs.value();
  v.residual = std::abs(v.lhs - v.rhs);
  v.normalization = Md * std::log(2.0 * static_cast<double>(chi.modulus())) * std::log(Md);
  v.ratio = v.residual / v.normalization;
  return v;
}

}  // namespace goldbach
