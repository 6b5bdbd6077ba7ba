#pragma once

// Gauss-Legendre panel rules and a globally adaptive Gauss-Kronrod (7/15)
// integrator with an absolute error target. The rules come from Boost.Math.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "goldbach/complex.hpp"
#include "goldbach/error.hpp"
#include "goldbach/summation.hpp"

namespace goldbach {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// The 20-point Gauss-Legendre rule, expanded from Boost's half-table.
inline const GaussLegendreRule& gauss_legendre20() {
  static const GaussLegendreRule rule = [] {
    using Gauss = boost::math::quadrature::gauss<double, 20>;
    GaussLegendreRule r;
    const auto& x = Gauss::abscissa();
    const auto& w = Gauss::weights();
    for (std::size_t i = x.size(); i-- > 0;) {
      r.nodes.push_back(-x[i]);
      r.weights.push_back(w[i]);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) continue;
      r.nodes.push_back(x[i]);
      r.weights.push_back(w[i]);
    }
    return r;
  }();
  return rule;
}

/// Sum of the rule over `panels` equal panels of [a, b].
template <typename F>
Complex integrate_panels(F&& f, double a, double b, std::size_t panels, const GaussLegendreRule& rule) {
  CompensatedSum<Complex> sum;
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += Complex(f(mid + 0.5 * width * rule.nodes[i])) * (0.5 * width * rule.weights[i]);
    }
  }
  return sum.value();
}

struct QuadratureResult {
  Complex value;
  double error_estimate;
  std::size_t intervals;
};

namespace detail {

struct KronrodSegment {
  double a;
  double b;
  Complex value;
  double error;
  bool operator<(const KronrodSegment& other) const { return error < other.error; }
};

template <typename F>
KronrodSegment kronrod15(F& f, double a, double b) {
  double error = 0.0;
  auto g = [&f](double x) { return Complex(f(x)); };
  const Complex value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(g, a, b, 0, 0.0, &error);
  // Without recursion Boost reports the estimate on the reference interval [-1, 1].
  return {a, b, value, error * 0.5 * (b - a)};
}

}  // namespace detail

/// Globally adaptive 7/15 Gauss-Kronrod on [a, b] with the given initial
/// break points (sorted, inside (a, b)). Throws QuadratureError when the
/// interval budget runs out before |error| <= abs_tol.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    const std::vector<double>& breaks = {}, std::size_t max_intervals = 200000) {
  std::vector<detail::KronrodSegment> heap;
  std::vector<double> cuts{a};
  for (double c : breaks) {
    if (c > cuts.back() && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) heap.push_back(detail::kronrod15(f, cuts[i], cuts[i + 1]));
  std::make_heap(heap.begin(), heap.end());
  // The running total drifts once large early estimates are subtracted out,
  // so it is recomputed from the live segments before any decision.
  auto exact_total = [&heap] {
    CompensatedSum<double> sum;
    for (const auto& s : heap) sum += s.error;
    return sum.value();
  };
  double total_error = exact_total();
  while (total_error > abs_tol || (total_error = exact_total()) > abs_tol) {
    if (heap.size() >= max_intervals) {
      throw QuadratureError("integrate_adaptive: interval budget exhausted, error estimate " +
                            std::to_string(total_error));
    }
    std::pop_heap(heap.begin(), heap.end());
    const auto worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("integrate_adaptive: interval collapsed below double resolution, error estimate " +
                            std::to_string(exact_total() + worst.error));
    }
    auto left = detail::kronrod15(f, worst.a, mid);
    auto right = detail::kronrod15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
  // Sum in position order so the result does not depend on heap layout.
  auto segments = std::move(heap);
  double error = 0.0;
  std::sort(segments.begin(), segments.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  CompensatedSum<Complex> sum;
  for (const auto& s : segments) {
    sum += s.value;
    error += s.error;
  }
  return {sum.value(), error, segments.size()};
}

}  // namespace goldbach
