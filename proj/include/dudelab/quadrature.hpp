#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dudelab/errors.hpp"

namespace dudelab {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_panels = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // achieved error estimate
  int panels = 1;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1,1], positive half.
// Even entries of kx are Kronrod-only nodes, odd entries are the Gauss-7 nodes.
inline constexpr double kx[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr double kw[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr double gw[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct Panel {
  double a, b;
  double value;  // K15 estimate
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One K15/G7 pass over [a,b]. The error estimate follows the classic
// QUADPACK recipe: scale |K15-G7| by the integrand's variation so smooth
// panels are not flagged merely for being large.
template <typename F>
Panel evaluate_panel(F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  double fv[15];
  fv[14] = f(mid);
  for (int i = 0; i < 7; ++i) {
    fv[2 * i] = f(mid - half * kx[i]);
    fv[2 * i + 1] = f(mid + half * kx[i]);
  }

  double resk = kw[7] * fv[14];
  double resg = gw[3] * fv[14];
  for (int i = 0; i < 7; ++i) {
    const double pair = fv[2 * i] + fv[2 * i + 1];
    resk += kw[i] * pair;
    if (i % 2 == 1) resg += gw[i / 2] * pair;
  }
  resk *= half;
  resg *= half;

  const double mean = resk / (b - a);
  double resasc = kw[7] * std::abs(fv[14] - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kw[i] * (std::abs(fv[2 * i] - mean) + std::abs(fv[2 * i + 1] - mean));
  resasc *= std::abs(half);

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (!std::isfinite(resk) || !std::isfinite(err))
    throw DomainError("integrand evaluated to a non-finite value");
  return Panel{a, b, resk, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod on [a,b]: repeatedly bisect the panel with
// the worst error estimate until the total satisfies
// max(abs_tol, rel_tol*|integral|). All nodes are interior, so integrable
// endpoint singularities are never evaluated directly.
template <typename F>
QuadratureResult integrate_finite(F&& f, double a, double b, QuadratureOptions opt = {}) {
  if (a == b) return {0.0, 0.0, 0};
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::vector<detail::Panel> heap;
  heap.push_back(detail::evaluate_panel(f, a, b));

  while (true) {
    double total = 0.0, err = 0.0;
    for (const auto& p : heap) {
      total += p.value;
      err += p.error;
    }
    if (err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)))
      return {sign * total, err, static_cast<int>(heap.size())};
    if (static_cast<int>(heap.size()) >= opt.max_panels)
      throw IntegrationFailure("adaptive quadrature hit the panel limit", sign * total, err);

    std::pop_heap(heap.begin(), heap.end());
    const detail::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(detail::evaluate_panel(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(detail::evaluate_panel(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end());
  }
}

// Integral over [lo, infinity) via the algebraic map x = lo + s*u/(1-u)^2
// with jacobian s*(1+u)/(1-u)^3, u in [0,1). The quadratic denominator keeps
// enough node resolution near u=1 to pin down slowly decaying algebraic
// tails, which a simple u/(1-u) map cannot do past ~1e-8 in double precision.
// `scale` (s) must match the integrand's characteristic width: a feature much
// narrower than s sits below the first panel's lowest node, where the initial
// K15 pass sees a flat zero and converges to it.
template <typename F>
QuadratureResult integrate_semi_infinite(F&& f, double lo, QuadratureOptions opt = {},
                                         double scale = 1.0) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw DomainError("semi-infinite map needs a positive finite scale");
  auto mapped = [&f, lo, scale](double u) {
    const double om = 1.0 - u;
    const double x = lo + scale * u / (om * om);
    const double jac = scale * (1.0 + u) / (om * om * om);
    return f(x) * jac;
  };
  return integrate_finite(mapped, 0.0, 1.0, opt);
}

}  // namespace dudelab
