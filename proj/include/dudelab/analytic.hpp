#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dudelab/errors.hpp"
#include "dudelab/params.hpp"
#include "dudelab/quadrature.hpp"

namespace dudelab {

inline constexpr double kPi = 3.141592653589793;

// C(alpha) = integral_0^inf du/(1+u^{alpha/2}) = (2*pi/alpha)/sin(2*pi/alpha),
// the constant of the interference Laplace functional.
inline double path_loss_constant(double alpha) {
  if (!(alpha > 2.0))
    throw DivergentIntegral("path-loss constant diverges for alpha <= 2");
  const double s = 2.0 * kPi / alpha;
  return s / std::sin(s);
}

// Same constant by direct quadrature; the independent cross-check of the
// closed form. Split at u=1 with the tail mapped through u -> 1/w: the slow
// algebraic tail becomes an integrable singularity at w=0, where panel
// endpoints can keep halving for hundreds of binades. (A single semi-infinite
// map stalls near 1e-8 for small alpha because endpoints near u=1 are
// quantized at ulp(1).)
inline double path_loss_constant_quadrature(double alpha,
                                            QuadratureOptions opt = {1e-12, 1e-14, 2000}) {
  if (!(alpha > 2.0))
    throw DivergentIntegral("path-loss constant diverges for alpha <= 2");
  const double s = 0.5 * alpha;
  const auto head =
      integrate_finite([s](double u) { return 1.0 / (1.0 + std::pow(u, s)); }, 0.0, 1.0, opt);
  const auto tail = integrate_finite(
      [s](double w) { return std::pow(w, s - 2.0) / (1.0 + std::pow(w, s)); }, 0.0, 1.0, opt);
  return head.value + tail.value;
}

// Density of the unit-power interferer process equivalent (for Laplace
// transforms) to heterogeneous-power interferers at density lambda_i whose
// marks are Q_M w.p. lambda_m/(lambda_m+lambda_s), else Q_S.
inline double equivalent_interferer_density(const ValidatedParams& vp, double interferer_density) {
  const auto& p = vp.get();
  const double e = 2.0 / p.alpha;
  const double total = p.lambda_m + p.lambda_s;
  return interferer_density *
         (std::pow(p.q_m, e) * p.lambda_m / total + std::pow(p.q_s, e) * p.lambda_s / total);
}

inline double equivalent_interferer_density(const ValidatedParams& vp) {
  return equivalent_interferer_density(vp, vp->lambda_m + vp->lambda_s);
}

// The two biased-association ratios, computed from the >=1 orientation
// (q_m/q_s, p_m/p_s) and inverted. Reason: the probabilities must be exactly
// invariant under common scaling of a power pair, and the large-side ratio of
// the canonical parameter points is exactly representable (integer powers of
// ten), so its bits survive the scaling while the small-side quotient can
// move by an ulp.
struct PowerRatios {
  double kq;     // (q_m/q_s)^(2/alpha)
  double kp;     // (p_m/p_s)^(2/alpha)
  double rho_q;  // 1/kq
  double rho_p;  // 1/kp
};

inline PowerRatios power_ratios(const ValidatedParams& vp) {
  const auto& p = vp.get();
  const double e = 2.0 / p.alpha;
  PowerRatios r;
  r.kq = std::pow(p.q_m / p.q_s, e);
  r.kp = std::pow(p.p_m / p.p_s, e);
  r.rho_q = 1.0 / r.kq;
  r.rho_p = 1.0 / r.kp;
  return r;
}

struct CaseProbabilities {
  double case1 = 0.0, case2 = 0.0, case3 = 0.0, case4 = 0.0;
  double dl_macro = 0.0;  // Pr(DL tier = Macro) = case1 + case2

  double sum() const { return case1 + case2 + case3 + case4; }
  double of(AssociationCase c) const {
    switch (c) {
      case AssociationCase::Case1: return case1;
      case AssociationCase::Case2: return case2;
      case AssociationCase::Case3: return case3;
      case AssociationCase::Case4: return case4;
    }
    return 0.0;
  }
};

// Pr(Case1) = lam_m/(lam_m + rho_q*lam_s); Pr(Case2) = DL-macro minus Case1;
// Pr(Case3) = 0 under the validated power ordering; Pr(Case4) uses the
// self-normalizing numerator rho_p*lam_s so the four sum to 1 (the widely
// tabulated lam_m numerator cannot; see legacy_case4_probability).
inline CaseProbabilities association_probabilities(const ValidatedParams& vp) {
  const auto& p = vp.get();
  const PowerRatios r = power_ratios(vp);
  const double d_q = p.lambda_m + r.rho_q * p.lambda_s;
  const double d_p = p.lambda_m + r.rho_p * p.lambda_s;
  CaseProbabilities out;
  out.case1 = p.lambda_m / d_q;
  out.dl_macro = p.lambda_m / d_p;
  out.case2 = out.dl_macro - out.case1;
  // The subtraction is nonnegative whenever kq <= kp; on the exact boundary of
  // the power-ordering condition FP can leave an ulp-scale residue.
  if (out.case2 < 0.0) out.case2 = 0.0;
  out.case3 = 0.0;
  out.case4 = r.rho_p * p.lambda_s / d_p;
  return out;
}

// The legacy tabulated Case-4 closed form has lambda_m in the numerator and
// therefore evaluates to the complement of the correct probability; kept so
// validation can show the resulting sum>1 defect with its predicted gap.
inline double legacy_case4_probability(const ValidatedParams& vp) {
  const auto& p = vp.get();
  const PowerRatios r = power_ratios(vp);
  return p.lambda_m / (p.lambda_m + r.rho_p * p.lambda_s);
}

// By how much the four legacy probabilities overshoot 1:
// |lam_m - rho_p*lam_s| / (lam_m + rho_p*lam_s).
inline double legacy_probability_gap(const ValidatedParams& vp) {
  const auto& p = vp.get();
  const PowerRatios r = power_ratios(vp);
  return std::abs(p.lambda_m - r.rho_p * p.lambda_s) / (p.lambda_m + r.rho_p * p.lambda_s);
}

// One- or two-term Rayleigh-type radial law:
//   numerator(x) = 2*pi*n*x*(e^{-pi*a1*x^2} - [two_term] e^{-pi*a2*x^2}),
// total mass n/a1 - [two_term] n/a2. Every serving-distance law in the model
// (both variants, both association modes) takes this shape.
struct RayLaw {
  double n = 1.0;
  double a1 = 1.0;
  double a2 = 0.0;
  bool two_term = false;

  double mass() const { return two_term ? n / a1 - n / a2 : n / a1; }

  double numerator(double x) const {
    const double x2 = x * x;
    const double t1 = std::exp(-kPi * a1 * x2);
    const double t2 = two_term ? std::exp(-kPi * a2 * x2) : 0.0;
    return 2.0 * kPi * n * x * (t1 - t2);
  }

  double pdf(double x) const { return numerator(x) / mass(); }

  double cdf(double x) const {
    const double x2 = x * x;
    const double f1 = (n / a1) * -std::expm1(-kPi * a1 * x2);
    const double f2 = two_term ? (n / a2) * -std::expm1(-kPi * a2 * x2) : 0.0;
    return std::clamp((f1 - f2) / mass(), 0.0, 1.0);
  }

  // Mass damped by a Gaussian factor e^{-pi*g*x^2}; the zero-noise closed
  // form behind the SINR quadrature, kept as an independent cross-check.
  double damped_mass(double g) const {
    return two_term ? n / (a1 + g) - n / (a2 + g) : n / (a1 + g);
  }

  // cdf inverse by bracketed bisection (cdf is strictly increasing on the
  // support); deterministic, accurate to ~1 ulp of the bracket.
  double quantile(double prob) const {
    if (!(prob >= 0.0 && prob < 1.0)) throw DomainError("quantile level must be in [0,1)");
    if (prob == 0.0) return 0.0;
    double hi = 1.0 / std::sqrt(a1);
    while (cdf(hi) < prob) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (cdf(mid) < prob ? lo : hi) = mid;
    }
    return hi;
  }
};

// Distance-law family: Consistent is the joint-region derivation of the
// serving-tier distance; Legacy reproduces the widely tabulated Case-1/2
// forms (built from the opposite tier's contact law), kept for comparison.
// Both families integrate to the correct case probabilities.
enum class PdfVariant { Consistent, Legacy };

inline TierId ul_tier_of(AssociationCase c) {
  return (c == AssociationCase::Case1 || c == AssociationCase::Case3) ? TierId::Macro
                                                                      : TierId::Small;
}

inline RayLaw serving_distance_law(const ValidatedParams& vp, AssociationCase c,
                                   PdfVariant variant = PdfVariant::Consistent) {
  const auto& p = vp.get();
  const PowerRatios r = power_ratios(vp);
  switch (c) {
    case AssociationCase::Case1:
      if (variant == PdfVariant::Consistent)
        return {p.lambda_m, p.lambda_m + r.rho_q * p.lambda_s};
      return {p.lambda_s, p.lambda_s, p.lambda_s + r.kq * p.lambda_m, true};
    case AssociationCase::Case2:
      if (variant == PdfVariant::Consistent)
        return {p.lambda_s, p.lambda_s + r.kq * p.lambda_m, p.lambda_s + r.kp * p.lambda_m, true};
      return {p.lambda_m, p.lambda_m + r.rho_p * p.lambda_s, p.lambda_m + r.rho_q * p.lambda_s,
              true};
    case AssociationCase::Case4:
      // Both variants agree here.
      return {p.lambda_s, p.lambda_s + r.kp * p.lambda_m};
    case AssociationCase::Case3:
      break;
  }
  throw InfeasibleCase("Case 3 has probability zero under the validated power ordering");
}

inline double serving_distance_pdf(const ValidatedParams& vp, AssociationCase c, double x,
                                   PdfVariant variant = PdfVariant::Consistent) {
  if (!(x >= 0.0)) throw DomainError("distance must be nonnegative");
  return serving_distance_law(vp, c, variant).pdf(x);
}

inline double serving_distance_cdf(const ValidatedParams& vp, AssociationCase c, double x,
                                   PdfVariant variant = PdfVariant::Consistent) {
  if (!(x >= 0.0)) throw DomainError("distance must be nonnegative");
  return serving_distance_law(vp, c, variant).cdf(x);
}

// DL-max association baseline (no decoupling): the UL is served by the DL
// tier. The macro branch sees the biased DL law; the small branch coincides
// with the decoupled Case-4 law (under the validated power ordering, DL=Small
// implies UL=Small with the same conditioning).
inline RayLaw coupled_serving_law(const ValidatedParams& vp, TierId t) {
  const auto& p = vp.get();
  const PowerRatios r = power_ratios(vp);
  if (t == TierId::Macro) return {p.lambda_m, p.lambda_m + r.rho_p * p.lambda_s};
  return {p.lambda_s, p.lambda_s + r.kp * p.lambda_m};
}

namespace detail {

// P(SINR > theta) for a serving law with UL power q: quadrature of the law's
// numerator against the noise factor e^{-theta*sigma^2*y^alpha/q} and the
// interference Laplace factor e^{-pi*lt*C(alpha)*(theta/q)^{2/alpha}*y^2},
// normalized by the law's mass. One path for all noise levels; the zero-noise
// closed form (RayLaw::damped_mass) stays an independent check.
inline double law_sinr_ccdf(const ValidatedParams& vp, const RayLaw& law, double q, double theta,
                            const QuadratureOptions& opt) {
  if (!(theta >= 0.0)) throw DomainError("SINR threshold must be nonnegative");
  if (theta == 0.0) return 1.0;
  const double mass = law.mass();
  if (!(mass > 0.0)) throw InfeasibleCase("conditional law has zero probability");
  const auto& p = vp.get();
  const double e = 2.0 / p.alpha;
  const double g = equivalent_interferer_density(vp) * std::pow(theta / q, e) *
                   path_loss_constant(p.alpha);
  if (!std::isfinite(g)) return 0.0;  // threshold beyond representable range: no survivors
  const double noise_rate = theta * p.noise / q;
  const double alpha = p.alpha;
  auto integrand = [&law, g, noise_rate, alpha](double y) {
    const double y2 = y * y;
    double ex = -kPi * g * y2;
    if (noise_rate != 0.0)
      ex -= noise_rate * (alpha == 3.0 ? y2 * y : std::pow(y, alpha));
    const double t1 = std::exp(-kPi * law.a1 * y2 + ex);
    const double t2 = law.two_term ? std::exp(-kPi * law.a2 * y2 + ex) : 0.0;
    return 2.0 * kPi * law.n * y * (t1 - t2);
  };
  // The integrand is a bump whose width shrinks with the interference and
  // noise dampings; hand that width to the variable map so large thresholds
  // keep the bump on the panel nodes.
  double scale = 1.0 / std::sqrt(kPi * (law.a1 + g));
  if (noise_rate > 0.0) scale = std::min(scale, std::pow(noise_rate, -1.0 / alpha));
  const double v = integrate_semi_infinite(integrand, 0.0, opt, scale).value;
  return std::clamp(v / mass, 0.0, 1.0);
}

}  // namespace detail

inline constexpr QuadratureOptions kCcdfQuadrature{1e-10, 1e-13, 2000};
inline constexpr QuadratureOptions kSeQuadrature{1e-7, 1e-10, 2000};

inline double ul_sinr_ccdf(const ValidatedParams& vp, AssociationCase c, double theta,
                           QuadratureOptions opt = kCcdfQuadrature) {
  const RayLaw law = serving_distance_law(vp, c, PdfVariant::Consistent);
  return detail::law_sinr_ccdf(vp, law, vp.q(ul_tier_of(c)), theta, opt);
}

inline double coupled_ul_sinr_ccdf(const ValidatedParams& vp, TierId t, double theta,
                                   QuadratureOptions opt = kCcdfQuadrature) {
  return detail::law_sinr_ccdf(vp, coupled_serving_law(vp, t), vp.q(t), theta, opt);
}

namespace detail {

// SE = (1/ln 2) * integral_0^inf P(SINR > e^t - 1) dt, in bit/s/Hz.
inline double law_spectral_efficiency(const ValidatedParams& vp, const RayLaw& law, double q,
                                      const QuadratureOptions& outer,
                                      const QuadratureOptions& inner) {
  auto integrand = [&](double t) { return law_sinr_ccdf(vp, law, q, std::expm1(t), inner); };
  return integrate_semi_infinite(integrand, 0.0, outer).value / std::numbers::ln2;
}

}  // namespace detail

inline double spectral_efficiency_case(const ValidatedParams& vp, AssociationCase c,
                                       QuadratureOptions outer = kSeQuadrature,
                                       QuadratureOptions inner = kCcdfQuadrature) {
  const RayLaw law = serving_distance_law(vp, c, PdfVariant::Consistent);
  return detail::law_spectral_efficiency(vp, law, vp.q(ul_tier_of(c)), outer, inner);
}

// P_tot = Q_v/rho + P_C for the case's UL tier.
inline double total_power(const ValidatedParams& vp, AssociationCase c) {
  return vp.q(ul_tier_of(c)) / vp->rho + vp->p_c;
}

inline double total_power(const ValidatedParams& vp, TierId t) {
  return vp.q(t) / vp->rho + vp->p_c;
}

inline double energy_efficiency_case(const ValidatedParams& vp, AssociationCase c,
                                     QuadratureOptions outer = kSeQuadrature,
                                     QuadratureOptions inner = kCcdfQuadrature) {
  return vp->bandwidth * spectral_efficiency_case(vp, c, outer, inner) / total_power(vp, c);
}

// Per-case and probability-weighted SE/EE for the decoupled system. Averages
// reuse the same probability and per-case doubles (never re-derived), so
// EE(case)*P_tot/W == SE(case) holds exactly.
struct CaseMetrics {
  CaseProbabilities pr;
  double se_case1 = 0.0, se_case2 = 0.0, se_case4 = 0.0;
  double ee_case1 = 0.0, ee_case2 = 0.0, ee_case4 = 0.0;
  double se_avg = 0.0, ee_avg = 0.0;
};

inline CaseMetrics case_metrics(const ValidatedParams& vp,
                                QuadratureOptions outer = kSeQuadrature,
                                QuadratureOptions inner = kCcdfQuadrature) {
  CaseMetrics m;
  m.pr = association_probabilities(vp);
  m.se_case1 = spectral_efficiency_case(vp, AssociationCase::Case1, outer, inner);
  m.se_case2 =
      m.pr.case2 > 0.0 ? spectral_efficiency_case(vp, AssociationCase::Case2, outer, inner) : 0.0;
  m.se_case4 = spectral_efficiency_case(vp, AssociationCase::Case4, outer, inner);
  const double w = vp->bandwidth;
  m.ee_case1 = w * m.se_case1 / total_power(vp, AssociationCase::Case1);
  m.ee_case2 = w * m.se_case2 / total_power(vp, AssociationCase::Case2);
  m.ee_case4 = w * m.se_case4 / total_power(vp, AssociationCase::Case4);
  m.se_avg = m.pr.case1 * m.se_case1 + m.pr.case2 * m.se_case2 + m.pr.case4 * m.se_case4;
  m.ee_avg = m.pr.case1 * m.ee_case1 + m.pr.case2 * m.ee_case2 + m.pr.case4 * m.ee_case4;
  return m;
}

inline double average_spectral_efficiency(const ValidatedParams& vp,
                                          QuadratureOptions outer = kSeQuadrature,
                                          QuadratureOptions inner = kCcdfQuadrature) {
  return case_metrics(vp, outer, inner).se_avg;
}

inline double average_energy_efficiency(const ValidatedParams& vp,
                                        QuadratureOptions outer = kSeQuadrature,
                                        QuadratureOptions inner = kCcdfQuadrature) {
  return case_metrics(vp, outer, inner).ee_avg;
}

// The coupled (DL-max for both directions) baseline metrics.
struct CoupledMetrics {
  double pr_macro = 0.0, pr_small = 0.0;
  double se_macro = 0.0, se_small = 0.0, se_avg = 0.0;
  double ee_macro = 0.0, ee_small = 0.0, ee_avg = 0.0;
};

inline CoupledMetrics coupled_metrics(const ValidatedParams& vp,
                                      QuadratureOptions outer = kSeQuadrature,
                                      QuadratureOptions inner = kCcdfQuadrature) {
  const auto& p = vp.get();
  const PowerRatios r = power_ratios(vp);
  const double d_p = p.lambda_m + r.rho_p * p.lambda_s;
  CoupledMetrics m;
  m.pr_macro = p.lambda_m / d_p;
  m.pr_small = r.rho_p * p.lambda_s / d_p;
  m.se_macro = detail::law_spectral_efficiency(vp, coupled_serving_law(vp, TierId::Macro),
                                               vp.q(TierId::Macro), outer, inner);
  m.se_small = detail::law_spectral_efficiency(vp, coupled_serving_law(vp, TierId::Small),
                                               vp.q(TierId::Small), outer, inner);
  m.se_avg = m.pr_macro * m.se_macro + m.pr_small * m.se_small;
  m.ee_macro = p.bandwidth * m.se_macro / total_power(vp, TierId::Macro);
  m.ee_small = p.bandwidth * m.se_small / total_power(vp, TierId::Small);
  m.ee_avg = m.pr_macro * m.ee_macro + m.pr_small * m.ee_small;
  return m;
}

}  // namespace dudelab
