#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <thread>
#include <vector>

#include "dudelab/analytic.hpp"
#include "dudelab/errors.hpp"
#include "dudelab/params.hpp"
#include "dudelab/rng.hpp"

namespace dudelab {

struct Point {
  double x = 0.0;
  double y = 0.0;
};
using PointPattern = std::vector<Point>;

// Homogeneous PPP on a disk: Poisson count, then i.i.d. uniform positions
// (radius R*sqrt(u), uniform angle).
inline PointPattern sample_ppp(double density, double radius, Xoshiro256pp& rng) {
  if (!(density > 0.0) || !(radius > 0.0))
    throw DomainError("point process needs positive density and radius");
  const std::uint64_t count = rng.poisson(density * kPi * radius * radius);
  PointPattern pts;
  pts.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(rng.uniform01());
    const double phi = 2.0 * kPi * rng.uniform01();
    pts.push_back({r * std::cos(phi), r * std::sin(phi)});
  }
  return pts;
}

// Per-drop sampling geometry, fixed for a whole run.
struct DropWindows {
  double association_radius = 0.0;
  double interferer_radius = 0.0;
  double interferer_density = 0.0;
  double macro_mark_prob = 0.0;  // Pr(interferer transmits at Q_M)
  double far_field_mean = 0.0;   // mean interference from beyond the window
};

// Radius large enough that (a) each tier is empty with probability < 1e-6 per
// drop (exp(-36) at 6 nearest-neighbour scales) and (b) every branch's
// serving distance lies inside with overwhelming margin (3x the 99.9th
// percentile of the widest law).
inline double association_window_radius(const ValidatedParams& vp) {
  const auto& p = vp.get();
  double r = std::max(6.0 / std::sqrt(kPi * p.lambda_m), 6.0 / std::sqrt(kPi * p.lambda_s));
  const CaseProbabilities pr = association_probabilities(vp);
  for (AssociationCase c :
       {AssociationCase::Case1, AssociationCase::Case2, AssociationCase::Case4}) {
    if (pr.of(c) > 0.0)
      r = std::max(r, 3.0 * serving_distance_law(vp, c).quantile(0.999));
  }
  r = std::max(r, 3.0 * coupled_serving_law(vp, TierId::Macro).quantile(0.999));
  return r;
}

namespace detail {

// E[y^alpha] under a law's numerator damped by e^{-pi*g*y^2}, normalized by
// the undamped mass: the distance moment entering the truncation-bias bound.
inline double damped_alpha_moment(const RayLaw& law, double g, double alpha) {
  const double k = 0.5 * alpha + 1.0;
  const double gam = std::tgamma(k);
  const double t1 = std::pow(kPi * (law.a1 + g), -k);
  const double t2 = law.two_term ? std::pow(kPi * (law.a2 + g), -k) : 0.0;
  return kPi * law.n * gam * (t1 - t2) / law.mass();
}

}  // namespace detail

// First-order bound on the P(SINR > 1) bias from dropping interferers beyond
// the window: bias <= (theta/q) * mu_R * E[y^alpha | damped law], with mu_R
// the far-field mean. The radius is sized so the bound holds for every
// branch; the sampler additionally adds mu_R back to the denominator, which
// cancels the first-order term the bound guards against.
inline constexpr double kWindowBiasBudget = 0.002;

inline double interferer_window_radius(const ValidatedParams& vp, double interferer_density) {
  const auto& p = vp.get();
  const double lt = equivalent_interferer_density(vp, interferer_density);
  const double c_alpha = path_loss_constant(p.alpha);
  const double mean_mark =
      (p.lambda_m * p.q_m + p.lambda_s * p.q_s) / (p.lambda_m + p.lambda_s);
  const double theta = 1.0;
  const double e = 2.0 / p.alpha;
  struct Branch {
    RayLaw law;
    double q;
  };
  const CaseProbabilities pr = association_probabilities(vp);
  std::vector<Branch> branches = {
      {serving_distance_law(vp, AssociationCase::Case1), p.q_m},
      {serving_distance_law(vp, AssociationCase::Case4), p.q_s},
      {coupled_serving_law(vp, TierId::Macro), p.q_m},
  };
  if (pr.case2 > 0.0)
    branches.push_back({serving_distance_law(vp, AssociationCase::Case2), p.q_s});
  double radius = 0.0;
  for (const Branch& b : branches) {
    const double g = lt * c_alpha * std::pow(theta / b.q, e);
    const double moment = detail::damped_alpha_moment(b.law, g, p.alpha);
    const double r_pow = (theta / b.q) * moment * 2.0 * kPi * interferer_density * mean_mark /
                         ((p.alpha - 2.0) * kWindowBiasBudget);
    radius = std::max(radius, std::pow(r_pow, 1.0 / (p.alpha - 2.0)));
  }
  return std::max(radius, association_window_radius(vp));
}

inline DropWindows make_drop_windows(const ValidatedParams& vp, const SimulationParams& sim) {
  validate_simulation(sim);
  const auto& p = vp.get();
  DropWindows w;
  w.interferer_density =
      sim.interferer_density > 0.0 ? sim.interferer_density : p.lambda_m + p.lambda_s;
  if (sim.window_radius > 0.0) {
    w.association_radius = sim.window_radius;
    w.interferer_radius = sim.window_radius;
  } else {
    w.association_radius = association_window_radius(vp);
    w.interferer_radius = interferer_window_radius(vp, w.interferer_density);
  }
  w.macro_mark_prob = p.lambda_m / (p.lambda_m + p.lambda_s);
  const double mean_mark =
      (p.lambda_m * p.q_m + p.lambda_s * p.q_s) / (p.lambda_m + p.lambda_s);
  w.far_field_mean = 2.0 * kPi * w.interferer_density * mean_mark *
                     std::pow(w.interferer_radius, 2.0 - p.alpha) / (p.alpha - 2.0);
  return w;
}

// One synthetic network snapshot reduced to the statistics measured at the
// origin: nearest-BS distance per tier, the device's transmit-link fade, and
// the aggregate interference (in-window sum plus the far-field mean). Angles
// never enter origin-measured quantities, so only radii are drawn. The fade
// is shared by every association mode evaluated on the drop, which couples
// the modes through common random numbers.
struct DropRealization {
  double d_macro = 0.0;
  double d_small = 0.0;
  double serving_fade = 1.0;
  double interference = 0.0;    // sum of Z_j * h_j * r_j^{-alpha} inside the window
  double far_field_mean = 0.0;  // added to the SINR denominator
  std::uint32_t interferer_count = 0;
  std::uint32_t resamples = 0;  // empty-tier redraws before this realization
};

namespace detail {

inline double nearest_radius(double mean_count, double radius, Xoshiro256pp& rng, bool& empty) {
  const std::uint64_t n = rng.poisson(mean_count);
  if (n == 0) {
    empty = true;
    return radius;
  }
  double umin = rng.uniform01();
  for (std::uint64_t i = 1; i < n; ++i) umin = std::min(umin, rng.uniform01());
  // min commutes with the monotone map u -> R*sqrt(u), so this equals the
  // smallest of the individually drawn radii.
  return radius * std::sqrt(umin);
}

inline double attenuation(double r, double alpha) {
  return alpha == 3.0 ? 1.0 / (r * r * r) : std::pow(r, -alpha);
}

}  // namespace detail

struct DropSamplerOptions {
  bool with_interference = true;  // off for association-only studies
};

inline DropRealization sample_drop(const ValidatedParams& vp, const DropWindows& w,
                                   Xoshiro256pp& rng, DropSamplerOptions opt = {}) {
  const auto& p = vp.get();
  DropRealization d;
  const double ra = w.association_radius;
  const double mean_m = p.lambda_m * kPi * ra * ra;
  const double mean_s = p.lambda_s * kPi * ra * ra;
  for (;;) {
    bool empty = false;
    d.d_macro = detail::nearest_radius(mean_m, ra, rng, empty);
    d.d_small = detail::nearest_radius(mean_s, ra, rng, empty);
    if (!empty) break;
    ++d.resamples;
  }
  if (!opt.with_interference) return d;
  d.serving_fade = rng.exponential();
  const double ri = w.interferer_radius;
  const std::uint64_t n = rng.poisson(w.interferer_density * kPi * ri * ri);
  d.interferer_count = static_cast<std::uint32_t>(n);
  double sum = 0.0;
  for (std::uint64_t j = 0; j < n; ++j) {
    const double r = ri * std::sqrt(rng.uniform01());
    const double z = rng.uniform01() < w.macro_mark_prob ? p.q_m : p.q_s;
    sum += z * rng.exponential() * detail::attenuation(r, p.alpha);
  }
  d.interference = sum;
  d.far_field_mean = w.far_field_mean;
  return d;
}

struct AssociationOutcome {
  AssociationCase case_id = AssociationCase::Case1;
  TierId dl_tier = TierId::Macro;
  TierId ul_tier = TierId::Macro;
  double dl_distance = 0.0;
  double ul_distance = 0.0;
};

// Max-biased-power association in each direction; ties go to the macro tier.
inline AssociationOutcome associate(const DropRealization& d, const ValidatedParams& vp) {
  const auto& p = vp.get();
  const double am = detail::attenuation(d.d_macro, p.alpha);
  const double as = detail::attenuation(d.d_small, p.alpha);
  const bool dl_macro = p.p_m * am >= p.p_s * as;
  const bool ul_macro = p.q_m * am >= p.q_s * as;
  AssociationOutcome o;
  o.dl_tier = dl_macro ? TierId::Macro : TierId::Small;
  o.ul_tier = ul_macro ? TierId::Macro : TierId::Small;
  o.dl_distance = dl_macro ? d.d_macro : d.d_small;
  o.ul_distance = ul_macro ? d.d_macro : d.d_small;
  o.case_id = dl_macro ? (ul_macro ? AssociationCase::Case1 : AssociationCase::Case2)
                       : (ul_macro ? AssociationCase::Case3 : AssociationCase::Case4);
  return o;
}

// DL-max baseline: the UL is forced onto the DL serving BS.
inline AssociationOutcome coupled_baseline(const DropRealization& d, const ValidatedParams& vp) {
  AssociationOutcome o = associate(d, vp);
  o.ul_tier = o.dl_tier;
  o.ul_distance = o.dl_distance;
  o.case_id =
      o.dl_tier == TierId::Macro ? AssociationCase::Case1 : AssociationCase::Case4;
  return o;
}

inline double ul_sinr(const DropRealization& d, const AssociationOutcome& o,
                      const ValidatedParams& vp) {
  const auto& p = vp.get();
  const double signal =
      vp.q(o.ul_tier) * detail::attenuation(o.ul_distance, p.alpha) * d.serving_fade;
  return signal / (p.noise + d.interference + d.far_field_mean);
}

struct CaseEstimate {
  std::uint64_t count = 0;
  double probability = 0.0;
  double se = 0.0;         // mean bit/s/Hz among this branch's drops
  double se_stderr = 0.0;  // standard error of that mean
  double ee = 0.0;         // bandwidth * se / P_tot(branch)
};

// One association mode's estimates. The coupled mode occupies the Case1 slot
// with its macro branch and the Case4 slot with its small branch.
struct McEstimates {
  std::array<CaseEstimate, 4> by_case{};
  double se_avg = 0.0;
  double se_avg_stderr = 0.0;
  double ee_avg = 0.0;
  double ee_avg_stderr = 0.0;

  const CaseEstimate& of(AssociationCase c) const { return by_case[case_index(c)]; }
};

struct McResult {
  McEstimates decoupled;
  McEstimates coupled;
  std::uint64_t drops = 0;
  std::uint64_t resamples = 0;
  std::uint64_t dominance_violations = 0;  // drops where coupled SINR beat decoupled
  double association_radius = 0.0;
  double interferer_radius = 0.0;
  double mean_interferers_per_drop = 0.0;
  // UL serving distances per decoupled case, in drop order (when collected).
  std::array<std::vector<double>, 4> ul_distances{};
};

struct McOptions {
  unsigned workers = 0;  // 0: DUDE_LAB_THREADS env var, else hardware
  bool with_interference = true;
  bool collect_distances = false;
};

namespace detail {

struct BranchStats {
  std::uint64_t count = 0;
  double se_sum = 0.0;
  double se_sumsq = 0.0;

  void add(double se) {
    ++count;
    se_sum += se;
    se_sumsq += se * se;
  }
  void merge(const BranchStats& o) {
    count += o.count;
    se_sum += o.se_sum;
    se_sumsq += o.se_sumsq;
  }
};

struct BlockAccum {
  std::array<BranchStats, 4> dec{};
  BranchStats coup_macro, coup_small;
  std::uint64_t resamples = 0;
  std::uint64_t violations = 0;
  std::uint64_t interferers = 0;
  std::array<std::vector<double>, 4> distances{};
};

inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return std::min(requested, 256u);
  if (const char* env = std::getenv("DUDE_LAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Standard error of a per-drop mean over all drops, from Σx and Σx².
inline double mean_stderr(double sum, double sumsq, double n) {
  if (n < 2.0) return 0.0;
  const double mean = sum / n;
  const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
  return std::sqrt(var / n);
}

inline void finalize_branch(const BranchStats& s, double drops, double bandwidth, double p_tot,
                            CaseEstimate& out) {
  out.count = s.count;
  out.probability = static_cast<double>(s.count) / drops;
  if (s.count == 0) return;
  const double n = static_cast<double>(s.count);
  out.se = s.se_sum / n;
  if (s.count > 1) {
    const double var = std::max(0.0, (s.se_sumsq - n * out.se * out.se) / (n - 1.0));
    out.se_stderr = std::sqrt(var / n);
  }
  out.ee = bandwidth * out.se / p_tot;
}

}  // namespace detail

// Fixed-seed, block-deterministic estimator for both association modes. Every
// drop runs on its own substream keyed by the drop index, drops are grouped
// into fixed blocks claimed atomically by workers, and per-block accumulators
// are merged in block order afterwards, so results are bit-identical for any
// worker count.
inline McResult run_monte_carlo(const ValidatedParams& vp, const SimulationParams& sim,
                                McOptions opt = {}) {
  validate_simulation(sim);
  const DropWindows w = make_drop_windows(vp, sim);
  const std::uint64_t drops = sim.drops;
  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t nblocks = (drops + kBlock - 1) / kBlock;
  const unsigned workers = std::min<std::uint64_t>(detail::resolve_workers(opt.workers), nblocks);
  const DropSamplerOptions sampler{opt.with_interference};
  const auto& p = vp.get();

  std::vector<detail::BlockAccum> blocks(nblocks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= nblocks) return;
      detail::BlockAccum& acc = blocks[b];
      const std::uint64_t lo = b * kBlock;
      const std::uint64_t hi = std::min(drops, lo + kBlock);
      for (std::uint64_t i = lo; i < hi; ++i) {
        Xoshiro256pp rng(drop_seed(sim.seed, i));
        const DropRealization d = sample_drop(vp, w, rng, sampler);
        acc.resamples += d.resamples;
        acc.interferers += d.interferer_count;
        const AssociationOutcome dec = associate(d, vp);
        const std::size_t ci = case_index(dec.case_id);
        if (opt.collect_distances) acc.distances[ci].push_back(dec.ul_distance);
        if (!opt.with_interference) {
          acc.dec[ci].add(0.0);
          continue;
        }
        const AssociationOutcome coup = coupled_baseline(d, vp);
        const double sinr_dec = ul_sinr(d, dec, vp);
        const double sinr_coup = ul_sinr(d, coup, vp);
        if (sinr_dec < sinr_coup) ++acc.violations;
        acc.dec[ci].add(std::log1p(sinr_dec) * std::numbers::log2e);
        const double se_coup = std::log1p(sinr_coup) * std::numbers::log2e;
        (coup.ul_tier == TierId::Macro ? acc.coup_macro : acc.coup_small).add(se_coup);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  detail::BlockAccum total;
  for (detail::BlockAccum& b : blocks) {
    for (std::size_t c = 0; c < 4; ++c) total.dec[c].merge(b.dec[c]);
    total.coup_macro.merge(b.coup_macro);
    total.coup_small.merge(b.coup_small);
    total.resamples += b.resamples;
    total.violations += b.violations;
    total.interferers += b.interferers;
    if (opt.collect_distances)
      for (std::size_t c = 0; c < 4; ++c)
        total.distances[c].insert(total.distances[c].end(), b.distances[c].begin(),
                                  b.distances[c].end());
  }

  McResult r;
  r.drops = drops;
  r.resamples = total.resamples;
  r.dominance_violations = total.violations;
  r.association_radius = w.association_radius;
  r.interferer_radius = w.interferer_radius;
  r.mean_interferers_per_drop = static_cast<double>(total.interferers) / drops;
  r.ul_distances = std::move(total.distances);

  const double dn = static_cast<double>(drops);
  const std::array<double, 4> p_tot = {
      total_power(vp, AssociationCase::Case1), total_power(vp, AssociationCase::Case2),
      total_power(vp, AssociationCase::Case3), total_power(vp, AssociationCase::Case4)};
  detail::BranchStats dec_all;
  double dec_ee_sum = 0.0;
  double dec_ee_sumsq = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    detail::finalize_branch(total.dec[c], dn, p.bandwidth, p_tot[c], r.decoupled.by_case[c]);
    dec_all.merge(total.dec[c]);
    const double weight = p.bandwidth / p_tot[c];
    dec_ee_sum += weight * total.dec[c].se_sum;
    dec_ee_sumsq += weight * weight * total.dec[c].se_sumsq;
  }
  CaseEstimate dec_avg;
  detail::finalize_branch(dec_all, dn, p.bandwidth, 1.0, dec_avg);
  r.decoupled.se_avg = dec_avg.se;
  r.decoupled.se_avg_stderr = dec_avg.se_stderr;
  r.decoupled.ee_avg = dec_ee_sum / dn;
  r.decoupled.ee_avg_stderr = detail::mean_stderr(dec_ee_sum, dec_ee_sumsq, dn);

  const double pt_m = total_power(vp, TierId::Macro);
  const double pt_s = total_power(vp, TierId::Small);
  detail::finalize_branch(total.coup_macro, dn, p.bandwidth, pt_m, r.coupled.by_case[0]);
  detail::finalize_branch(total.coup_small, dn, p.bandwidth, pt_s, r.coupled.by_case[3]);
  detail::BranchStats coup_all = total.coup_macro;
  coup_all.merge(total.coup_small);
  CaseEstimate coup_avg;
  detail::finalize_branch(coup_all, dn, p.bandwidth, 1.0, coup_avg);
  r.coupled.se_avg = coup_avg.se;
  r.coupled.se_avg_stderr = coup_avg.se_stderr;
  const double wm = p.bandwidth / pt_m;
  const double ws = p.bandwidth / pt_s;
  const double coup_ee_sum = wm * total.coup_macro.se_sum + ws * total.coup_small.se_sum;
  r.coupled.ee_avg = coup_ee_sum / dn;
  r.coupled.ee_avg_stderr = detail::mean_stderr(
      coup_ee_sum, wm * wm * total.coup_macro.se_sumsq + ws * ws * total.coup_small.se_sumsq, dn);
  return r;
}

// Finite-window displacement equivalence, exact by construction: a point at
// radius r with transmit power Z is equivalent (for interference at the
// origin) to a unit-power point at r * Z^{-1/alpha}. Generating the marked
// field on the disk that can reach the clip radius and discarding displaced
// points beyond it yields exactly a unit-mark PPP of the equivalent density
// on the clip disk; `direct` samples that process outright for comparison.
struct DisplacementSamples {
  std::vector<double> displaced;
  std::vector<double> direct;
};

inline DisplacementSamples displacement_radius_samples(const ValidatedParams& vp,
                                                       double interferer_density,
                                                       double clip_radius,
                                                       std::size_t min_samples,
                                                       std::uint64_t seed) {
  const auto& p = vp.get();
  const double inv_alpha = 1.0 / p.alpha;
  const double gen_radius = clip_radius * std::pow(std::max(p.q_m, p.q_s), inv_alpha);
  const double lt = equivalent_interferer_density(vp, interferer_density);
  const double pmac = p.lambda_m / (p.lambda_m + p.lambda_s);
  DisplacementSamples out;
  Xoshiro256pp marked(drop_seed(seed, 0));
  while (out.displaced.size() < min_samples) {
    const std::uint64_t n = marked.poisson(interferer_density * kPi * gen_radius * gen_radius);
    for (std::uint64_t j = 0; j < n; ++j) {
      const double r = gen_radius * std::sqrt(marked.uniform01());
      const double z = marked.uniform01() < pmac ? p.q_m : p.q_s;
      const double displaced = r * std::pow(z, -inv_alpha);
      if (displaced <= clip_radius) out.displaced.push_back(displaced);
    }
  }
  Xoshiro256pp unit(drop_seed(seed, 1));
  while (out.direct.size() < min_samples) {
    const std::uint64_t n = unit.poisson(lt * kPi * clip_radius * clip_radius);
    for (std::uint64_t j = 0; j < n; ++j)
      out.direct.push_back(clip_radius * std::sqrt(unit.uniform01()));
  }
  return out;
}

// Interference functionals for the same equivalence, one value per field
// realization. The marked side sums Z*h*r^-alpha over a two-power field and
// is windowed by its equivalent (displaced) radius so both sides describe the
// same region; the unit side sums h*d^-alpha over a unit-mark field of the
// equivalent density. The two streams are independent, so their empirical
// Laplace transforms agree only if the equivalence actually holds.
struct InterferenceSamples {
  std::vector<double> marked;
  std::vector<double> unit;
};

inline InterferenceSamples displacement_interference_samples(const ValidatedParams& vp,
                                                             double interferer_density,
                                                             double clip_radius,
                                                             std::size_t realizations,
                                                             std::uint64_t seed) {
  const auto& p = vp.get();
  const double inv_alpha = 1.0 / p.alpha;
  const double gen_radius = clip_radius * std::pow(std::max(p.q_m, p.q_s), inv_alpha);
  const double lt = equivalent_interferer_density(vp, interferer_density);
  const double pmac = p.lambda_m / (p.lambda_m + p.lambda_s);
  InterferenceSamples out;
  out.marked.reserve(realizations);
  out.unit.reserve(realizations);
  Xoshiro256pp marked(drop_seed(seed, 0));
  for (std::size_t i = 0; i < realizations; ++i) {
    const std::uint64_t n = marked.poisson(interferer_density * kPi * gen_radius * gen_radius);
    double total = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
      const double r = gen_radius * std::sqrt(marked.uniform01());
      const double z = marked.uniform01() < pmac ? p.q_m : p.q_s;
      if (r * std::pow(z, -inv_alpha) > clip_radius) continue;
      total += z * marked.exponential() * detail::attenuation(r, p.alpha);
    }
    out.marked.push_back(total);
  }
  Xoshiro256pp unit(drop_seed(seed, 1));
  for (std::size_t i = 0; i < realizations; ++i) {
    const std::uint64_t n = unit.poisson(lt * kPi * clip_radius * clip_radius);
    double total = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
      const double d = clip_radius * std::sqrt(unit.uniform01());
      total += unit.exponential() * detail::attenuation(d, p.alpha);
    }
    out.unit.push_back(total);
  }
  return out;
}

// Empirical Laplace transform E[exp(-s I)] of interference samples, with the
// standard error of that mean.
struct LaplacePoint {
  double value = 0.0;
  double stderr_ = 0.0;
};

inline LaplacePoint empirical_laplace(const std::vector<double>& samples, double s) {
  if (samples.size() < 2) throw DomainError("empirical_laplace needs at least two samples");
  double sum = 0.0, sumsq = 0.0;
  for (double x : samples) {
    const double e = std::exp(-s * x);
    sum += e;
    sumsq += e * e;
  }
  const double n = static_cast<double>(samples.size());
  LaplacePoint out;
  out.value = sum / n;
  out.stderr_ = detail::mean_stderr(sum, sumsq, n);
  return out;
}

}  // namespace dudelab
