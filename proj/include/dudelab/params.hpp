#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "dudelab/errors.hpp"

namespace dudelab {

enum class TierId { Macro, Small };

// Joint downlink/uplink association outcome of the typical device.
//   Case1: DL macro, UL macro      Case2: DL macro, UL small
//   Case3: DL small, UL macro      Case4: DL small, UL small
// Case3 has probability zero whenever q_s/q_m >= p_s/p_m (condition (1)),
// which validation enforces.
enum class AssociationCase { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

inline const char* tier_name(TierId t) { return t == TierId::Macro ? "macro" : "small"; }

// Zero-based slot for per-case arrays (the enum itself is 1-based to match
// the conventional case numbering).
inline constexpr std::size_t case_index(AssociationCase c) {
  return static_cast<std::size_t>(c) - 1;
}

inline constexpr AssociationCase case_from_index(std::size_t i) {
  return static_cast<AssociationCase>(i + 1);
}

// Physical model parameters. Internal units: per km^2, watts, Hz.
// Defaults are the canonical two-tier scenario: macro 1/km^2 @ 46 dBm DL,
// small 10/km^2 @ 20 dBm DL, UL powers 20/10 dBm, alpha 3, interference-limited
// (zero noise), 180 kHz resource bandwidth, 35% amplifier efficiency, 50 mW
// circuit power.
struct SystemParams {
  double lambda_m = 1.0;    // macro BS density [1/km^2]
  double lambda_s = 10.0;   // small BS density [1/km^2]
  double p_m = 39.810717055349734;  // macro DL power [W] (46 dBm)
  double p_s = 0.1;                 // small DL power [W] (20 dBm)
  double q_m = 0.1;    // UL power toward macro [W] (20 dBm)
  double q_s = 0.01;   // UL power toward small [W] (10 dBm)
  double alpha = 3.0;  // path-loss exponent, must exceed 2
  double noise = 0.0;  // receiver noise sigma^2 [W]
  double bandwidth = 180e3;  // W [Hz], enters EE only
  double rho = 0.35;         // power-amplifier efficiency, in (0,1]
  double p_c = 0.05;         // circuit power [W]
};

// Monte Carlo run settings. Zero means "derive from the model": window radii
// come from the sampling-window rules in montecarlo.hpp and the interferer
// density defaults to lambda_m + lambda_s.
struct SimulationParams {
  std::uint64_t drops = 20000;
  double window_radius = 0.0;       // [km]; >0 forces BOTH sampling windows to this radius
  double interferer_density = 0.0;  // [1/km^2]; 0 = lambda_m + lambda_s
  std::uint64_t seed = 1;
};

class ValidatedParams;
inline ValidatedParams validate(const SystemParams& p);

// Proof token: every analytic/Monte-Carlo entry point takes ValidatedParams,
// so unchecked parameter sets cannot reach the math.
class ValidatedParams {
 public:
  const SystemParams& get() const noexcept { return p_; }
  const SystemParams* operator->() const noexcept { return &p_; }

  double q(TierId t) const noexcept { return t == TierId::Macro ? p_.q_m : p_.q_s; }
  double p(TierId t) const noexcept { return t == TierId::Macro ? p_.p_m : p_.p_s; }
  double lambda(TierId t) const noexcept { return t == TierId::Macro ? p_.lambda_m : p_.lambda_s; }

 private:
  friend ValidatedParams validate(const SystemParams&);
  explicit ValidatedParams(const SystemParams& p) : p_(p) {}
  SystemParams p_;
};

// Check order is fixed and documented; the first violated rule names the error.
//   densities > 0, alpha > 2, powers > 0, p_s < p_m,
//   q_s/q_m >= p_s/p_m (condition (1)), noise >= 0,
//   bandwidth > 0, rho in (0,1], p_c >= 0.
// NaNs fail the corresponding positivity/range predicate.
inline ValidatedParams validate(const SystemParams& p) {
  if (!(p.lambda_m > 0.0) || !std::isfinite(p.lambda_m))
    throw ValidationError(ValidationCode::DensityNonPositive, "lambda_m must be finite and > 0");
  if (!(p.lambda_s > 0.0) || !std::isfinite(p.lambda_s))
    throw ValidationError(ValidationCode::DensityNonPositive, "lambda_s must be finite and > 0");
  if (!(p.alpha > 2.0) || !std::isfinite(p.alpha))
    throw ValidationError(ValidationCode::AlphaTooSmall,
                          "alpha must exceed 2 (interference and distance moments diverge otherwise)");
  for (double w : {p.p_m, p.p_s, p.q_m, p.q_s})
    if (!(w > 0.0) || !std::isfinite(w))
      throw ValidationError(ValidationCode::PowerNonPositive, "all transmit powers must be finite and > 0");
  if (!(p.p_s < p.p_m))
    throw ValidationError(ValidationCode::PowerOrderingViolated, "small-tier DL power must be below macro (p_s < p_m)");
  if (!(p.q_s / p.q_m >= p.p_s / p.p_m))
    throw ValidationError(ValidationCode::ConditionOneViolated,
                          "UL power ratio must satisfy q_s/q_m >= p_s/p_m; otherwise Case 3 has positive probability");
  if (!(p.noise >= 0.0) || !std::isfinite(p.noise))
    throw ValidationError(ValidationCode::NegativeNoise, "noise power must be finite and >= 0");
  if (!(p.bandwidth > 0.0) || !std::isfinite(p.bandwidth))
    throw ValidationError(ValidationCode::BandwidthNonPositive, "bandwidth must be finite and > 0");
  if (!(p.rho > 0.0 && p.rho <= 1.0))
    throw ValidationError(ValidationCode::AmpEfficiencyOutOfRange, "amplifier efficiency must lie in (0,1]");
  if (!(p.p_c >= 0.0) || !std::isfinite(p.p_c))
    throw ValidationError(ValidationCode::CircuitPowerNegative, "circuit power must be finite and >= 0");
  return ValidatedParams(p);
}

// Simulation settings get the same treatment. A zero window radius or
// interferer density means "auto", anything else must be a positive number.
inline void validate_simulation(const SimulationParams& s) {
  if (s.drops == 0) throw ValidationError(ValidationCode::DropsZero, "at least one drop required");
  if (s.window_radius != 0.0 && (!(s.window_radius > 0.0) || !std::isfinite(s.window_radius)))
    throw ValidationError(ValidationCode::WindowNonPositive, "window radius must be > 0 (or 0 for auto)");
  if (s.interferer_density != 0.0 &&
      (!(s.interferer_density > 0.0) || !std::isfinite(s.interferer_density)))
    throw ValidationError(ValidationCode::InterfererDensityNonPositive,
                          "interferer density must be > 0 (or 0 for the tier-sum default)");
}

}  // namespace dudelab
