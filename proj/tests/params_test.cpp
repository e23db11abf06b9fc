#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dudelab/params.hpp"
#include "dudelab/units.hpp"

namespace dudelab {
namespace {

TEST(Units, DbmToWattAnchors) {
  EXPECT_DOUBLE_EQ(dbm_to_watt(30.0), 1.0);
  EXPECT_DOUBLE_EQ(dbm_to_watt(0.0), 0.001);
  EXPECT_DOUBLE_EQ(dbm_to_watt(20.0), 0.1);
  EXPECT_DOUBLE_EQ(dbm_to_watt(46.0), 39.810717055349734);
}

TEST(Units, RoundTripAndDomain) {
  for (double dbm : {-10.0, 0.0, 17.5, 46.0}) {
    EXPECT_NEAR(watt_to_dbm(dbm_to_watt(dbm)), dbm, 1e-11);
  }
  EXPECT_THROW(watt_to_dbm(0.0), DomainError);
  EXPECT_THROW(watt_to_dbm(-3.0), DomainError);
  EXPECT_THROW(watt_to_dbm(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(Params, DefaultsValidate) {
  const ValidatedParams vp = validate(SystemParams{});
  EXPECT_DOUBLE_EQ(vp->lambda_s, 10.0);
  EXPECT_DOUBLE_EQ(vp.q(TierId::Macro), 0.1);
  EXPECT_DOUBLE_EQ(vp.q(TierId::Small), 0.01);
  EXPECT_DOUBLE_EQ(vp.p(TierId::Macro), dbm_to_watt(46.0));
  EXPECT_DOUBLE_EQ(vp.lambda(TierId::Small), 10.0);
}

ValidationCode code_of(const SystemParams& p) {
  try {
    validate(p);
  } catch (const ValidationError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected validation to reject the parameter set";
  return ValidationCode::DensityNonPositive;
}

TEST(Params, FirstViolationNamesTheError) {
  SystemParams p;

  p.lambda_m = 0.0;
  EXPECT_EQ(code_of(p), ValidationCode::DensityNonPositive);
  p = {};
  p.lambda_s = -1.0;
  EXPECT_EQ(code_of(p), ValidationCode::DensityNonPositive);
  p = {};
  p.alpha = 2.0;
  EXPECT_EQ(code_of(p), ValidationCode::AlphaTooSmall);
  p = {};
  p.q_s = 0.0;
  EXPECT_EQ(code_of(p), ValidationCode::PowerNonPositive);
  p = {};
  p.p_s = p.p_m;
  EXPECT_EQ(code_of(p), ValidationCode::PowerOrderingViolated);
  p = {};
  p.q_m = 1.0;
  p.q_s = 1e-4;
  p.p_m = 1.0;
  p.p_s = 0.5;
  EXPECT_EQ(code_of(p), ValidationCode::ConditionOneViolated);
  p = {};
  p.noise = -1e-9;
  EXPECT_EQ(code_of(p), ValidationCode::NegativeNoise);
  p = {};
  p.bandwidth = 0.0;
  EXPECT_EQ(code_of(p), ValidationCode::BandwidthNonPositive);
  p = {};
  p.rho = 1.5;
  EXPECT_EQ(code_of(p), ValidationCode::AmpEfficiencyOutOfRange);
  p = {};
  p.rho = 0.0;
  EXPECT_EQ(code_of(p), ValidationCode::AmpEfficiencyOutOfRange);
  p = {};
  p.p_c = -0.01;
  EXPECT_EQ(code_of(p), ValidationCode::CircuitPowerNegative);
}

TEST(Params, NansNeverPass) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int field = 0; field < 8; ++field) {
    SystemParams p;
    switch (field) {
      case 0: p.lambda_m = nan; break;
      case 1: p.lambda_s = nan; break;
      case 2: p.alpha = nan; break;
      case 3: p.p_m = nan; break;
      case 4: p.q_s = nan; break;
      case 5: p.noise = nan; break;
      case 6: p.bandwidth = nan; break;
      case 7: p.rho = nan; break;
    }
    EXPECT_THROW(validate(p), ValidationError) << "field " << field;
  }
}

TEST(Params, ConditionOneBoundaryIsAccepted) {
  // Equality q_s/q_m == p_s/p_m is allowed; only strict violation rejects.
  SystemParams p;
  p.p_m = 4.0;
  p.p_s = 1.0;
  p.q_m = 0.8;
  p.q_s = 0.2;
  EXPECT_NO_THROW(validate(p));
}

TEST(Params, SimulationSettings) {
  SimulationParams s;
  EXPECT_NO_THROW(validate_simulation(s));
  s.drops = 0;
  EXPECT_THROW(validate_simulation(s), ValidationError);
  s = {};
  s.window_radius = -2.0;
  EXPECT_THROW(validate_simulation(s), ValidationError);
  s = {};
  s.interferer_density = -1.0;
  EXPECT_THROW(validate_simulation(s), ValidationError);
  s = {};
  s.window_radius = 5.0;
  s.interferer_density = 11.0;
  EXPECT_NO_THROW(validate_simulation(s));
}

TEST(Params, CaseIndexRoundTrip) {
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(case_index(case_from_index(i)), i);
  EXPECT_EQ(case_index(AssociationCase::Case1), 0u);
  EXPECT_EQ(case_index(AssociationCase::Case4), 3u);
}

TEST(Params, TierNames) {
  EXPECT_STREQ(tier_name(TierId::Macro), "macro");
  EXPECT_STREQ(tier_name(TierId::Small), "small");
}

}  // namespace
}  // namespace dudelab
