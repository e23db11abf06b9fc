#include <gtest/gtest.h>

#include "dudelab/config.hpp"

namespace dudelab {
namespace {

TEST(Config, FullDocumentParsesAndConverts) {
  const Config cfg = parse_config(R"({
    "lambda_m_per_km2": 2.0,
    "lambda_s_per_km2": 30.0,
    "p_m_dbm": 46.0,
    "p_s_dbm": 20.0,
    "q_m_dbm": 20.0,
    "q_s_dbm": 10.0,
    "alpha": 3.5,
    "noise_dbm": -90.0,
    "bandwidth_hz": 200000.0,
    "rho": 0.5,
    "p_c_watt": 0.1,
    "sim": {"drops": 5000, "window_radius_km": 7.5, "seed": 12345,
            "interferer_density_per_km2": 8.0},
    "sweep": {"key": "q_ratio_db", "grid": [-10, 0, 10],
              "scenarios": ["coupled", "decoupled_pa"]}
  })");
  EXPECT_DOUBLE_EQ(cfg.system.lambda_m, 2.0);
  EXPECT_DOUBLE_EQ(cfg.system.lambda_s, 30.0);
  EXPECT_DOUBLE_EQ(cfg.system.p_m, 39.810717055349734);
  EXPECT_DOUBLE_EQ(cfg.system.p_s, 0.1);
  EXPECT_DOUBLE_EQ(cfg.system.q_m, 0.1);
  EXPECT_DOUBLE_EQ(cfg.system.q_s, 0.01);
  EXPECT_DOUBLE_EQ(cfg.system.alpha, 3.5);
  EXPECT_DOUBLE_EQ(cfg.system.noise, dbm_to_watt(-90.0));
  EXPECT_DOUBLE_EQ(cfg.system.bandwidth, 200000.0);
  EXPECT_DOUBLE_EQ(cfg.system.rho, 0.5);
  EXPECT_DOUBLE_EQ(cfg.system.p_c, 0.1);
  ASSERT_TRUE(cfg.has_sim);
  EXPECT_EQ(cfg.sim.drops, 5000u);
  EXPECT_DOUBLE_EQ(cfg.sim.window_radius, 7.5);
  EXPECT_EQ(cfg.sim.seed, 12345u);
  EXPECT_DOUBLE_EQ(cfg.sim.interferer_density, 8.0);
  ASSERT_TRUE(cfg.sweep.has_value());
  EXPECT_EQ(cfg.sweep->key, "q_ratio_db");
  EXPECT_EQ(cfg.sweep->grid, (std::vector<double>{-10, 0, 10}));
  EXPECT_EQ(cfg.sweep->scenarios, (std::vector<std::string>{"coupled", "decoupled_pa"}));
  EXPECT_NO_THROW(validate(cfg.system));
}

TEST(Config, EmptyObjectYieldsDefaults) {
  const Config cfg = parse_config("{}");
  const SystemParams d;
  EXPECT_DOUBLE_EQ(cfg.system.lambda_m, d.lambda_m);
  EXPECT_DOUBLE_EQ(cfg.system.lambda_s, d.lambda_s);
  EXPECT_DOUBLE_EQ(cfg.system.q_m, d.q_m);
  EXPECT_DOUBLE_EQ(cfg.system.noise, 0.0);
  EXPECT_FALSE(cfg.has_sim);
  EXPECT_FALSE(cfg.sweep.has_value());
}

TEST(Config, NoiseAcceptsMinusInfString) {
  EXPECT_DOUBLE_EQ(parse_config(R"({"noise_dbm": "-inf"})").system.noise, 0.0);
  EXPECT_DOUBLE_EQ(parse_config(R"({"noise_dbm": 30.0})").system.noise, 1.0);
  EXPECT_THROW(parse_config(R"({"noise_dbm": "off"})"), ConfigError);
}

TEST(Config, UnknownKeysAreRejectedEverywhere) {
  EXPECT_THROW(parse_config(R"({"lambda_m": 1.0})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sim": {"drop_count": 10}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sweep": {"key": "q_ratio_db", "grid": [1], "mode": "x"}})"),
               ConfigError);
}

TEST(Config, TypeMismatchesAreRejected) {
  EXPECT_THROW(parse_config(R"({"alpha": "three"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sim": {"drops": -5}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sim": {"drops": 2.5}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sim": "fast"})"), ConfigError);
  EXPECT_THROW(parse_config("[1,2,3]"), ConfigError);
  EXPECT_THROW(parse_config("{not json"), ConfigError);
}

TEST(Config, SweepValidationIsStrict) {
  const char* bad_key = R"({"sweep": {"key": "p_m_dbm", "grid": [1, 2]}})";
  EXPECT_THROW(parse_config(bad_key), ConfigError);
  EXPECT_THROW(parse_config(R"({"sweep": {"key": "q_ratio_db", "grid": []}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sweep": {"key": "q_ratio_db", "grid": [2, 1]}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sweep": {"key": "q_ratio_db", "grid": [1, 1]}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"sweep": {"grid": [1, 2]}})"), ConfigError);
  EXPECT_THROW(
      parse_config(R"({"sweep": {"key": "q_ratio_db", "grid": [1], "scenarios": ["x"]}})"),
      ConfigError);
  EXPECT_THROW(parse_config(
                   R"({"sweep": {"key": "q_ratio_db", "grid": [1],
                       "scenarios": ["coupled", "coupled"]}})"),
               ConfigError);
  const Config cfg = parse_config(R"({"sweep": {"key": "lambda_ratio", "grid": [1, 4]}})");
  EXPECT_EQ(cfg.sweep->scenarios, (std::vector<std::string>{"decoupled_pa"}));
}

TEST(Config, PhysicalValidationStaysDownstream) {
  // Condition violations are not the parser's business: this parses fine and
  // only validate() rejects it.
  const Config cfg = parse_config(R"({"q_m_dbm": 20.0, "q_s_dbm": -20.0})");
  EXPECT_THROW(
      {
        try {
          validate(cfg.system);
        } catch (const ValidationError& e) {
          EXPECT_EQ(e.code(), ValidationCode::ConditionOneViolated);
          throw;
        }
      },
      ValidationError);
}

TEST(Config, MissingFileFailsCleanly) {
  EXPECT_THROW(load_config("/nonexistent/path/config.json"), ConfigError);
}

}  // namespace
}  // namespace dudelab
