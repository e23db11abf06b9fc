#include <gtest/gtest.h>

#include <vector>

#include "dudelab/ks.hpp"
#include "dudelab/rng.hpp"

namespace dudelab {
namespace {

TEST(Ks, HandComputedOneSample) {
  // Against U[0,1]: the largest gap sits just before the middle sample.
  const std::vector<double> samples = {0.9, 0.1, 0.25};
  const double d = ks_statistic(samples, [](double x) { return x; });
  EXPECT_NEAR(d, 2.0 / 3.0 - 0.25, 1e-15);
}

TEST(Ks, RejectsTinySamplesAndBadCdfs) {
  EXPECT_THROW(ks_statistic({1.0}, [](double) { return 0.5; }), DomainError);
  EXPECT_THROW(ks_statistic({1.0, 2.0}, [](double x) { return x; }), DomainError);
  EXPECT_THROW(ks_two_sample({1.0}, {1.0, 2.0}), DomainError);
}

TEST(Ks, UniformSamplesPassAtTheCriticalValue) {
  Xoshiro256pp rng(123);
  std::vector<double> samples(20'000);
  for (double& s : samples) s = rng.uniform01();
  const double d = ks_statistic(samples, [](double x) { return x; });
  EXPECT_LT(d, ks_critical_value(samples.size(), 1.63));
}

TEST(Ks, ShiftedDistributionIsDetected) {
  Xoshiro256pp rng(123);
  std::vector<double> samples(20'000);
  for (double& s : samples) s = 0.8 * rng.uniform01();
  const double d = ks_statistic(samples, [](double x) { return x; });
  EXPECT_GT(d, 10.0 * ks_critical_value(samples.size(), 1.63));
}

TEST(Ks, HandComputedTwoSample) {
  const double d = ks_two_sample({1.0, 2.0}, {1.5, 3.0});
  EXPECT_NEAR(d, 0.5, 1e-15);
}

TEST(Ks, TwoSampleExtremes) {
  EXPECT_NEAR(ks_two_sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}), 0.0, 1e-15);
  EXPECT_NEAR(ks_two_sample({1.0, 2.0}, {10.0, 20.0}), 1.0, 1e-15);
}

TEST(Ks, TwoSampleSameLawStaysBelowCritical) {
  Xoshiro256pp rng(7);
  std::vector<double> a(30'000), b(40'000);
  for (double& s : a) s = rng.exponential();
  for (double& s : b) s = rng.exponential();
  EXPECT_LT(ks_two_sample(a, b), ks_two_sample_critical_value(a.size(), b.size(), 1.63));
}

TEST(Ks, CriticalValueFormulas) {
  EXPECT_NEAR(ks_critical_value(10'000, 1.36), 0.0136, 1e-12);
  EXPECT_NEAR(ks_two_sample_critical_value(10'000, 10'000, 1.63),
              1.63 * std::sqrt(2.0 / 10'000.0), 1e-12);
}

}  // namespace
}  // namespace dudelab
