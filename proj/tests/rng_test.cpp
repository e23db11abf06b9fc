#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <unordered_set>

#include "dudelab/rng.hpp"

namespace dudelab {
namespace {

TEST(Rng, SameSeedSameStream) {
  Xoshiro256pp a(42), b(42);
  for (int i = 0; i < 64; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, DifferentSeedsDiverge) {
  Xoshiro256pp a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 64; ++i) equal += a.next() == b.next();
  EXPECT_LT(equal, 4);
}

TEST(Rng, UniformStaysInHalfOpenUnitInterval) {
  Xoshiro256pp rng(7);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  // mean 1/2, sd 1/sqrt(12n); allow 4 sigma
  EXPECT_NEAR(sum / n, 0.5, 4.0 / std::sqrt(12.0 * n));
}

TEST(Rng, ExponentialMoments) {
  Xoshiro256pp rng(11);
  const int n = 1'000'000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = rng.exponential();
    ASSERT_GE(e, 0.0);
    sum += e;
    sumsq += e * e;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 1.0, 4.0 / std::sqrt(static_cast<double>(n)));
  // second moment of Exp(1) is 2, sd of X^2 is sqrt(20)
  EXPECT_NEAR(sumsq / n, 2.0, 4.0 * std::sqrt(20.0 / n));
}

TEST(Rng, PoissonSmallMean) {
  Xoshiro256pp rng(5);
  const int n = 200'000;
  const double mean = 3.0;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(rng.poisson(mean));
    sum += k;
    sumsq += k * k;
  }
  const double m = sum / n;
  const double v = sumsq / n - m * m;
  EXPECT_NEAR(m, mean, 4.0 * std::sqrt(mean / n));
  EXPECT_NEAR(v, mean, 0.15);
}

TEST(Rng, PoissonChunkedLargeMean) {
  // Exercises the mean-splitting path (mean >> 12) used for interferer counts.
  Xoshiro256pp rng(9);
  const int n = 50'000;
  const double mean = 100.0;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(rng.poisson(mean));
    sum += k;
    sumsq += k * k;
  }
  const double m = sum / n;
  const double v = sumsq / n - m * m;
  EXPECT_NEAR(m, mean, 4.0 * std::sqrt(mean / n));
  EXPECT_NEAR(v, mean, 4.0 * mean * std::sqrt(2.0 / n));
}

TEST(Rng, PoissonDegenerateMeans) {
  Xoshiro256pp rng(3);
  EXPECT_EQ(rng.poisson(0.0), 0u);
  std::uint64_t total = 0;
  for (int i = 0; i < 1000; ++i) total += rng.poisson(1e-9);
  EXPECT_EQ(total, 0u);
}

TEST(Rng, DropSeedsAreDistinctAndBaseSensitive) {
  std::unordered_set<std::uint64_t> seen;
  const int n = 100'000;
  for (int i = 0; i < n; ++i) seen.insert(drop_seed(1, i));
  EXPECT_EQ(seen.size(), static_cast<std::size_t>(n));
  EXPECT_NE(drop_seed(1, 0), drop_seed(2, 0));
  EXPECT_NE(drop_seed(1, 5), drop_seed(1, 6));
}

}  // namespace
}  // namespace dudelab
