#include <gtest/gtest.h>

#include <cmath>

#include "dudelab/quadrature.hpp"

namespace dudelab {
namespace {

TEST(Quadrature, PolynomialIsExactOnOnePanel) {
  const auto r = integrate_finite([](double x) { return x * x; }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(r.panels, 1);
}

TEST(Quadrature, SmoothExponential) {
  const auto r = integrate_finite([](double x) { return std::exp(x); }, 0.0, 1.0,
                                  {1e-13, 1e-15, 2000});
  EXPECT_NEAR(r.value, std::exp(1.0) - 1.0, 1e-12);
  EXPECT_GE(r.error, std::abs(r.value - (std::exp(1.0) - 1.0)));
}

TEST(Quadrature, OrientationAndDegenerateInterval) {
  auto f = [](double x) { return std::cos(x); };
  const double fwd = integrate_finite(f, 0.0, 2.0).value;
  const double rev = integrate_finite(f, 2.0, 0.0).value;
  EXPECT_DOUBLE_EQ(fwd, -rev);
  EXPECT_EQ(integrate_finite(f, 1.0, 1.0).value, 0.0);
}

TEST(Quadrature, EndpointSingularity) {
  // 1/sqrt(x) is never evaluated at 0 (all nodes interior) and the adaptive
  // chain digs the singularity out to the requested tolerance.
  const auto r = integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                  {1e-10, 1e-12, 2000});
  EXPECT_NEAR(r.value, 2.0, 1e-9);
}

TEST(Quadrature, SemiInfiniteExponentialTail) {
  const auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0,
                                         {1e-12, 1e-14, 2000});
  EXPECT_NEAR(r.value, 1.0, 1e-11);
  const auto shifted = integrate_semi_infinite([](double x) { return std::exp(-x); }, 2.0,
                                               {1e-12, 1e-14, 2000});
  EXPECT_NEAR(shifted.value, std::exp(-2.0), 1e-12);
}

TEST(Quadrature, SemiInfiniteGaussian) {
  const auto r = integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0.0,
                                         {1e-12, 1e-14, 2000});
  EXPECT_NEAR(r.value, std::sqrt(3.141592653589793) / 2.0, 1e-12);
}

TEST(Quadrature, SemiInfiniteAlgebraicTail) {
  // Decays like x^-3: slow enough to stress the tail map.
  const auto r = integrate_semi_infinite([](double x) { return std::pow(1.0 + x, -3.0); }, 0.0,
                                         {1e-10, 1e-13, 2000});
  EXPECT_NEAR(r.value, 0.5, 5e-11);
}

TEST(Quadrature, PanelBudgetExhaustionCarriesBestEstimate) {
  bool thrown = false;
  try {
    integrate_finite([](double x) { return std::sin(50.0 * x); }, 0.0, 20.0, {1e-14, 1e-16, 3});
  } catch (const IntegrationFailure& e) {
    thrown = true;
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
    EXPECT_GT(e.achieved_error(), 1e-14);
  }
  EXPECT_TRUE(thrown);
}

TEST(Quadrature, NonFiniteIntegrandIsRejected) {
  EXPECT_THROW(
      integrate_finite([](double x) { return std::sqrt(x - 0.5); }, 0.0, 1.0, {1e-10, 1e-12, 100}),
      DomainError);
}

}  // namespace
}  // namespace dudelab
