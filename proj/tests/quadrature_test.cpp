#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ar1lt/error.hpp"
#include "ar1lt/quadrature.hpp"

using namespace ar1lt;

TEST(GaussHermite, WeightsSumToSqrtPi) {
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u, 200u}) {
    const auto rule = gauss_hermite(n);
    ASSERT_EQ(rule.nodes.size(), n);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    EXPECT_NEAR(sum, std::sqrt(std::numbers::pi), 1e-13) << n;
  }
}

TEST(GaussHermite, KnownSmallRules) {
  const auto two = gauss_hermite(2);
  EXPECT_NEAR(two.nodes[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(two.weights[0], std::sqrt(std::numbers::pi) / 2.0, 1e-15);
  const auto three = gauss_hermite(3);
  EXPECT_NEAR(three.nodes[0], -std::sqrt(1.5), 1e-15);
  EXPECT_EQ(three.nodes[1], 0.0);
  EXPECT_NEAR(three.weights[1], 2.0 * std::sqrt(std::numbers::pi) / 3.0, 1e-15);
}

TEST(GaussHermite, ExactForPolynomials) {
  // E[Y^k] for Y ~ N(0, 1): 0 for odd k, (k-1)!! for even k.
  const auto rule = gauss_hermite(12);
  double double_factorial = 1.0;
  for (int k = 0; k <= 22; ++k) {
    const double moment = normal_expectation(rule, 0.0, 1.0, [k](double y) { return std::pow(y, k); });
    if (k % 2 == 1) {
      // Odd moments cancel between symmetric nodes up to rounding of the
      // largest terms.
      EXPECT_NEAR(moment, 0.0, 1e-14 * std::pow(rule.nodes.back(), k)) << k;
    } else {
      if (k >= 2) double_factorial *= (k - 1);
      EXPECT_NEAR(moment / double_factorial, 1.0, 1e-12) << k;
    }
  }
}

TEST(GaussHermite, NodesSortedAndSymmetric) {
  const auto rule = gauss_hermite(33);
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    EXPECT_EQ(rule.nodes[i], -rule.nodes[rule.nodes.size() - 1 - i]);
  }
}

TEST(GaussHermite, GaussianMgf) {
  // E[exp(a Y^2)] = (1 - 2 a sd^2)^(-1/2) for Y ~ N(0, sd^2).
  const auto rule = gauss_hermite(64);
  const double sd = 1.3, a = -0.7;
  const double q = normal_expectation(rule, 0.0, sd, [&](double y) { return std::exp(a * y * y); });
  EXPECT_NEAR(q, 1.0 / std::sqrt(1.0 - 2.0 * a * sd * sd), 1e-13);
}

TEST(GaussHermite, ZeroOrderRejected) { EXPECT_THROW(gauss_hermite(0), Error); }
