#include <gtest/gtest.h>

#include "eqm/extremal.hpp"
#include "eqm/moments.hpp"
#include "oracles.hpp"

using namespace eqm;

namespace {
const QuadratureConfig kCfg;
}

TEST(Leja, StartRuleAndSecondPoint) {
  const auto l = IntervalUnion::segment();
  const auto one = leja_points(l, 1, kCfg);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.points[0], 2.0);
  const auto two = leja_points(l, 2, kCfg);
  EXPECT_EQ(two.points[1], -2.0);
  EXPECT_EQM_ERROR(leja_points(l, 0, kCfg), ErrorCode::OutOfRange);
}

TEST(Leja, NormConvergesFromAbove) {
  const auto l = IntervalUnion::segment();
  for (int n : {8, 32, 64}) {
    const double v = sup_norm_root(l, leja_points(l, n, kCfg));
    EXPECT_GE(v, 1.0 - 1e-12);
    if (n == 64) EXPECT_LE(v - 1.0, 5e-2);
  }
  const auto k = IntervalUnion::from_endpoints({-2.0, -0.5, 1.0, 3.0});
  const auto s = solve_equilibrium(k, kCfg);
  EXPECT_GE(sup_norm_root(k, leja_points(k, 40, kCfg)), s.capacity() * (1 - 1e-12));
}

// Exact Chebyshev polynomial check: for the zeros of T_n scaled to [-2, 2],
// the monic product has sup norm 2, so the root is 2^(1/n).
TEST(Extremal, SupNormOfChebyshevZeros) {
  PointConfiguration c;
  const int n = 12;
  for (int k = 0; k < n; ++k) c.points.push_back(2 * std::cos((k + 0.5) * oracle::kPi / n));
  EXPECT_NEAR(sup_norm_root(IntervalUnion::segment(), c), std::pow(2.0, 1.0 / n), 1e-12);
}

TEST(Fekete, SegmentMatchesLegendreOracle) {
  const auto l = IntervalUnion::segment();
  const auto two = fekete_points(l, 2, kCfg);
  EXPECT_EQ(two.points[0], -2.0);
  EXPECT_EQ(two.points[1], 2.0);
  for (int n : {6, 10}) {
    const auto f = fekete_points(l, n, kCfg);
    const auto want = oracle::fekete_unit(n);
    ASSERT_EQ(want.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) EXPECT_NEAR(f.points[i], 2 * want[i], 4e-3) << n << " " << i;
  }
  EXPECT_EQM_ERROR(fekete_points(l, 65, kCfg), ErrorCode::OutOfRange);
}

TEST(Fekete, ArcsineCdfAndBandCounts) {
  const auto l = solve_equilibrium(IntervalUnion::segment(), kCfg);
  const auto f = fekete_points(l.set(), 16, kCfg);
  double d = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double c = oracle::arcsine_cdf(f.points[i]);
    d = std::max({d, std::abs(c - double(i) / 16), std::abs(c - double(i + 1) / 16)});
  }
  EXPECT_LE(d, 0.08);
  EXPECT_NEAR(cdf_distance(l, f), d, 1e-12);

  const auto k = solve_equilibrium(IntervalUnion::from_endpoints({-3.0, -1.5, 0.0, 2.0}), kCfg);
  for (int n : {12, 24}) {
    const auto g = fekete_points(k.set(), n, kCfg);
    int left = 0;
    for (double x : g.points) left += x <= k.set().right(0);
    EXPECT_LE(std::abs(double(left) / n - k.band_mass(0)), 1.0 / n) << n;
  }
}

TEST(Extremal, ZeroMeans) {
  const auto l = solve_equilibrium(IntervalUnion::segment(), kCfg);
  const auto pts = leja_points(l.set(), 256, kCfg);
  EXPECT_NEAR(zero_mean(pts, ConvexTestFunction::power(2)), 2.0, 5e-2);
  EXPECT_EQ(zero_mean(pts, ConvexTestFunction::constant(1.0)), 1.0);
  const auto plus = leja_points(IntervalUnion::from_endpoints({0.0, 4.0}), 256, kCfg);
  EXPECT_NEAR(zero_mean(plus, ConvexTestFunction::power(1)), 2.0, 5e-2);
  EXPECT_EQM_ERROR(zero_mean(PointConfiguration{}, ConvexTestFunction::power(2)), ErrorCode::EmptyInput);
}

TEST(Extremal, CoefficientLimit) {
  const auto s = solve_equilibrium(IntervalUnion::from_endpoints({0.0, 4.0}), kCfg);
  const auto rows = coefficient_limit_check(s, {1, 64, 256}, kCfg);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].ratio, -4.0);  // the first Leja point is the right endpoint
  EXPECT_NEAR(rows[2].limit, -2.0, 1e-12);
  EXPECT_NEAR(rows[2].ratio, -2.0, 5e-2);
  const auto shifted = solve_equilibrium(IntervalUnion::from_endpoints({1.0, 5.0}), kCfg);
  EXPECT_NEAR(coefficient_limit_check(shifted, {8}, kCfg)[0].limit, -3.0, 1e-12);
  EXPECT_EQM_ERROR(coefficient_limit_check(solve_equilibrium(IntervalUnion::from_endpoints({-1.0, 3.0}), kCfg), {8}, kCfg),
                   ErrorCode::HypothesisViolated);
  EXPECT_EQM_ERROR(coefficient_limit_check(solve_equilibrium(IntervalUnion::from_endpoints({0.0, 1.0}), kCfg), {8}, kCfg),
                   ErrorCode::HypothesisViolated);
}
