#include <gtest/gtest.h>

#include "eqm/continua.hpp"
#include "eqm/corpus.hpp"
#include "eqm/moments.hpp"
#include "eqm/verify.hpp"
#include "oracles.hpp"

using namespace eqm;

namespace {
const QuadratureConfig kCfg;
}

// ell(m) = int |x|^m dmu_L by theta quadrature split at pi / 2.
TEST(ClosedForms, EllAgainstQuadrature) {
  for (int m = 0; m <= 8; ++m) {
    const double want = oracle::arcsine_mean([&](double t) { return std::pow(std::abs(t), m); }, -2.0, 2.0,
                                             {oracle::kPi / 2});
    EXPECT_NEAR(ell(m), want, 1e-12 * (1 + want)) << m;
  }
  EXPECT_NEAR(ell(1), 4.0 / oracle::kPi, 1e-15);
  EXPECT_NEAR(ell(2), 2.0, 1e-14);
  EXPECT_EQM_ERROR(ell(-1), ErrorCode::OutOfRange);
}

// ell_plus(m) = binomial(2m, m) from Pascal's triangle.
TEST(ClosedForms, EllPlusAgainstPascal) {
  std::vector<std::vector<double>> c(21, std::vector<double>(21, 0.0));
  for (int n = 0; n <= 20; ++n) {
    c[n][0] = 1.0;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  for (int m = 0; m <= 10; ++m) EXPECT_EQ(ell_plus(m), c[2 * m][m]);
  EXPECT_EQ(ell_plus(1), 2.0);
  EXPECT_EQ(ell_plus(2), 6.0);
  EXPECT_EQ(ell_plus(3), 20.0);
}

TEST(Moments, SegmentAndPlusSegment) {
  const auto l = solve_equilibrium(IntervalUnion::segment(), kCfg);
  EXPECT_NEAR(moment_real(l, ConvexTestFunction::abs_power(1.0), kCfg), 4.0 / oracle::kPi, 1e-12);
  EXPECT_NEAR(moment_real(l, ConvexTestFunction::power(2), kCfg), 2.0, 1e-12);
  EXPECT_NEAR(moment_real(l, ConvexTestFunction::power(4), kCfg), 6.0, 1e-12);
  EXPECT_NEAR(moment_real(l, ConvexTestFunction::exponential(1.0), kCfg), std::cyl_bessel_i(0.0, 2.0), 1e-12);
  // phi(log|x|) with phi = exp is |x|; with phi = identity it is the potential at 0.
  EXPECT_NEAR(moment_log(l, ConvexTestFunction::exponential(1.0), kCfg), 4.0 / oracle::kPi, 1e-10);
  EXPECT_NEAR(moment_log(l, ConvexTestFunction::power(1), kCfg), 0.0, 1e-10);
  const auto plus = solve_equilibrium(IntervalUnion::from_endpoints({0.0, 4.0}), kCfg);
  EXPECT_NEAR(moment_real(plus, ConvexTestFunction::power(1), kCfg), 2.0, 1e-12);
  EXPECT_NEAR(moment_real(plus, ConvexTestFunction::power(2), kCfg), 6.0, 1e-12);
}

TEST(Moments, ContinuaClosedForms) {
  for (double d : {0.1, 0.5, 0.9}) {
    const auto e = joukowski_ellipse(d);
    EXPECT_NEAR(moment_real(e, ConvexTestFunction::power(2), kCfg), (1 + d) * (1 + d) / 2, 1e-12);
  }
  // A rotated segment has the same |z| distribution as L.
  const auto l = solve_equilibrium(IntervalUnion::segment(), kCfg);
  const auto phi = ConvexTestFunction::exponential(2.0);
  EXPECT_NEAR(moment_log(rotated_segment(0.7), phi, kCfg), moment_log(l, phi, kCfg), 1e-9);
}

// A symmetric pair with b^2 - a^2 = 4 gives margin a^2 for phi = x^2.
TEST(Verify, IntervalUnionsAgainstSegment) {
  for (double a : {0.3, 1.0}) {
    const double b = std::sqrt(a * a + 4);
    const auto r = verify_thm1(IntervalUnion::from_endpoints({-b, -a, a, b}), ConvexTestFunction::power(2), kCfg);
    EXPECT_NEAR(r.margin, a * a, 1e-10);
    EXPECT_NEAR(r.reference, 2.0, 1e-12);
  }
  for (const auto& k : make_corpus({11, 15})) {
    for (const auto& phi : standard_test_functions()) EXPECT_GE(verify_thm1(k, phi, kCfg).margin, -1e-8);
  }
  const auto raw = solve_equilibrium(IntervalUnion::from_endpoints({0.0, 1.0}), kCfg);
  EXPECT_EQM_ERROR(verify_thm1(raw, raw, ConvexTestFunction::power(2), kCfg), ErrorCode::NotNormalized);
}

TEST(Verify, ContinuaAgainstSegment) {
  for (const auto& m : ellipse_family()) {
    const auto r = verify_thm2(m, ConvexTestFunction::power(2), kCfg);
    const double d = m.parameter();
    EXPECT_NEAR(r.margin, (1 + d) * (1 + d) / 2 - 2, 1e-10);
    EXPECT_LE(verify_thm2(m, ConvexTestFunction::power(4), kCfg).margin, 1e-8);
  }
  EXPECT_EQM_ERROR(verify_thm2(shifted_ellipse(0.5), ConvexTestFunction::power(2), kCfg), ErrorCode::NotNormalized);
}

TEST(Verify, PointBoundSignPattern) {
  const auto k = IntervalUnion::from_endpoints({-3.0, -1.0, 0.5, 2.0});
  const auto rep = verify_pointbound(k, 3.0, 0.0, 4, kCfg);
  ASSERT_EQ(rep.derivatives.size(), 5u);
  for (const auto& e : rep.derivatives) EXPECT_GT(e.margin, 1e-8) << e.m;
  EXPECT_GT(rep.off_axis_margin, 0.0);
  // K = L: every comparison is an equality.
  const auto eq = verify_pointbound(IntervalUnion::segment(), 2.5, 0.0, 4, kCfg);
  EXPECT_LT(eq.max_abs_margin(), 1e-10);
  EXPECT_EQM_ERROR(verify_pointbound(k, 1.9, 0.0, 2, kCfg), ErrorCode::HypothesisViolated);
  EXPECT_EQM_ERROR(verify_pointbound(IntervalUnion::segment(), 3.0, 1.5, 2, kCfg), ErrorCode::HypothesisViolated);
}

// log M_L = int log(2 + |t|) dmu_L; the ellipse value comes from a dense
// farthest-point scan.
TEST(FactorConstant, SegmentAndEllipse) {
  const Potential l(solve_equilibrium(IntervalUnion::segment(), kCfg));
  const double want = oracle::arcsine_mean([](double t) { return std::log(2 + std::abs(t)); }, -2, 2, {oracle::kPi / 2});
  const auto fl = factor_constant_MK(l, kCfg);
  EXPECT_NEAR(fl.log_m, want, 1e-10);
  EXPECT_NEAR(fl.log_bound, want, 1e-10);
  const auto fr = factor_constant_MK(Potential(rotated_segment(0.0)), kCfg);
  EXPECT_NEAR(fr.log_m, want, 1e-8);

  const double d = 0.5;
  const auto fe = factor_constant_MK(Potential(joukowski_ellipse(d)), kCfg);
  auto bnd = [&](double t) { return Complex(std::cos(t) * (1 + d), std::sin(t) * (1 - d)); };
  const int n = 2000, m = 4000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex z = bnd(2 * oracle::kPi * (i + 0.5) / n);
    double far = 0.0;
    for (int j = 0; j < m; ++j) far = std::max(far, std::abs(z - bnd(2 * oracle::kPi * j / m)));
    s += std::log(far);
  }
  EXPECT_NEAR(fe.log_m, s / n, 1e-5);
  EXPECT_LT(fe.m, 1.022 * fl.m);
  EXPECT_LE(fe.log_m, fe.log_bound);
}
