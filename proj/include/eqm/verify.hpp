#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/continua.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/greens.hpp"
#include "eqm/moments.hpp"
#include "eqm/potential.hpp"
#include "eqm/test_functions.hpp"

namespace eqm {

struct MomentComparison {
  double value = 0.0;      // moment of the tested measure
  double reference = 0.0;  // moment of mu_L
  double margin = 0.0;     // value - reference
};

/// int phi(Re z) dmu_K - int phi(Re z) dmu_L for an already normalized K
/// (capacity 1, centroid 0). Expected to be non-negative.
inline MomentComparison verify_thm1(const EquilibriumSolution& normalized,
                                    const EquilibriumSolution& segment,
                                    const ConvexTestFunction& phi, const QuadratureConfig& cfg = {}) {
  if (std::abs(normalized.capacity() - 1.0) > 1e-8 || std::abs(normalized.centroid()) > 1e-8) {
    fail(ErrorCode::NotNormalized, "verify_thm1 needs capacity 1 and centroid 0");
  }
  MomentComparison out;
  out.value = moment_real(normalized, phi, cfg);
  out.reference = moment_real(segment, phi, cfg);
  out.margin = out.value - out.reference;
  return out;
}

/// Normalizes K first.
inline MomentComparison verify_thm1(const IntervalUnion& k, const ConvexTestFunction& phi,
                                    const QuadratureConfig& cfg = {}) {
  const auto normalized = solve_normalized(k, cfg).first;
  const auto segment = solve_equilibrium(IntervalUnion::segment(), cfg);
  return verify_thm1(normalized, segment, phi, cfg);
}

/// int phi(Re z) dmu - int phi(Re z) dmu_L for a normalized continuum;
/// expected to be non-positive.
inline MomentComparison verify_thm2(const ParametricMeasure& m, const EquilibriumSolution& segment,
                                    const ConvexTestFunction& phi, const QuadratureConfig& cfg = {}) {
  if (std::abs(m.centroid()) > 1e-12) {
    fail(ErrorCode::NotNormalized, "verify_thm2 needs a centroid-0 continuum");
  }
  MomentComparison out;
  out.value = moment_real(m, phi, cfg);
  out.reference = moment_real(segment, phi, cfg);
  out.margin = out.value - out.reference;
  return out;
}

inline MomentComparison verify_thm2(const ParametricMeasure& m, const ConvexTestFunction& phi,
                                    const QuadratureConfig& cfg = {}) {
  return verify_thm2(m, solve_equilibrium(IntervalUnion::segment(), cfg), phi, cfg);
}

struct PointBoundEntry {
  int m = 0;
  double value = 0.0;      // d^m g / dx^m (x0)
  double reference = 0.0;  // d^m G / dx^m (x0)
  double margin = 0.0;     // oriented so that the inequality reads margin >= 0
};

struct PointBoundReport {
  double x0 = 0.0;
  double y0 = 0.0;
  std::vector<PointBoundEntry> derivatives;
  double g_off_axis = 0.0;
  double G_off_axis = 0.0;
  double off_axis_margin = 0.0;  // G - g at x0 + i y0

  double min_margin() const {
    double m = off_axis_margin;
    for (const auto& e : derivatives) m = std::min(m, e.margin);
    return m;
  }
  double max_abs_margin() const {
    double m = std::abs(off_axis_margin);
    for (const auto& e : derivatives) m = std::max(m, std::abs(e.margin));
    return m;
  }
};

/// For x0 > 2 and max K < x0 - |y0|: even derivatives of g at x0 lie below
/// those of G, odd ones above, and g <= G at x0 + i y0.
inline PointBoundReport verify_pointbound(const EquilibriumSolution& normalized,
                                          const EquilibriumSolution& segment, double x0, double y0,
                                          int mmax, const QuadratureConfig& cfg = {}) {
  if (std::abs(normalized.capacity() - 1.0) > 1e-8 || std::abs(normalized.centroid()) > 1e-8) {
    fail(ErrorCode::NotNormalized, "verify_pointbound needs capacity 1 and centroid 0");
  }
  if (!(x0 > 2.0) || !(normalized.set().hull_right() < x0 - std::abs(y0))) {
    std::ostringstream os;
    os << "pointwise bound needs x0 > 2 and max K < x0 - |y0| (x0 = " << x0 << ", y0 = " << y0
       << ", max K = " << normalized.set().hull_right() << ")";
    fail(ErrorCode::HypothesisViolated, os.str());
  }
  const Potential pk(normalized);
  const Potential pl(segment);
  PointBoundReport out;
  out.x0 = x0;
  out.y0 = y0;
  for (int m = 0; m <= mmax; ++m) {
    PointBoundEntry e;
    e.m = m;
    e.value = green_x_derivative(pk, x0, m, cfg);
    e.reference = green_x_derivative(pl, x0, m, cfg);
    e.margin = (m % 2 == 0) ? e.reference - e.value : e.value - e.reference;
    out.derivatives.push_back(e);
  }
  out.g_off_axis = pk.green(Complex(x0, y0));
  out.G_off_axis = pl.green(Complex(x0, y0));
  out.off_axis_margin = out.G_off_axis - out.g_off_axis;
  return out;
}

inline PointBoundReport verify_pointbound(const IntervalUnion& k, double x0, double y0, int mmax,
                                          const QuadratureConfig& cfg = {}) {
  return verify_pointbound(solve_normalized(k, cfg).first,
                           solve_equilibrium(IntervalUnion::segment(), cfg), x0, y0, mmax, cfg);
}

/// max over the support of |z - zeta| for a continuum, by golden-section
/// search from the three best starts of a coarse scan. Returns (distance,
/// maximizing angle).
inline std::pair<double, double> farthest_point(const ParametricMeasure& m, Complex z) {
  const int n = 64;
  const double h = 2.0 * kPi / n;
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = std::abs(z - m.boundary(-kPi + h * j));
  std::vector<int> peaks;
  for (int j = 0; j < n; ++j) {
    if (v[j] >= v[(j + n - 1) % n] && v[j] >= v[(j + 1) % n]) peaks.push_back(j);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) { return v[a] > v[b]; });
  if (peaks.size() > 3) peaks.resize(3);
  double best = -1.0;
  double arg = 0.0;
  for (int j : peaks) {
    const double c = -kPi + h * j;
    const double t =
        ParametricMeasure::golden_max([&](double th) { return std::abs(z - m.boundary(th)); }, c - h, c + h);
    const double d = std::abs(z - m.boundary(t));
    if (d > best) {
      best = d;
      arg = t;
    }
  }
  return {best, arg};
}

struct FactorConstant {
  double log_m = 0.0;       // log M_K
  double m = 0.0;           // M_K
  double log_bound = 0.0;   // int log(2 + |z|) dmu
};

/// M_K = exp(int log d_K dmu) / cap(K) with d_K the farthest-point distance.
inline FactorConstant factor_constant_MK(const Potential& p, const QuadratureConfig& cfg = {}) {
  FactorConstant out;
  if (p.is_real()) {
    const EquilibriumSolution& sol = p.solution();
    const double a = sol.set().hull_left();
    const double b = sol.set().hull_right();
    const double kink[] = {0.5 * (a + b)};
    out.log_m = sol.integrate([&](double t) { return std::log(std::max(t - a, b - t)); }, kink) -
                std::log(sol.capacity());
    const double origin[] = {0.0};
    out.log_bound = sol.integrate([](double t) { return std::log(2.0 + std::abs(t)); }, origin);
  } else {
    const ParametricMeasure& m = p.parametric();
    const int n = cfg.param_nodes;
    const double h = 2.0 * kPi / n;
    std::vector<double> arg(n);
    for (int j = 0; j < n; ++j) arg[j] = farthest_point(m, m.boundary(-kPi + h * j)).second;
    auto jump = [](double a, double b) {
      double d = std::fmod(std::abs(a - b), 2.0 * kPi);
      return std::min(d, 2.0 * kPi - d);
    };
    // Where the farthest point switches branch, d_K has a corner.
    std::vector<double> kinks;
    for (int j = 0; j < n; ++j) {
      const int k = (j + 1) % n;
      if (jump(arg[j], arg[k]) < 0.25) continue;
      double lo = -kPi + h * j;
      double hi = lo + h;
      for (int it = 0; it < 55; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double am = farthest_point(m, m.boundary(mid)).second;
        if (jump(am, arg[j]) <= jump(am, arg[k])) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      kinks.push_back(0.5 * (lo + hi));
    }
    out.log_m = integrate_periodic(
                    [&](double t) { return std::log(farthest_point(m, m.boundary(t)).first); }, n,
                    kinks) /
                (2.0 * kPi) -
                std::log(m.capacity());
    KinkSpec spec;
    spec.origin = true;
    spec.levels = 4;
    out.log_bound = m.integrate([](Complex z) { return std::log(2.0 + std::abs(z)); }, spec, cfg);
  }
  out.m = std::exp(out.log_m);
  return out;
}

}  // namespace eqm
