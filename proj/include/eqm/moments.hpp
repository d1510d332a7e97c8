#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/continua.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/potential.hpp"
#include "eqm/test_functions.hpp"

namespace eqm {

/// int phi(Re z) dmu(z).
inline double moment_real(const EquilibriumSolution& sol, const ConvexTestFunction& phi,
                          const QuadratureConfig& = {}) {
  const auto kinks = phi.kinks();
  return sol.integrate([&](double t) { return phi(t); }, kinks);
}

inline double moment_real(const ParametricMeasure& m, const ConvexTestFunction& phi,
                          const QuadratureConfig& cfg = {}) {
  KinkSpec spec;
  spec.re = phi.kinks();
  return m.integrate([&](Complex z) { return phi(z.real()); }, spec, cfg);
}

inline double moment_real(const Potential& p, const ConvexTestFunction& phi,
                          const QuadratureConfig& cfg = {}) {
  return p.is_real() ? moment_real(p.solution(), phi, cfg) : moment_real(p.parametric(), phi, cfg);
}

/// int phi(log|z|) dmu(z).
inline double moment_log(const EquilibriumSolution& sol, const ConvexTestFunction& phi,
                         const QuadratureConfig& = {}) {
  std::vector<double> kinks;
  for (double k : phi.kinks()) {
    kinks.push_back(std::exp(k));
    kinks.push_back(-std::exp(k));
  }
  const double origin[] = {0.0};
  return sol.integrate([&](double t) { return phi(std::log(std::abs(t))); }, kinks, origin);
}

inline double moment_log(const ParametricMeasure& m, const ConvexTestFunction& phi,
                         const QuadratureConfig& cfg = {}) {
  KinkSpec spec;
  for (double k : phi.kinks()) spec.modulus.push_back(std::exp(k));
  spec.origin = true;
  return m.integrate([&](Complex z) { return phi(std::log(std::abs(z))); }, spec, cfg);
}

inline double moment_log(const Potential& p, const ConvexTestFunction& phi,
                         const QuadratureConfig& cfg = {}) {
  return p.is_real() ? moment_log(p.solution(), phi, cfg) : moment_log(p.parametric(), phi, cfg);
}

/// int |x|^m dmu_L = 2^m Gamma((m+1)/2) / (sqrt(pi) Gamma(m/2 + 1)).
inline double ell(int m) {
  if (m < 0) fail(ErrorCode::OutOfRange, "ell needs m >= 0");
  return std::exp(m * std::log(2.0) + std::lgamma(0.5 * m + 0.5) - std::lgamma(0.5 * m + 1.0)) /
         std::sqrt(std::numbers::pi);
}

/// int x^m dmu_[0,4] = 2^m (2m-1)!! / m! = binomial(2m, m).
inline double ell_plus(int m) {
  if (m < 0) fail(ErrorCode::OutOfRange, "ell_plus needs m >= 0");
  double v = 1.0;
  for (int k = 1; k <= m; ++k) v = v * (m + k) / k;
  return v;
}

}  // namespace eqm
