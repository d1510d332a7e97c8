#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/continua.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/errors.hpp"

namespace eqm {

/// The logarithmic potential of an equilibrium measure, backed either by a
/// solved interval union or by a parametric continuum.
class Potential {
 public:
  explicit Potential(EquilibriumSolution sol)
      : src_(std::make_shared<const EquilibriumSolution>(std::move(sol))) {}
  explicit Potential(ParametricMeasure m)
      : src_(std::make_shared<const ParametricMeasure>(std::move(m))) {}

  bool is_real() const { return src_.index() == 0; }
  const EquilibriumSolution& solution() const {
    if (!is_real()) fail(ErrorCode::InvalidConfig, "potential is not backed by an interval union");
    return *std::get<0>(src_);
  }
  const ParametricMeasure& parametric() const {
    if (is_real()) fail(ErrorCode::InvalidConfig, "potential is not backed by a continuum");
    return *std::get<1>(src_);
  }

  double potential(Complex z) const {
    return is_real() ? solution().potential(z) : parametric().potential(z);
  }
  double robin() const { return is_real() ? solution().robin() : parametric().robin(); }
  double green(Complex z) const { return potential(z) - robin(); }
  double capacity() const { return is_real() ? solution().capacity() : parametric().capacity(); }
  Complex centroid() const {
    return is_real() ? Complex(solution().centroid(), 0.0) : parametric().centroid();
  }
  double enclosing_radius() const {
    return is_real() ? solution().enclosing_radius() : parametric().enclosing_radius();
  }

  std::string label() const {
    if (!is_real()) {
      std::ostringstream os;
      os << parametric().tag() << ":" << parametric().parameter();
      return os.str();
    }
    std::ostringstream os;
    os << "[";
    const auto e = solution().set().endpoints();
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]";
    return os.str();
  }

  /// Smallest and largest Re z over the support.
  std::pair<double, double> real_range() const {
    if (is_real()) return {solution().set().hull_left(), solution().set().hull_right()};
    double lo = 1e300;
    double hi = -1e300;
    const int n = 4096;
    for (int j = 0; j < n; ++j) {
      const double x = parametric().boundary(-kPi + 2.0 * kPi * j / n).real();
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    return {lo, hi};
  }

  /// Points of the real axis where the projection of the measure onto Re z
  /// is not smooth.
  std::vector<double> real_breaks() const {
    if (is_real()) {
      const auto e = solution().set().endpoints();
      return {e.begin(), e.end()};
    }
    const auto [lo, hi] = real_range();
    return {lo, hi};
  }

  /// Whether the measure gives mass to the open strip gamma1 < Re z < gamma2.
  bool charges_strip(double gamma1, double gamma2) const {
    if (is_real()) return solution().set().overlap(gamma1, gamma2) > 0.0;
    const int n = 8192;
    for (int j = 0; j < n; ++j) {
      const double x = parametric().boundary(-kPi + 2.0 * kPi * j / n).real();
      if (x > gamma1 && x < gamma2) return true;
    }
    return false;
  }

  /// int f(z) dmu(z) for real-valued f, smooth apart from the features in spec.
  template <class Fn>
  double integrate(Fn&& f, const KinkSpec& spec, const QuadratureConfig& cfg) const {
    if (!is_real()) return parametric().integrate(std::forward<Fn>(f), spec, cfg);
    std::vector<double> kinks = spec.re;
    for (double r : spec.modulus) {
      kinks.push_back(r);
      kinks.push_back(-r);
    }
    std::vector<double> singular = spec.re_graded;
    if (spec.origin) singular.push_back(0.0);
    return solution().integrate([&](double t) { return f(Complex(t, 0.0)); }, kinks, singular,
                                spec.levels);
  }

  /// (1 / n) int zeta^n dmu, the coefficient a_n of the expansion
  /// potential(z) = log|z| - Re sum a_n z^{-n}.
  std::vector<Complex> expansion_coefficients(int count, const QuadratureConfig& cfg) const {
    std::vector<Complex> a(count + 1, 0.0);
    if (is_real()) {
      for (int n = 1; n <= count; ++n) {
        a[n] = solution().integrate([n](double t) { return std::pow(t, n); }) / n;
      }
    } else {
      const int nodes = std::max(cfg.param_nodes, 8 * count + 16);
      for (int n = 1; n <= count; ++n) {
        a[n] = parametric().integrate_complex([n](Complex z) { return std::pow(z, n); }, nodes) /
               static_cast<double>(n);
      }
    }
    return a;
  }

 private:
  std::variant<std::shared_ptr<const EquilibriumSolution>, std::shared_ptr<const ParametricMeasure>>
      src_;
};

}  // namespace eqm
