#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eqm/config.hpp"
#include "eqm/errors.hpp"
#include "eqm/quadrature.hpp"
#include "eqm/realsets.hpp"

namespace eqm {

/// Polynomial of degree N-1 stored in the Chebyshev basis of the convex hull
/// [lo, hi] of the interval union.
class PolynomialT {
 public:
  PolynomialT() = default;
  PolynomialT(double lo, double hi, std::vector<double> chebyshev)
      : lo_(lo), hi_(hi), c_(std::move(chebyshev)) {}

  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<double>& chebyshev() const { return c_; }
  double hull_left() const { return lo_; }
  double hull_right() const { return hi_; }

  double to_unit(double t) const { return (2.0 * t - lo_ - hi_) / (hi_ - lo_); }

  double operator()(double t) const {
    const double u = to_unit(t);
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = c_.size(); k-- > 1;) {
      const double b0 = c_[k] + 2.0 * u * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
    return c_.empty() ? 0.0 : c_[0] + u * b1 - b2;
  }

  double derivative(double t) const {
    const std::size_t n = c_.size();
    if (n < 2) return 0.0;
    // Chebyshev coefficients of d/du.
    std::vector<double> d(n + 1, 0.0);
    for (std::size_t k = n - 1; k >= 1; --k) {
      d[k - 1] = d[k + 1] + 2.0 * static_cast<double>(k) * c_[k];
      if (k == 1) break;
    }
    d[0] *= 0.5;
    d.resize(n - 1);
    return PolynomialT(lo_, hi_, std::move(d))(t) * 2.0 / (hi_ - lo_);
  }

  /// Coefficients in the monomial basis of t, lowest degree first.
  std::vector<double> monomial() const {
    const std::size_t n = c_.size();
    const double alpha = 2.0 / (hi_ - lo_);
    const double beta = -(lo_ + hi_) / (hi_ - lo_);
    // T_k(alpha t + beta) as monomials in t.
    std::vector<double> prev{1.0};
    std::vector<double> cur{beta, alpha};
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const std::vector<double>& tk = (k == 0) ? prev : cur;
      for (std::size_t i = 0; i < tk.size() && i < n; ++i) out[i] += c_[k] * tk[i];
      if (k >= 1) {
        std::vector<double> next(cur.size() + 1, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
          next[i] += 2.0 * beta * cur[i];
          next[i + 1] += 2.0 * alpha * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
      }
    }
    return out;
  }

 private:
  double lo_ = -1.0;
  double hi_ = 1.0;
  std::vector<double> c_;
};

/// Per-band data of the equilibrium density h(t) / sqrt((t - a)(b - t)).
struct BandData {
  double a = 0.0;
  double b = 0.0;
  double sign = 1.0;            // (-1)^(N+l+1), l counted from 1
  std::vector<double> others;   // endpoints of K other than a and b
  int order = 0;
  BandExpansion expansion;
};

class EquilibriumSolution;
EquilibriumSolution solve_equilibrium(const IntervalUnion& k, const QuadratureConfig& cfg);

/// Equilibrium measure dmu = T(x) dx / (pi i sqrt(R(x+))) of an interval union
/// together with its capacity, conformal centroid and the zeros of T.
class EquilibriumSolution {
 public:
  const IntervalUnion& set() const { return set_; }
  const PolynomialT& T() const { return t_; }
  double capacity() const { return capacity_; }
  double robin() const { return robin_; }
  double centroid() const { return centroid_; }
  double centroid_quadrature() const { return centroid_quadrature_; }
  const std::vector<double>& critical_points() const { return critical_points_; }
  double frostman_deviation() const { return frostman_deviation_; }
  double condition_number() const { return condition_number_; }
  double leading_coefficient() const { return leading_coefficient_; }
  double total_mass() const { return total_mass_; }
  const std::vector<BandData>& bands() const { return bands_; }
  double enclosing_radius() const { return set_.enclosing_radius(); }

  /// h_l(t) = sign_l T(t) / (pi sqrt(prod_{e != a_l, b_l} |t - e|)).
  double smooth_factor(std::size_t l, double t) const {
    const BandData& band = bands_[l];
    double q = 1.0;
    for (double e : band.others) q *= std::abs(t - e);
    return band.sign * t_(t) / (kPi * std::sqrt(q));
  }

  double density(double x) const {
    const auto l = set_.band_of(x);
    if (!l) fail(ErrorCode::OutsideSupport, "density requested off the band interiors");
    const BandData& band = bands_[*l];
    return smooth_factor(*l, x) / std::sqrt((x - band.a) * (band.b - x));
  }

  double band_mass(std::size_t l) const { return bands_[l].expansion.mass(); }

  /// int log|z - t| dmu(t).
  double potential(Complex z) const {
    double u = 0.0;
    for (const BandData& band : bands_) u += band.expansion.log_moment(z);
    return u;
  }

  /// g(z) = potential(z) - log cap(K).
  double green(Complex z) const { return potential(z) - robin_; }

  /// int dmu(t) / (t - z); principal value on band interiors.
  Complex cauchy_transform(Complex z) const {
    Complex c = 0.0;
    for (const BandData& band : bands_) c += band.expansion.cauchy_moment(z);
    return c;
  }

  double cdf(double x) const {
    double m = 0.0;
    for (const BandData& band : bands_) {
      if (x >= band.b) {
        m += band.expansion.mass();
      } else if (x > band.a) {
        m += band.expansion.partial_mass(x);
      }
    }
    return m;
  }

  /// int f dmu. `kinks` are points where f is only piecewise smooth; `singular`
  /// are points (on or near K) where f has an integrable or near singularity
  /// and the mesh is graded geometrically.
  template <class F>
  double integrate(F&& f, std::span<const double> kinks = {},
                   std::span<const double> singular = {}, int singular_levels = 44) const {
    double total = 0.0;
    for (std::size_t l = 0; l < bands_.size(); ++l) {
      const BandData& band = bands_[l];
      const double mid = 0.5 * (band.a + band.b);
      const double half = 0.5 * (band.b - band.a);
      const int panels = std::max(4, band.order / 16);
      std::vector<double> interior;
      std::vector<double> graded;
      int levels = 0;
      for (double x : kinks) {
        if (x > band.a && x < band.b) interior.push_back(std::acos((x - mid) / half));
      }
      for (double x : singular) {
        const double tol = 1e-14 * std::max(1.0, half);
        if (x >= band.a - tol && x <= band.b + tol) {
          graded.push_back(std::acos(std::clamp((x - mid) / half, -1.0, 1.0)));
          levels = std::max(levels, singular_levels);
        } else {
          const double dist = x > band.b ? x - band.b : band.a - x;
          if (dist < 2.0 * half) {
            const double scale = std::sqrt(2.0 * dist / half);
            const int need =
                static_cast<int>(std::ceil(std::log2((kPi / panels) / scale))) + 6;
            graded.push_back(x > band.b ? 0.0 : kPi);
            levels = std::max(levels, std::max(need, 4));
          }
        }
      }
      const auto breaks = make_breaks(0.0, kPi, panels, interior, graded, levels);
      auto integrand = [&](double theta) {
        const double t = mid + half * std::cos(theta);
        return f(t) * smooth_factor(l, t);
      };
      total += integrate_panels(integrand, breaks, 16);
    }
    return total;
  }

 private:
  friend EquilibriumSolution solve_equilibrium(const IntervalUnion& k,
                                               const QuadratureConfig& cfg);
  explicit EquilibriumSolution(IntervalUnion k) : set_(std::move(k)) {}

  IntervalUnion set_;
  PolynomialT t_;
  std::vector<BandData> bands_;
  double capacity_ = 0.0;
  double robin_ = 0.0;
  double centroid_ = 0.0;
  double centroid_quadrature_ = 0.0;
  double frostman_deviation_ = 0.0;
  double condition_number_ = 1.0;
  double leading_coefficient_ = -1.0;
  double total_mass_ = 1.0;
  std::vector<double> critical_points_;
};

namespace detail {

inline std::vector<double> endpoints_except(const IntervalUnion& k, double x, double y) {
  std::vector<double> out;
  for (double e : k.endpoints()) {
    if (e != x && e != y) out.push_back(e);
  }
  return out;
}

/// Chebyshev polynomials T_0..T_{n-1} at u.
inline void chebyshev_values(double u, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() > 1) out[1] = u;
  for (std::size_t j = 2; j < out.size(); ++j) out[j] = 2.0 * u * out[j - 1] - out[j - 2];
}

/// Zero of T in (lo, hi) where T changes sign: bisection, then Newton polish.
inline double gap_zero(const PolynomialT& t, double lo, double hi) {
  double flo = t(lo);
  const double fhi = t(hi);
  if (!(flo * fhi < 0.0)) {
    std::ostringstream os;
    os << "T has no sign change on the gap (" << lo << ", " << hi << ")";
    fail(ErrorCode::NoSignChange, os.str());
  }
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  double a = lo;
  double b = hi;
  while (b - a > 1e-10 * scale) {
    const double m = 0.5 * (a + b);
    const double fm = t(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (flo < 0.0)) {
      a = m;
      flo = fm;
    } else {
      b = m;
    }
  }
  double x = 0.5 * (a + b);
  for (int i = 0; i < 3; ++i) {
    const double d = t.derivative(x);
    if (d == 0.0) break;
    const double next = x - t(x) / d;
    if (next <= lo || next >= hi) break;
    x = next;
  }
  return x;
}

}  // namespace detail

/// Solves the N x N system fixing T: one row per gap forcing
/// int_gap T / sqrt(R) = 0 and a normalization row forcing
/// (1 / pi i) int_K T / sqrt(R) = 1. Rows are assembled in the Chebyshev basis
/// of the convex hull.
inline PolynomialT solve_T(const IntervalUnion& k, const QuadratureConfig& cfg,
                           double* condition = nullptr) {
  cfg.validate();
  const std::size_t n = k.size();
  const double lo = k.hull_left();
  const double hi = k.hull_right();
  auto unit = [&](double t) { return (2.0 * t - lo - hi) / (hi - lo); };

  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  std::vector<double> basis(n);

  for (std::size_t g = 0; g + 1 < n; ++g) {
    const double left = k.right(g);
    const double right = k.left(g + 1);
    const auto others = detail::endpoints_except(k, left, right);
    const int order = resolving_order(right - left, std::min(k.width(g), k.width(g + 1)),
                                      cfg.band_order);
    for (std::size_t j = 0; j < n; ++j) {
      a(g, j) = integrate_inv_sqrt(
          [&](double t) {
            double q = 1.0;
            for (double e : others) q *= std::abs(t - e);
            detail::chebyshev_values(unit(t), basis);
            return basis[j] / std::sqrt(q);
          },
          left, right, order);
    }
  }
  for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double sign = ((n + l + 2) % 2 == 0) ? 1.0 : -1.0;
    const auto others = detail::endpoints_except(k, k.left(l), k.right(l));
    double gap = std::numeric_limits<double>::infinity();
    if (l > 0) gap = std::min(gap, k.left(l) - k.right(l - 1));
    if (l + 1 < n) gap = std::min(gap, k.left(l + 1) - k.right(l));
    const int order = resolving_order(k.width(l), gap, cfg.band_order);
    for (std::size_t j = 0; j < n; ++j) {
      a(n - 1, j) += sign / kPi *
                     integrate_inv_sqrt(
                         [&](double t) {
                           double q = 1.0;
                           for (double e : others) q *= std::abs(t - e);
                           detail::chebyshev_values(unit(t), basis);
                           return basis[j] / std::sqrt(q);
                         },
                         k.left(l), k.right(l), order);
    }
  }
  rhs(n - 1) = 1.0;

  for (std::size_t r = 0; r < n; ++r) {
    const double scale = a.row(r).cwiseAbs().maxCoeff();
    if (scale > 0.0) {
      a.row(r) /= scale;
      rhs(r) /= scale;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cond = s(n - 1) > 0.0 ? s(0) / s(n - 1) : std::numeric_limits<double>::infinity();
  if (condition) *condition = cond;
  if (!(cond <= 1e12)) {
    std::ostringstream os;
    os << "linear system for T is near singular (condition estimate " << cond << ")";
    fail(ErrorCode::SingularSystem, os.str());
  }
  const Eigen::VectorXd x = svd.solve(rhs);
  return PolynomialT(lo, hi, std::vector<double>(x.data(), x.data() + n));
}

inline EquilibriumSolution solve_equilibrium(const IntervalUnion& k, const QuadratureConfig& cfg) {
  EquilibriumSolution sol(k);
  const std::size_t n = k.size();
  sol.t_ = solve_T(k, cfg, &sol.condition_number_);
  const auto mono = sol.t_.monomial();
  sol.leading_coefficient_ = mono.back();

  sol.bands_.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    BandData& band = sol.bands_[l];
    band.a = k.left(l);
    band.b = k.right(l);
    band.sign = ((n + l + 2) % 2 == 0) ? 1.0 : -1.0;
    band.others = detail::endpoints_except(k, band.a, band.b);
    double gap = std::numeric_limits<double>::infinity();
    if (l > 0) gap = std::min(gap, k.left(l) - k.right(l - 1));
    if (l + 1 < n) gap = std::min(gap, k.left(l + 1) - k.right(l));
    band.order = resolving_order(k.width(l), gap, cfg.band_order);
    band.expansion = expand_band([&](double t) { return sol.smooth_factor(l, t); }, band.a,
                                 band.b, band.order);
  }

  sol.total_mass_ = 0.0;
  for (const BandData& band : sol.bands_) sol.total_mass_ += band.expansion.mass();

  for (std::size_t g = 0; g + 1 < n; ++g) {
    sol.critical_points_.push_back(detail::gap_zero(sol.t_, k.right(g), k.left(g + 1)));
  }

  double centroid = 0.0;
  for (std::size_t l = 0; l < n; ++l) centroid += 0.5 * (k.left(l) + k.right(l));
  for (double z : sol.critical_points_) centroid -= z;
  sol.centroid_ = centroid;
  sol.centroid_quadrature_ = sol.integrate([](double t) { return t; });

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double u = sol.potential(Complex(0.5 * (k.left(l) + k.right(l)), 0.0));
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  sol.robin_ = sum / static_cast<double>(n);
  sol.frostman_deviation_ = hi - lo;
  if (sol.frostman_deviation_ > 100.0 * cfg.abs_tol) {
    std::ostringstream os;
    os << "potential differs across bands by " << sol.frostman_deviation_;
    fail(ErrorCode::FrostmanInconsistent, os.str());
  }
  sol.capacity_ = std::exp(sol.robin_);
  return sol;
}

/// Accessors mirroring the named operations of the solver.
inline double density_at(const EquilibriumSolution& sol, double x) { return sol.density(x); }
inline const std::vector<double>& critical_points(const EquilibriumSolution& sol) {
  return sol.critical_points();
}
inline double centroid(const EquilibriumSolution& sol) { return sol.centroid(); }
inline double capacity(const EquilibriumSolution& sol) { return sol.capacity(); }

/// (1 / pi i) int_K t^j / sqrt(R(t)) dt; zero for j <= N-2 and -1 for j = N-1.
inline double residue_moment(const IntervalUnion& k, int j, const QuadratureConfig& cfg) {
  const std::size_t n = k.size();
  double total = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double sign = ((n + l + 2) % 2 == 0) ? 1.0 : -1.0;
    const auto others = detail::endpoints_except(k, k.left(l), k.right(l));
    double gap = std::numeric_limits<double>::infinity();
    if (l > 0) gap = std::min(gap, k.left(l) - k.right(l - 1));
    if (l + 1 < n) gap = std::min(gap, k.left(l + 1) - k.right(l));
    const int order = resolving_order(k.width(l), gap, cfg.band_order);
    total += sign / kPi *
             integrate_inv_sqrt(
                 [&](double t) {
                   double q = 1.0;
                   for (double e : others) q *= std::abs(t - e);
                   return std::pow(t, j) / std::sqrt(q);
                 },
                 k.left(l), k.right(l), order);
  }
  return total;
}

/// Residual of the Cauchy integral identity
///   (1 / pi i) int_K T(t) dt / ((t - z) sqrt(R(t))) = 0 on band interiors,
///                                                   = T(z) / sqrt(R(z)) off K.
inline Complex cauchy_pv_check(const EquilibriumSolution& sol, Complex z) {
  const IntervalUnion& k = sol.set();
  const Complex computed = sol.cauchy_transform(z);
  if (z.imag() == 0.0) {
    if (k.band_of(z.real())) return computed;
    for (double e : k.endpoints()) {
      if (z.real() == e) fail(ErrorCode::OnCut, "Cauchy integral diverges at an endpoint");
    }
  }
  // T has real coefficients; evaluate at complex z through its monomial form.
  const auto mono = sol.T().monomial();
  Complex tz = 0.0;
  for (std::size_t i = mono.size(); i-- > 0;) tz = tz * z + mono[i];
  return computed - tz / sqrt_r(k, z);
}

struct GapMidpointBound {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return lhs - rhs; }
};

/// sum_l ((b_l + a_{l+1}) / 2 - z_l) against 2 - (b_N - a_1) / 2 for a set of
/// unit capacity.
inline GapMidpointBound gap_midpoint_bound(const EquilibriumSolution& sol,
                                           double capacity_tol = 1e-8) {
  if (std::abs(sol.capacity() - 1.0) > capacity_tol) {
    fail(ErrorCode::NotNormalized, "gap midpoint bound needs cap(K) = 1");
  }
  const IntervalUnion& k = sol.set();
  GapMidpointBound out;
  for (std::size_t g = 0; g + 1 < k.size(); ++g) {
    out.lhs += 0.5 * (k.right(g) + k.left(g + 1)) - sol.critical_points()[g];
  }
  out.rhs = 2.0 - 0.5 * (k.hull_right() - k.hull_left());
  return out;
}

/// Solves K, maps it to unit capacity and centroid 0, and solves the image.
inline std::pair<EquilibriumSolution, AffineMap> solve_normalized(const IntervalUnion& k,
                                                                  const QuadratureConfig& cfg) {
  const EquilibriumSolution first = solve_equilibrium(k, cfg);
  auto [image, map] = normalize(k, first.capacity(), first.centroid());
  return {solve_equilibrium(image, cfg), map};
}

}  // namespace eqm
