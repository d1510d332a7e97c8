#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/errors.hpp"
#include "eqm/moments.hpp"
#include "eqm/parallel.hpp"
#include "eqm/potential.hpp"
#include "eqm/quadrature.hpp"
#include "eqm/test_functions.hpp"

namespace eqm {

/// Green's function of the complement of L = [-2, 2] with pole at infinity.
inline double closed_form_G(Complex z) {
  const Complex u = 0.5 * z;
  return std::log(std::abs(u + std::sqrt(u - 1.0) * std::sqrt(u + 1.0)));
}

/// Green's function of the complement of [0, 4].
inline double closed_form_Gtilde(Complex z) { return closed_form_G(z - 2.0); }

inline double green_eval(const Potential& p, Complex z) { return p.green(z); }

/// m-th x-derivative of g at a real point x0 right of the support, from
/// d^m/dx^m log|x - s| = (-1)^{m+1} (m-1)! (x - s)^{-m}.
inline double green_x_derivative(const Potential& p, double x0, int m,
                                 const QuadratureConfig& cfg = {}) {
  if (m < 0) fail(ErrorCode::OutOfRange, "derivative order must be >= 0");
  const double right = p.real_range().second;
  if (x0 - right < 1e-6) {
    std::ostringstream os;
    os << "x0 = " << x0 << " is within 1e-6 of (or left of) max Re K = " << right;
    fail(ErrorCode::PoleTooClose, os.str());
  }
  if (m == 0) return p.green(x0);
  const double c = ((m + 1) % 2 == 0 ? 1.0 : -1.0) * std::tgamma(static_cast<double>(m));
  KinkSpec spec;
  spec.re_graded = {x0};
  return p.integrate([&](Complex z) { return (c * std::pow(Complex(x0) - z, -m)).real(); }, spec,
                     cfg);
}

/// int_0^s log|u + i y| dy.
inline double strip_primitive(double u, double s) {
  const double au = std::abs(u);
  double r = 0.5 * s * std::log(u * u + s * s) - s;
  if (au > 0.0) r += au * std::atan(s / au);
  return r;
}

/// x -> int_R (U1 - U2)(x + i y) dy for two potentials of equal capacity and
/// centroid. On |y| <= Y the inner y-integral is done in closed form for every
/// source point (Fubini), which leaves one integral against each measure with
/// a kink at Re zeta = x. Beyond Y the series
///   U1 - U2 = -Re sum_{n>=2} b_n z^{-n},  b_n = a_n(mu1) - a_n(mu2)
/// is integrated term by term.
class VerticalLineIntegrator {
 public:
  VerticalLineIntegrator(Potential p1, Potential p2, const QuadratureConfig& cfg)
      : p1_(std::move(p1)), p2_(std::move(p2)), cfg_(cfg) {
    cfg_.validate();
    radius_ = std::max(p1_.enclosing_radius(), p2_.enclosing_radius());
    height_ = cfg_.tail_height(radius_);
    const auto a1 = p1_.expansion_coefficients(cfg_.tail_terms + 1, cfg_);
    const auto a2 = p2_.expansion_coefficients(cfg_.tail_terms + 1, cfg_);
    b_.resize(a1.size());
    for (std::size_t n = 0; n < a1.size(); ++n) b_[n] = a1[n] - a2[n];
  }

  double height() const { return height_; }
  double enclosing_radius() const { return radius_; }
  const Potential& first() const { return p1_; }
  const Potential& second() const { return p2_; }

  /// Closed-form y-integral over [-Y, Y] against one measure.
  double finite_part(const Potential& p, double x) const {
    const double y = height_;
    KinkSpec spec;
    spec.re_graded = {x};
    spec.levels = 14;
    return p.integrate(
        [&](Complex z) {
          const double u = x - z.real();
          return strip_primitive(u, y - z.imag()) + strip_primitive(u, y + z.imag());
        },
        spec, cfg_);
  }

  double tail(double x) const {
    const Complex up(x, height_);
    const Complex down(x, -height_);
    double sum = 0.0;
    for (std::size_t n = 2; n < b_.size(); ++n) {
      const double k = static_cast<double>(n) - 1.0;
      const Complex term = (std::pow(up, -k) - std::pow(down, -k)) / (Complex(0.0, 1.0) * k);
      sum -= (b_[n] * term).real();
    }
    return sum;
  }

  /// Decay exponent of max |U1 - U2| between the circles |z| = Y and |z| = 2Y;
  /// throws when it is visibly slower than y^-1.5. Maxima over whole circles
  /// are immune to the sign changes a single vertical line can hit.
  void check_decay() const {
    auto peak = [&](double rho) {
      double m = 0.0;
      for (int j = 0; j < 64; ++j) {
        const Complex z = std::polar(rho, 2.0 * kPi * (j + 0.5) / 64.0);
        m = std::max(m, std::abs(p1_.potential(z) - p2_.potential(z)));
      }
      return m;
    };
    const double d1 = peak(height_);
    const double d2 = peak(2.0 * height_);
    if (d1 < 1e-12 || d2 == 0.0) return;
    const double rate = std::log2(d1 / d2);
    if (rate < 1.5) {
      std::ostringstream os;
      os << "potential difference decays like |z|^-" << rate << " on the truncation circle";
      fail(ErrorCode::TailDivergence, os.str());
    }
  }

  double operator()(double x) const {
    return finite_part(p1_, x) - finite_part(p2_, x) + tail(x);
  }

 private:
  Potential p1_;
  Potential p2_;
  QuadratureConfig cfg_;
  double radius_ = 0.0;
  double height_ = 0.0;
  std::vector<Complex> b_;
};

/// int_R (g1 - g2)(x + i y) dy.
inline double integrate_vertical_line(const Potential& p1, const Potential& p2, double x,
                                      const QuadratureConfig& cfg = {}) {
  const VerticalLineIntegrator vi(p1, p2, cfg);
  vi.check_decay();
  return vi(x);
}

struct WProfile {
  Potential first;
  Potential second;
  std::vector<double> x;
  std::vector<double> w;
  double enclosing_radius = 0.0;

  double max() const { return w.empty() ? 0.0 : *std::max_element(w.begin(), w.end()); }
};

/// n equispaced points on [-R - 1, R + 1].
inline std::vector<double> default_w_grid(double radius, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = -radius - 1.0 + (2.0 * radius + 2.0) * i / (n - 1);
  return g;
}

inline void require_same_normalization(const Potential& p1, const Potential& p2, double tol = 1e-8) {
  if (std::abs(p1.capacity() - p2.capacity()) > tol ||
      std::abs(p1.centroid() - p2.centroid()) > tol) {
    std::ostringstream os;
    os << "potentials differ in capacity (" << p1.capacity() << " vs " << p2.capacity()
       << ") or centroid (" << p1.centroid() << " vs " << p2.centroid() << ")";
    fail(ErrorCode::HypothesisViolated, os.str());
  }
}

inline WProfile w_profile(const Potential& p1, const Potential& p2, std::vector<double> grid,
                          const QuadratureConfig& cfg = {}) {
  require_same_normalization(p1, p2);
  const VerticalLineIntegrator vi(p1, p2, cfg);
  vi.check_decay();
  WProfile out{p1, p2, std::move(grid), {}, vi.enclosing_radius()};
  out.w = parallel_map(out.x.size(), [&](std::size_t i) { return vi(out.x[i]); });
  return out;
}

struct FormulaCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double difference() const { return lhs - rhs; }
};

/// int phi(Re z) dmu1 - int phi(Re z) dmu2 against (1 / 2 pi) int w dnu, with
/// nu = phi'' split into its density and point masses. Several phi share one
/// node set (breaks at the kinks of all of them), so w is evaluated once.
inline std::vector<FormulaCheck> formula_checks(const Potential& p1, const Potential& p2,
                                                const std::vector<ConvexTestFunction>& phis,
                                                const QuadratureConfig& cfg = {}) {
  require_same_normalization(p1, p2);
  const VerticalLineIntegrator vi(p1, p2, cfg);
  const double r = vi.enclosing_radius();
  std::vector<double> breaks{-r, r};
  for (const Potential* p : {&p1, &p2}) {
    for (double b : p->real_breaks()) breaks.push_back(b);
  }
  for (const auto& phi : phis) {
    for (double k : phi.kinks()) breaks.push_back(k);
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> cut;
  for (double b : breaks) {
    if (b < -r || b > r) continue;
    if (cut.empty() || b - cut.back() > 1e-12) cut.push_back(b);
  }
  // Quadrature nodes and plain weights; phi'' is applied per function below.
  std::vector<double> nodes;
  std::vector<double> weights;
  const GaussRule& rule = gauss_legendre(16);
  for (std::size_t i = 1; i < cut.size(); ++i) {
    const double ends[] = {cut[i - 1], cut[i]};
    const auto panel = make_breaks(cut[i - 1], cut[i], 4, {}, ends, 12);
    for (std::size_t j = 1; j < panel.size(); ++j) {
      const double half = 0.5 * (panel[j] - panel[j - 1]);
      const double mid = 0.5 * (panel[j] + panel[j - 1]);
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        nodes.push_back(mid + half * rule.nodes[q]);
        weights.push_back(half * rule.weights[q]);
      }
    }
  }
  const std::size_t smooth_count = nodes.size();
  for (const auto& phi : phis) {
    for (const PointMass& pm : phi.point_masses()) {
      if (pm.at > -r && pm.at < r) nodes.push_back(pm.at);
    }
  }
  // Only nodes some phi actually charges need w.
  std::vector<char> needed(nodes.size(), 0);
  for (std::size_t i = 0; i < smooth_count; ++i) {
    for (const auto& phi : phis) needed[i] = needed[i] || phi.second_ac(nodes[i]) != 0.0;
  }
  for (std::size_t i = smooth_count; i < nodes.size(); ++i) needed[i] = 1;
  const auto w = parallel_map(nodes.size(), [&](std::size_t i) { return needed[i] ? vi(nodes[i]) : 0.0; });

  std::vector<FormulaCheck> out;
  std::size_t mass_at = smooth_count;
  for (const auto& phi : phis) {
    FormulaCheck fc;
    fc.lhs = moment_real(p1, phi, cfg) - moment_real(p2, phi, cfg);
    double sum = 0.0;
    for (std::size_t i = 0; i < smooth_count; ++i) {
      const double density = phi.second_ac(nodes[i]);
      if (density != 0.0) sum += weights[i] * density * w[i];
    }
    for (const PointMass& pm : phi.point_masses()) {
      if (pm.at > -r && pm.at < r) sum += pm.weight * w[mass_at++];
    }
    fc.rhs = sum / (2.0 * kPi);
    out.push_back(fc);
  }
  return out;
}

inline FormulaCheck formula_check(const Potential& p1, const Potential& p2,
                                  const ConvexTestFunction& phi, const QuadratureConfig& cfg = {}) {
  return formula_checks(p1, p2, {phi}, cfg).front();
}

enum class Curvature { Concave, Convex };

/// Sign of the discrete second differences of w on the strip gamma1 < x <
/// gamma2. w is concave there when the first measure does not charge the
/// strip and convex when the second does not; if the relevant measure charges
/// the strip there is nothing to assert and nullopt is returned.
inline std::optional<bool> concavity_check(const WProfile& wp, double gamma1, double gamma2,
                                           Curvature expect, double tol = 1e-8) {
  const Potential& quiet = expect == Curvature::Concave ? wp.first : wp.second;
  if (quiet.charges_strip(gamma1, gamma2)) return std::nullopt;
  for (std::size_t i = 1; i + 1 < wp.x.size(); ++i) {
    if (!(wp.x[i - 1] > gamma1 && wp.x[i + 1] < gamma2)) continue;
    const double d2 = wp.w[i - 1] - 2.0 * wp.w[i] + wp.w[i + 1];
    if (expect == Curvature::Concave && d2 > tol) return false;
    if (expect == Curvature::Convex && d2 < -tol) return false;
  }
  return true;
}

namespace detail {

/// Geometric refinement depth that resolves a feature at relative distance
/// `ratio` of a panel.
inline int grading_depth(double ratio, int cap = 40) {
  if (!(ratio > 0.0)) return cap;
  if (ratio >= 1.0) return 0;
  return std::clamp(static_cast<int>(std::ceil(-std::log2(ratio))) + 4, 0, cap);
}

inline double parametric_min_modulus(const ParametricMeasure& m) {
  double lo = 1e300;
  const int n = 4096;
  for (int j = 0; j < n; ++j) lo = std::min(lo, std::abs(m.boundary(-kPi + 2.0 * kPi * j / n)));
  return lo;
}

}  // namespace detail

/// I(r) = (1 / 2 pi) int g(r e^{i theta}) d theta.
inline double circle_mean_I(const Potential& p, double r, const QuadratureConfig& cfg = {}) {
  if (!(r > 0.0)) fail(ErrorCode::OutOfRange, "circle mean needs r > 0");
  if (p.is_real()) {
    // Conjugate symmetry halves the circle; g is only non-smooth where the
    // circle meets an endpoint, i.e. near theta = 0 (point r) or pi (point -r).
    const auto e = p.solution().set().endpoints();
    auto depth = [&](double x) {
      double d = 1e300;
      for (double v : e) d = std::min(d, std::abs(x - v));
      return detail::grading_depth((d / r) / (kPi / 16.0));
    };
    const int d0 = depth(r);
    const int d1 = depth(-r);
    std::vector<double> graded;
    if (d0 > 0) graded.push_back(0.0);
    if (d1 > 0) graded.push_back(kPi);
    const auto b = make_breaks(0.0, kPi, 16, {}, graded, std::max(d0, d1));
    return integrate_panels([&](double t) { return p.green(std::polar(r, t)); }, b, 16) / kPi;
  }
  const ParametricMeasure& m = p.parametric();
  int nodes = cfg.circle_nodes;
  const double rmax = m.enclosing_radius();
  const double rmin = detail::parametric_min_modulus(m);
  if (r > 0.9 * rmin && r < 1.1 * rmax) nodes *= 2;
  std::vector<double> graded;
  if (m.has_inverse() && r <= rmax * (1.0 + 1e-12)) {
    graded = sign_changes([&](double t) { return m.exterior_log_modulus(std::polar(r, t)); }, nodes);
  }
  const double total = integrate_periodic([&](double t) { return p.green(std::polar(r, t)); },
                                          nodes, {}, graded, 20);
  return total / (2.0 * kPi);
}

/// Radii where I(t) is not smooth.
inline std::vector<double> radial_breaks(const Potential& p) {
  std::vector<double> out;
  if (p.is_real()) {
    for (double e : p.solution().set().endpoints()) out.push_back(std::abs(e));
  } else {
    out.push_back(detail::parametric_min_modulus(p.parametric()));
    out.push_back(p.parametric().enclosing_radius());
  }
  return out;
}

namespace detail {

/// Panels for an integral in t over [lo, hi] with graded breaks.
inline std::vector<double> radial_mesh(double lo, double hi, std::vector<double> features,
                                       bool grade_zero) {
  features.push_back(lo);
  features.push_back(hi);
  std::sort(features.begin(), features.end());
  std::vector<double> cut;
  for (double f : features) {
    if (f < lo || f > hi) continue;
    if (cut.empty() || f - cut.back() > 1e-12 * (1.0 + hi)) cut.push_back(f);
  }
  std::vector<double> mesh;
  for (std::size_t i = 1; i < cut.size(); ++i) {
    std::vector<double> g{cut[i - 1], cut[i]};
    int levels = 12;
    if (grade_zero && cut[i - 1] == 0.0) levels = 30;
    const auto b = make_breaks(cut[i - 1], cut[i], 4, {}, g, levels);
    for (double x : b) {
      if (mesh.empty() || x > mesh.back()) mesh.push_back(x);
    }
  }
  return mesh;
}

}  // namespace detail

/// J(r) = int_r^R I(t) dt / t at every r of the grid (sorted ascending,
/// all within [0, R]).
inline std::vector<double> radial_mean_J(const Potential& p, std::vector<double> r_grid, double big_r,
                                         const QuadratureConfig& cfg = {}) {
  for (double r : r_grid) {
    if (r < 0.0 || r > big_r) fail(ErrorCode::OutOfRange, "J(r) needs 0 <= r <= R");
  }
  std::vector<double> features = radial_breaks(p);
  features.insert(features.end(), r_grid.begin(), r_grid.end());
  const double lo = r_grid.empty() ? big_r : *std::min_element(r_grid.begin(), r_grid.end());
  const auto mesh = detail::radial_mesh(lo, big_r, features, true);
  const GaussRule& rule = gauss_legendre(16);
  // Integral over each mesh panel, then suffix sums.
  const auto panel = parallel_map(mesh.size() > 0 ? mesh.size() - 1 : 0, [&](std::size_t i) {
    const double a = mesh[i];
    const double b = mesh[i + 1];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double t = mid + half * rule.nodes[q];
      s += rule.weights[q] * circle_mean_I(p, t, cfg) / t;
    }
    return s * half;
  });
  std::vector<double> suffix(mesh.size(), 0.0);
  for (std::size_t i = mesh.size(); i-- > 1;) suffix[i - 1] = suffix[i] + panel[i - 1];
  std::vector<double> out;
  for (double r : r_grid) {
    const auto it = std::lower_bound(mesh.begin(), mesh.end(), r - 1e-12 * (1.0 + big_r));
    out.push_back(it == mesh.end() ? 0.0 : suffix[it - mesh.begin()]);
  }
  return out;
}

inline double radial_mean_J(const Potential& p, double r, double big_r,
                            const QuadratureConfig& cfg = {}) {
  return radial_mean_J(p, std::vector<double>{r}, big_r, cfg).front();
}

struct RepresentationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double difference() const { return lhs - rhs; }
};

/// int phi(log|z|) dmu against
///   int_0^R I(t) phi''(log t) dt / t + phi(log R) - phi'(log R) log R,
/// valid for R at least the enclosing radius and phi' -> 0 at -infinity.
inline RepresentationCheck logmoment_representation_check(const Potential& p,
                                                          const ConvexTestFunction& phi,
                                                          double big_r,
                                                          const QuadratureConfig& cfg = {}) {
  if (big_r < p.enclosing_radius() * (1.0 - 1e-12)) {
    fail(ErrorCode::OutOfRange, "R must be at least the enclosing radius");
  }
  if (!(std::abs(phi.derivative(-60.0)) < 1e-12) || !std::isfinite(phi(-60.0))) {
    fail(ErrorCode::HypothesisViolated, "phi must be constant near -infinity");
  }
  RepresentationCheck out;
  out.lhs = moment_log(p, phi, cfg);
  const double s = std::log(big_r);
  std::vector<double> features = radial_breaks(p);
  for (double k : phi.kinks()) features.push_back(std::exp(k));
  const auto mesh = detail::radial_mesh(0.0, big_r, features, true);
  const GaussRule& rule = gauss_legendre(16);
  std::vector<double> nodes;
  std::vector<double> weights;
  for (std::size_t i = 1; i < mesh.size(); ++i) {
    const double half = 0.5 * (mesh[i] - mesh[i - 1]);
    const double mid = 0.5 * (mesh[i] + mesh[i - 1]);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double t = mid + half * rule.nodes[q];
      const double density = phi.second_ac(std::log(t));
      if (density == 0.0) continue;
      nodes.push_back(t);
      weights.push_back(half * rule.weights[q] * density / t);
    }
  }
  for (const PointMass& pm : phi.point_masses()) {
    if (pm.at < s) {
      nodes.push_back(std::exp(pm.at));
      weights.push_back(pm.weight);
    }
  }
  const auto values =
      parallel_map(nodes.size(), [&](std::size_t i) { return circle_mean_I(p, nodes[i], cfg); });
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += weights[i] * values[i];
  out.rhs = sum + phi(s) - phi.derivative(s) * s;
  return out;
}

}  // namespace eqm
