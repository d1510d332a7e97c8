#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/errors.hpp"
#include "eqm/quadrature.hpp"
#include "eqm/random.hpp"
#include "eqm/realsets.hpp"

namespace eqm {

/// Where an integrand over a measure stops being smooth, expressed in terms
/// of the point z of the support:
///   re          kinks along the lines Re z = v,
///   modulus     kinks along the circles |z| = r,
///   re_graded   kinks along Re z = v that also need a graded mesh,
///   origin      log-type singularity at z = 0.
struct KinkSpec {
  std::vector<double> re;
  std::vector<double> modulus;
  std::vector<double> re_graded;
  bool origin = false;
  int levels = 40;
};

/// F(w) = w + sum_{n>=1} b_n w^{-n} on |w| > 1.
struct Sigma0Map {
  std::vector<Complex> b;  // b[0] is b_1

  Complex operator()(Complex w) const {
    Complex sum = w;
    const Complex inv = 1.0 / w;
    Complex p = inv;
    for (const Complex& bn : b) {
      sum += bn * p;
      p *= inv;
    }
    return sum;
  }

  /// sum n |b_n|^2; the area theorem needs this to be at most 1.
  double area_sum() const {
    double s = 0.0;
    for (std::size_t n = 0; n < b.size(); ++n) s += static_cast<double>(n + 1) * std::norm(b[n]);
    return s;
  }

  bool odd() const {
    for (std::size_t n = 0; n < b.size(); ++n) {
      if ((n + 1) % 2 == 0 && b[n] != Complex(0.0)) return false;
    }
    return true;
  }
};

/// A plane continuum whose equilibrium measure is the pushforward of
/// d theta / 2 pi under theta -> F(e^{i theta}).
class ParametricMeasure {
 public:
  using Boundary = std::function<Complex(double)>;
  using Inverse = std::function<Complex(Complex)>;

  struct Info {
    std::string tag;
    double parameter = 0.0;
    Complex centroid = 0.0;
    bool symmetric = false;
    bool univalence_unverified = false;
  };

  ParametricMeasure(Info info, Boundary boundary, Inverse inverse = {})
      : info_(std::move(info)), boundary_(std::move(boundary)), inverse_(std::move(inverse)) {
    const int n = 4096;
    double best = 0.0;
    int arg = 0;
    for (int j = 0; j < n; ++j) {
      const double r = std::abs(boundary_(-kPi + 2.0 * kPi * j / n));
      if (r > best) {
        best = r;
        arg = j;
      }
    }
    const double h = 2.0 * kPi / n;
    const double t = golden_max([&](double th) { return std::abs(boundary_(th)); },
                                -kPi + h * (arg - 1), -kPi + h * (arg + 1));
    radius_ = std::max(best, std::abs(boundary_(t)));
  }

  const std::string& tag() const { return info_.tag; }
  double parameter() const { return info_.parameter; }
  Complex centroid() const { return info_.centroid; }
  bool symmetric() const { return info_.symmetric; }
  bool univalence_unverified() const { return info_.univalence_unverified; }
  double capacity() const { return 1.0; }
  double robin() const { return 0.0; }
  double enclosing_radius() const { return radius_; }
  bool has_inverse() const { return static_cast<bool>(inverse_); }

  Complex boundary(double theta) const { return boundary_(theta); }

  /// log|Phi(z)| for the exterior inverse Phi; negative inside K.
  double exterior_log_modulus(Complex z) const {
    if (!inverse_) fail(ErrorCode::InvalidConfig, "no exterior inverse for this family");
    return std::log(std::abs(inverse_(z)));
  }

  /// int log|z - zeta| dmu(zeta).
  double potential(Complex z, int nodes = 2048) const {
    if (inverse_) return std::max(0.0, std::log(std::abs(inverse_(z))));
    const double h = 2.0 * kPi / nodes;
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) sum += std::log(std::abs(z - boundary_(-kPi + h * j)));
    return sum / nodes;
  }

  /// Membership of z in the filled set K.
  bool contains(Complex z) const {
    if (inverse_) return std::abs(inverse_(z)) <= 1.0 + 1e-12;
    const int n = 4096;
    double winding = 0.0;
    Complex prev = boundary_(-kPi) - z;
    double closest = std::abs(prev);
    for (int j = 1; j <= n; ++j) {
      const Complex cur = boundary_(-kPi + 2.0 * kPi * j / n) - z;
      closest = std::min(closest, std::abs(cur));
      winding += std::arg(cur / prev);
      prev = cur;
    }
    return closest < 1e-9 * (1.0 + radius_) || std::abs(winding) > kPi;
  }

  /// Angles where the boundary passes through the origin.
  std::vector<double> origin_angles(int nodes) const {
    std::vector<double> out;
    const double h = 2.0 * kPi / nodes;
    std::vector<double> m(nodes);
    for (int j = 0; j < nodes; ++j) m[j] = std::abs(boundary_(-kPi + h * j));
    for (int j = 0; j < nodes; ++j) {
      const double left = m[(j + nodes - 1) % nodes];
      const double right = m[(j + 1) % nodes];
      if (m[j] <= left && m[j] < right) {
        const double c = -kPi + h * j;
        const double t = golden_max([&](double th) { return -std::abs(boundary_(th)); }, c - h,
                                    c + h);
        if (std::abs(boundary_(t)) < 1e-9 * (1.0 + radius_)) out.push_back(t);
      }
    }
    return out;
  }

  /// int f(z) dmu(z) = (1 / 2 pi) int f(F(e^{i theta})) d theta.
  template <class Fn>
  double integrate(Fn&& f, const KinkSpec& spec, const QuadratureConfig& cfg) const {
    const int n = cfg.param_nodes;
    std::vector<double> kinks;
    std::vector<double> graded;
    for (double v : spec.re) {
      auto s = sign_changes([&](double t) { return boundary_(t).real() - v; }, n);
      kinks.insert(kinks.end(), s.begin(), s.end());
    }
    for (double r : spec.modulus) {
      auto s = sign_changes([&](double t) { return std::abs(boundary_(t)) - r; }, n);
      kinks.insert(kinks.end(), s.begin(), s.end());
    }
    for (double v : spec.re_graded) {
      auto s = sign_changes([&](double t) { return boundary_(t).real() - v; }, n);
      graded.insert(graded.end(), s.begin(), s.end());
    }
    if (spec.origin) {
      auto s = origin_angles(n);
      graded.insert(graded.end(), s.begin(), s.end());
    }
    const double total = integrate_periodic([&](double t) { return f(boundary_(t)); }, n,
                                            std::move(kinks), std::move(graded), spec.levels);
    return total / (2.0 * kPi);
  }

  template <class Fn>
  double integrate(Fn&& f, const QuadratureConfig& cfg) const {
    return integrate(std::forward<Fn>(f), KinkSpec{}, cfg);
  }

  /// Complex-valued smooth integrand by the trapezoid rule.
  template <class Fn>
  Complex integrate_complex(Fn&& f, int nodes) const {
    Complex sum = 0.0;
    const double h = 2.0 * kPi / nodes;
    for (int j = 0; j < nodes; ++j) sum += f(boundary_(-kPi + h * j));
    return sum / static_cast<double>(nodes);
  }

  /// Maximizer of a unimodal function on [lo, hi] by golden-section search.
  template <class Fn>
  static double golden_max(Fn&& f, double lo, double hi, int iterations = 80) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo;
    double b = hi;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations && b - a > 1e-15 * (1.0 + std::abs(a)); ++i) {
      if (fc < fd) {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = f(d);
      } else {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = f(c);
      }
    }
    return 0.5 * (a + b);
  }

 private:
  Info info_;
  Boundary boundary_;
  Inverse inverse_;
  double radius_ = 0.0;
};

namespace detail {

/// Root of w^2 - z w + d = 0 of larger modulus.
inline Complex joukowski_inverse(Complex z, double d) {
  if (d == 0.0) return z;
  const Complex s = std::sqrt(z * z - 4.0 * d);
  const Complex w1 = 0.5 * (z + s);
  const Complex w2 = 0.5 * (z - s);
  return std::abs(w1) >= std::abs(w2) ? w1 : w2;
}

}  // namespace detail

/// Image of |w| = 1 under w + d / w: the ellipse (1 + d) cos t + i (1 - d) sin t.
/// d = 1 is the segment [-2, 2], d = 0 the unit circle.
inline ParametricMeasure joukowski_ellipse(double d) {
  if (!(d >= 0.0 && d <= 1.0)) fail(ErrorCode::OutOfRange, "ellipse parameter must lie in [0, 1]");
  ParametricMeasure::Info info{"ellipse", d, 0.0, true, false};
  return ParametricMeasure(
      info, [d](double t) { return Complex((1.0 + d) * std::cos(t), (1.0 - d) * std::sin(t)); },
      [d](Complex z) { return detail::joukowski_inverse(z, d); });
}

/// The segment L rotated by alpha: t -> 2 e^{i alpha} cos t.
inline ParametricMeasure rotated_segment(double alpha) {
  ParametricMeasure::Info info{"rotated_segment", alpha, 0.0, true, false};
  const Complex rot = std::polar(1.0, alpha);
  return ParametricMeasure(
      info, [rot](double t) { return 2.0 * rot * std::cos(t); },
      [rot](Complex z) { return detail::joukowski_inverse(z / rot, 1.0); });
}

/// Ellipse of parameter d translated by 1 + d so that it touches the origin
/// from the right; d = 1 gives [0, 4].
inline ParametricMeasure shifted_ellipse(double d) {
  if (!(d >= 0.0 && d <= 1.0)) fail(ErrorCode::OutOfRange, "ellipse parameter must lie in [0, 1]");
  const double s = 1.0 + d;
  ParametricMeasure::Info info{"shifted_ellipse", d, s, false, false};
  return ParametricMeasure(
      info,
      [d, s](double t) { return Complex(s + (1.0 + d) * std::cos(t), (1.0 - d) * std::sin(t)); },
      [d, s](Complex z) { return detail::joukowski_inverse(z - s, d); });
}

/// Pushforward measure of a truncated Sigma_0 map. Univalence is not checked;
/// maps other than w and w + b_1 / w carry the univalence_unverified flag.
inline ParametricMeasure sigma0_measure(const Sigma0Map& f, double parameter = 0.0) {
  if (f.area_sum() > 1.0 + 1e-14) {
    fail(ErrorCode::AreaViolated, "sum n |b_n|^2 exceeds 1");
  }
  bool simple = true;
  for (std::size_t n = 1; n < f.b.size(); ++n) simple = simple && f.b[n] == Complex(0.0);
  ParametricMeasure::Info info{"sigma0", parameter, 0.0, f.odd(), !simple};
  return ParametricMeasure(info, [f](double t) { return f(std::polar(1.0, t)); });
}

/// Seeded admissible coefficients b_1..b_m with sum n |b_n|^2 = u, u uniform
/// in [0.2, 0.95].
inline Sigma0Map random_sigma0(std::uint64_t seed, std::uint64_t index, int m) {
  SplitMix64 rng = SplitMix64::for_item(seed, index);
  Sigma0Map f;
  f.b.resize(m);
  for (int n = 0; n < m; ++n) {
    const double r = rng.uniform();
    const double a = 2.0 * kPi * rng.uniform();
    f.b[n] = std::polar(r / (n + 1.0), a);
  }
  const double target = 0.2 + 0.75 * rng.uniform();
  const double s = f.area_sum();
  if (s > 0.0) {
    for (Complex& bn : f.b) bn *= std::sqrt(target / s);
  }
  return f;
}

/// (1 / 2 pi) int |F(e^{i theta})| d theta; the conjectured sharp bound over
/// Sigma_0 is 4 / pi and the best proven one 4.02 / pi.
inline double pommerenke_mean(const Sigma0Map& f, const QuadratureConfig& cfg) {
  const ParametricMeasure m(ParametricMeasure::Info{"sigma0"},
                            [f](double t) { return f(std::polar(1.0, t)); });
  KinkSpec spec;
  spec.origin = true;
  spec.levels = 4;
  return m.integrate([](Complex z) { return std::abs(z); }, spec, cfg);
}

inline constexpr double kPommerenkeConjectured = 4.0 / std::numbers::pi;
inline constexpr double kPommerenkeKnown = 4.02 / std::numbers::pi;

/// (1 / 2 pi) int |F|^2 = 1 + sum |b_n|^2, at most 2 by the area theorem.
inline double area_theorem_mean_sq(const Sigma0Map& f) {
  if (f.area_sum() > 1.0 + 1e-14) fail(ErrorCode::AreaViolated, "sum n |b_n|^2 exceeds 1");
  double s = 1.0;
  for (const Complex& bn : f.b) s += std::norm(bn);
  return s;
}

/// Trapezoid quadrature of (1 / 2 pi) int |F|^2, exact once the node count
/// exceeds twice the number of coefficients.
inline double mean_square_quadrature(const Sigma0Map& f, int nodes = 256) {
  nodes = std::max<int>(nodes, 4 * static_cast<int>(f.b.size()) + 8);
  double s = 0.0;
  for (int j = 0; j < nodes; ++j) s += std::norm(f(std::polar(1.0, 2.0 * kPi * j / nodes)));
  return s / nodes;
}

/// Ellipses d = 0.1, ..., 0.9.
inline std::vector<ParametricMeasure> ellipse_family() {
  std::vector<ParametricMeasure> out;
  for (int i = 1; i <= 9; ++i) out.push_back(joukowski_ellipse(0.1 * i));
  return out;
}

/// Rotated segments alpha = k pi / 20, k = 1..10 (so alpha in (0, pi/2]).
inline std::vector<ParametricMeasure> rotated_segment_family() {
  std::vector<ParametricMeasure> out;
  for (int k = 1; k <= 10; ++k) out.push_back(rotated_segment(k * kPi / 20.0));
  return out;
}

/// Shifted ellipses d = 0.1, ..., 1.0 (d = 1 is [0, 4]).
inline std::vector<ParametricMeasure> shifted_ellipse_family() {
  std::vector<ParametricMeasure> out;
  for (int i = 1; i <= 10; ++i) out.push_back(shifted_ellipse(0.1 * i));
  return out;
}

}  // namespace eqm
