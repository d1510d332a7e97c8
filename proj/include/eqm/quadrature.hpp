#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/errors.hpp"
#include "eqm/realsets.hpp"

namespace eqm {

inline constexpr double kPi = std::numbers::pi;

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

namespace detail {

inline GaussRule build_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace detail

/// Cached n-point Gauss-Legendre rule; safe to call from several threads.
inline const GaussRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(detail::build_gauss_legendre(n));
  return *slot;
}

template <class F>
double integrate_gl(F&& f, double a, double b, int order = 16) {
  const GaussRule& rule = gauss_legendre(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

/// Composite Gauss-Legendre over consecutive breakpoints.
template <class F>
double integrate_panels(F&& f, std::span<const double> breaks, int order = 16) {
  double sum = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (breaks[i] > breaks[i - 1]) sum += integrate_gl(f, breaks[i - 1], breaks[i], order);
  }
  return sum;
}

/// Breakpoints on [lo, hi]: `panels` uniform panels, the given interior
/// breakpoints, and geometric refinement (ratio 1/2, `levels` deep) on both
/// sides of every point listed in `graded` (which may include lo and hi).
inline std::vector<double> make_breaks(double lo, double hi, int panels,
                                       std::span<const double> interior = {},
                                       std::span<const double> graded = {}, int levels = 0) {
  std::vector<double> b;
  panels = std::max(panels, 1);
  for (int i = 0; i <= panels; ++i) b.push_back(lo + (hi - lo) * i / panels);
  for (double x : interior) {
    if (x > lo && x < hi) b.push_back(x);
  }
  const double h = (hi - lo) / panels;
  for (double g : graded) {
    if (g < lo || g > hi) continue;
    b.push_back(g);
    double step = h;
    for (int k = 0; k < levels; ++k) {
      step *= 0.5;
      if (g - step > lo) b.push_back(g - step);
      if (g + step < hi) b.push_back(g + step);
    }
  }
  std::sort(b.begin(), b.end());
  const double eps = 1e-15 * std::max(1.0, std::abs(hi - lo));
  std::vector<double> out;
  for (double x : b) {
    if (out.empty() || x - out.back() > eps) out.push_back(x);
  }
  out.back() = hi;
  out.front() = lo;
  return out;
}

/// Integral of f(x) / sqrt((x - a)(b - x)) over [a, b] via x = m + r cos(theta)
/// and the midpoint rule in theta (Gauss-Chebyshev of the first kind): exact
/// for polynomials of degree < 2 n.
template <class F>
double integrate_inv_sqrt(F&& f, double a, double b, int nodes) {
  if (!(a < b)) fail(ErrorCode::InvalidInterval, "integrate_inv_sqrt needs a < b");
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double theta = (j + 0.5) * kPi / nodes;
    sum += f(mid + half * std::cos(theta));
  }
  return sum * kPi / nodes;
}

template <class F>
double integrate_inv_sqrt(F&& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate_inv_sqrt(std::forward<F>(f), a, b, cfg.band_order);
}

/// Chebyshev expansion h(m + r cos theta) = sum_k c_k cos(k theta) of the smooth
/// factor h of a band density h(t) / sqrt((t - a)(b - t)).
struct BandExpansion {
  double mid = 0.0;
  double half = 1.0;
  std::vector<double> coeffs;

  double mass() const { return kPi * coeffs.at(0); }

  /// c = (z - mid) / half, rho = c + sqrt(c^2 - 1) on the branch |rho| >= 1.
  Complex rho(Complex z) const {
    const Complex c = (z - mid) / half;
    return c + std::sqrt(c - 1.0) * std::sqrt(c + 1.0);
  }

  /// int_0^pi log|z - t(theta)| h dtheta, using
  ///   log|c - cos(theta)| = log|rho/2| - 2 sum_k Re(rho^-k) cos(k theta) / k.
  double log_moment(Complex z) const {
    const Complex r = rho(z);
    const double modulus = std::abs(r);
    double sum = coeffs[0] * std::log(half * modulus / 2.0);
    const Complex q = 1.0 / r;
    Complex p = q;
    const double decay = 1.0 / modulus;
    double envelope = decay;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
      sum -= coeffs[k] * p.real() / static_cast<double>(k);
      p *= q;
      envelope *= decay;
      if (envelope < 1e-18) break;
    }
    return kPi * sum;
  }

  /// int_0^pi h dtheta / (t(theta) - z); principal value when z is a real point
  /// inside the band, using the Glauert integral
  ///   PV int_0^pi cos(k th) / (cos th - cos th0) dth = pi sin(k th0) / sin th0.
  Complex cauchy_moment(Complex z) const {
    const Complex c = (z - mid) / half;
    if (z.imag() == 0.0 && std::abs(c.real()) < 1.0) {
      const double th0 = std::acos(c.real());
      const double s0 = std::sin(th0);
      double sum = 0.0;
      for (std::size_t k = 1; k < coeffs.size(); ++k) {
        sum += coeffs[k] * std::sin(static_cast<double>(k) * th0);
      }
      return kPi * sum / s0 / half;
    }
    const Complex r = rho(z);
    const Complex q = 1.0 / r;
    Complex p = 1.0;
    Complex sum = 0.0;
    const double decay = 1.0 / std::abs(r);
    double envelope = 1.0;
    for (double ck : coeffs) {
      sum += ck * p;
      p *= q;
      envelope *= decay;
      if (envelope < 1e-18) break;
    }
    // int_0^pi cos(j th) / (c - cos th) dth = 2 pi rho^-j / (rho - 1/rho).
    return -(2.0 * kPi / (r - q)) * sum / half;
  }

  /// int_a^x of the band density.
  double partial_mass(double x) const {
    const double c = std::clamp((x - mid) / half, -1.0, 1.0);
    const double thx = std::acos(c);
    double sum = coeffs[0] * (kPi - thx);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
      sum -= coeffs[k] * std::sin(static_cast<double>(k) * thx) / static_cast<double>(k);
    }
    return sum;
  }
};

/// Samples h at the n midpoint nodes of [0, pi] and returns its cosine
/// coefficients, dropping the negligible tail.
template <class H>
BandExpansion expand_band(H&& h, double a, double b, int n) {
  BandExpansion e;
  e.mid = 0.5 * (a + b);
  e.half = 0.5 * (b - a);
  std::vector<double> samples(n);
  for (int j = 0; j < n; ++j) {
    samples[j] = h(e.mid + e.half * std::cos((j + 0.5) * kPi / n));
  }
  // cos(k theta_j) = cos(k (2j+1) pi / (2n)); index the table mod 4n.
  std::vector<double> table(4 * n);
  for (int i = 0; i < 4 * n; ++i) table[i] = std::cos(i * kPi / (2.0 * n));
  e.coeffs.assign(n, 0.0);
  double scale = 0.0;
  for (int k = 0; k < n; ++k) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      s += samples[j] * table[(static_cast<long>(k) * (2 * j + 1)) % (4 * n)];
    }
    e.coeffs[k] = (k == 0 ? 1.0 : 2.0) * s / n;
    scale = std::max(scale, std::abs(e.coeffs[k]));
  }
  std::size_t keep = e.coeffs.size();
  while (keep > 1 && std::abs(e.coeffs[keep - 1]) < 1e-18 * scale) --keep;
  e.coeffs.resize(keep);
  return e;
}

/// int_K log|x0 - t| density(t) dt for a density with inverse square root
/// endpoint behaviour on every band. The smooth factor
/// density * sqrt((t - a)(b - t)) is expanded in Chebyshev polynomials and the
/// logarithm is integrated against each term in closed form, so points x0 on
/// a band are handled without any special mesh.
template <class D>
double integrate_log_kernel(D&& density, const IntervalUnion& k, Complex x0,
                            const QuadratureConfig& cfg) {
  double total = 0.0;
  for (std::size_t l = 0; l < k.size(); ++l) {
    const double a = k.left(l);
    const double b = k.right(l);
    auto smooth = [&](double t) { return density(t) * std::sqrt((t - a) * (b - t)); };
    total += expand_band(smooth, a, b, cfg.band_order).log_moment(x0);
  }
  return total;
}

/// Angles in [-pi, pi) where `level` changes sign, located on a grid of
/// `nodes` points and refined by bisection.
template <class L>
std::vector<double> sign_changes(L&& level, int nodes) {
  std::vector<double> out;
  const double h = 2.0 * kPi / nodes;
  std::vector<double> v(nodes);
  for (int j = 0; j < nodes; ++j) v[j] = level(-kPi + h * j);
  for (int j = 0; j < nodes; ++j) {
    const int k = (j + 1) % nodes;
    const double t0 = -kPi + h * j;
    if (v[j] == 0.0) {
      out.push_back(t0);
      continue;
    }
    if (v[j] * v[k] < 0.0) {
      double lo = t0;
      double hi = t0 + h;
      double flo = v[j];
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (lo + hi);
        const double fm = level(m);
        if (fm == 0.0) {
          lo = hi = m;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = m;
          flo = fm;
        } else {
          hi = m;
        }
      }
      double root = 0.5 * (lo + hi);
      if (root >= kPi) root -= 2.0 * kPi;
      out.push_back(root);
    }
  }
  return out;
}

/// int_{-pi}^{pi} f(theta) dtheta for 2 pi periodic f that is smooth apart from
/// the listed angles. Without breaks this is the periodic trapezoid rule on
/// `nodes` points; otherwise each arc between consecutive breaks gets
/// Gauss-Legendre panels of comparable resolution, graded geometrically
/// towards the angles in `graded`.
template <class F>
double integrate_periodic(F&& f, int nodes, std::vector<double> kinks,
                          std::vector<double> graded = {}, int levels = 40) {
  const double h = 2.0 * kPi / nodes;
  auto wrap = [](double t) {
    t = std::fmod(t + kPi, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return t - kPi;
  };
  if (kinks.empty() && graded.empty()) {
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) sum += f(-kPi + h * j);
    return sum * h;
  }
  std::vector<std::pair<double, bool>> breaks;
  for (double t : kinks) breaks.emplace_back(wrap(t), false);
  for (double t : graded) breaks.emplace_back(wrap(t), true);
  std::sort(breaks.begin(), breaks.end());
  // Merge coincident breaks, keeping the graded flag.
  std::vector<std::pair<double, bool>> merged;
  for (const auto& b : breaks) {
    if (!merged.empty() && b.first - merged.back().first < 1e-13) {
      merged.back().second = merged.back().second || b.second;
    } else {
      merged.push_back(b);
    }
  }
  if (merged.size() > 1 && merged.front().first + 2.0 * kPi - merged.back().first < 1e-13) {
    merged.front().second = merged.front().second || merged.back().second;
    merged.pop_back();
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const double lo = merged[i].first;
    double hi = (i + 1 < merged.size()) ? merged[i + 1].first : merged[0].first + 2.0 * kPi;
    if (merged.size() == 1) hi = lo + 2.0 * kPi;
    const bool grade_lo = merged[i].second;
    const bool grade_hi = (i + 1 < merged.size()) ? merged[i + 1].second : merged[0].second;
    const int panels = std::max(2, static_cast<int>(std::ceil((hi - lo) / (16.0 * h))));
    std::vector<double> g;
    if (grade_lo) g.push_back(lo);
    if (grade_hi) g.push_back(hi);
    const auto b = make_breaks(lo, hi, panels, {}, g, g.empty() ? 0 : levels);
    sum += integrate_panels(f, b, 16);
  }
  return sum;
}

/// Number of theta nodes that resolves a band factor whose nearest singularity
/// sits `distance` beyond a band of the given width (Bernstein-ellipse bound).
inline int resolving_order(double width, double distance, int minimum, int maximum = 16384) {
  if (!(distance > 0.0) || !std::isfinite(distance)) return minimum;
  const double c = 1.0 + 2.0 * distance / width;
  const double rho = c + std::sqrt(c * c - 1.0);
  const double needed = 40.0 / std::log(rho);
  return std::clamp(static_cast<int>(std::ceil(needed)), minimum, maximum);
}

}  // namespace eqm
