#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/errors.hpp"
#include "eqm/test_functions.hpp"

namespace eqm {

enum class PointKind { Leja, Fekete };

struct PointConfiguration {
  std::vector<double> points;  // in generation order for Leja, sorted for Fekete
  PointKind kind = PointKind::Leja;
  int sweeps = 0;              // exchange sweeps (Fekete only)

  std::size_t size() const { return points.size(); }
};

namespace detail {

/// Chebyshev-distributed nodes (endpoints included) on every band.
inline std::vector<double> extremal_grid(const IntervalUnion& k, int per_band) {
  std::vector<double> g;
  g.reserve(k.size() * per_band);
  for (std::size_t l = 0; l < k.size(); ++l) {
    const double mid = 0.5 * (k.left(l) + k.right(l));
    const double half = 0.5 * k.width(l);
    for (int j = 0; j < per_band; ++j) {
      g.push_back(mid - half * std::cos(kPi * j / (per_band - 1)));
    }
  }
  return g;
}

inline double log_abs_product(double x, const std::vector<double>& pts) {
  double s = 0.0;
  for (double p : pts) s += std::log(std::abs(x - p));
  return s;
}

inline double golden_max(const std::vector<double>& pts, double lo, double hi) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = log_abs_product(c, pts);
  double fd = log_abs_product(d, pts);
  for (int i = 0; i < 100 && b - a > 1e-14 * (1.0 + std::abs(a)); ++i) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = log_abs_product(d, pts);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = log_abs_product(c, pts);
    }
  }
  return 0.5 * (a + b);
}

/// Greedy maximization of prod |x - x_j| over the grid, starting from the
/// rightmost endpoint; ties go to the rightmost node. With `refine`, every
/// pick is polished by golden-section search between its grid neighbours in
/// the same band.
inline std::vector<double> leja_sequence(const IntervalUnion& k, int n, int per_band, bool refine,
                                         std::vector<std::size_t>* indices = nullptr) {
  const auto grid = extremal_grid(k, per_band);
  std::vector<double> logsum(grid.size(), 0.0);
  std::vector<double> pts;
  pts.reserve(n);
  std::size_t pick = grid.size() - 1;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t g = 0; g < grid.size(); ++g) {
        if (logsum[g] >= best) {
          best = logsum[g];
          pick = g;
        }
      }
    }
    double x = grid[pick];
    if (refine && i > 0) {
      const std::size_t band_lo = (pick / per_band) * per_band;
      const std::size_t band_hi = band_lo + per_band - 1;
      const double lo = grid[pick > band_lo ? pick - 1 : pick];
      const double hi = grid[pick < band_hi ? pick + 1 : pick];
      if (hi > lo) {
        const double y = golden_max(pts, lo, hi);
        if (log_abs_product(y, pts) > log_abs_product(x, pts)) x = y;
      }
    }
    pts.push_back(x);
    if (indices) indices->push_back(pick);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double d = std::abs(grid[g] - x);
      logsum[g] += d > 0.0 ? std::log(d) : -std::numeric_limits<double>::infinity();
    }
  }
  return pts;
}

}  // namespace detail

inline PointConfiguration leja_points(const IntervalUnion& k, int n, const QuadratureConfig& cfg = {}) {
  if (n < 1) fail(ErrorCode::OutOfRange, "need at least one point");
  PointConfiguration out;
  out.kind = PointKind::Leja;
  out.points = detail::leja_sequence(k, n, cfg.extremal_grid, true);
  return out;
}

/// Exchange iteration on the grid started from grid Leja points: every point
/// in turn moves to the grid node maximizing its product of distances to the
/// others, until a full sweep moves nothing. Single moves cannot shift a point
/// between bands once the others have settled, so converged configurations are
/// then offered band transfers (one point moved to another band and the whole
/// configuration relaxed again), kept only when the energy rises.
inline PointConfiguration fekete_points(const IntervalUnion& k, int n, const QuadratureConfig& cfg = {},
                                        int max_sweeps = 500) {
  if (n < 1 || n > 64) fail(ErrorCode::OutOfRange, "Fekete oracle supports 1 <= n <= 64");
  const int per_band = cfg.extremal_grid;
  const auto grid = detail::extremal_grid(k, per_band);
  std::vector<std::size_t> idx;
  detail::leja_sequence(k, n, per_band, false, &idx);
  // Zero distances are skipped, so logsum[g] at an occupied node excludes the
  // point sitting there and no infinities enter the running sums.
  auto log_dist = [&](std::size_t g, std::size_t h) {
    const double d = std::abs(grid[g] - grid[h]);
    return d > 0.0 ? std::log(d) : 0.0;
  };
  auto energy = [&](const std::vector<std::size_t>& v) {
    double e = 0.0;
    for (std::size_t p = 0; p < v.size(); ++p) {
      for (std::size_t q = p + 1; q < v.size(); ++q) e += log_dist(v[p], v[q]);
    }
    return e;
  };
  int sweeps = 0;
  auto relax = [&](std::vector<std::size_t>& v) {
    std::vector<double> logsum(grid.size(), 0.0);
    std::vector<int> occupied(grid.size(), 0);
    for (std::size_t i : v) {
      occupied[i] += 1;
      for (std::size_t g = 0; g < grid.size(); ++g) logsum[g] += log_dist(g, i);
    }
    bool moved = true;
    while (moved) {
      if (sweeps >= max_sweeps) fail(ErrorCode::NoConvergence, "Fekete exchange did not settle");
      moved = false;
      ++sweeps;
      for (std::size_t p = 0; p < v.size(); ++p) {
        const std::size_t cur = v[p];
        // logsum[g] - log|g - cur| is the log product of distances from node g
        // to every point except p; at g = cur it is evaluated directly.
        double current = 0.0;
        for (std::size_t q = 0; q < v.size(); ++q) {
          if (q != p) current += log_dist(cur, v[q]);
        }
        double best = current;
        std::size_t best_g = cur;
        for (std::size_t g = 0; g < grid.size(); ++g) {
          if (occupied[g] || g == cur) continue;
          const double val = logsum[g] - log_dist(g, cur);
          if (val > best + 1e-12 * (1.0 + std::abs(best))) {
            best = val;
            best_g = g;
          }
        }
        if (best_g != cur) {
          occupied[cur] -= 1;
          occupied[best_g] += 1;
          for (std::size_t g = 0; g < grid.size(); ++g) {
            logsum[g] += log_dist(g, best_g) - log_dist(g, cur);
          }
          v[p] = best_g;
          moved = true;
        }
      }
    }
  };
  relax(idx);
  double e_best = energy(idx);
  const std::size_t bands = k.size();
  for (bool improved = bands > 1; improved;) {
    improved = false;
    for (std::size_t from = 0; from < bands && !improved; ++from) {
      for (std::size_t to = 0; to < bands && !improved; ++to) {
        if (from == to) continue;
        std::vector<std::size_t> cand = idx;
        auto it = std::find_if(cand.begin(), cand.end(),
                               [&](std::size_t g) { return g / per_band == from; });
        if (it == cand.end()) continue;
        // Land at the middle node of the target band; relaxation does the rest.
        std::size_t target = to * per_band + per_band / 2;
        while (std::find(cand.begin(), cand.end(), target) != cand.end()) ++target;
        *it = target;
        relax(cand);
        const double e = energy(cand);
        if (e > e_best + 1e-12 * (1.0 + std::abs(e_best))) {
          idx = std::move(cand);
          e_best = e;
          improved = true;
        }
      }
    }
  }
  PointConfiguration out;
  out.kind = PointKind::Fekete;
  out.sweeps = sweeps;
  for (std::size_t i : idx) out.points.push_back(grid[i]);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

/// (1 / n) sum phi(x_k).
inline double zero_mean(const PointConfiguration& c, const ConvexTestFunction& phi) {
  if (c.points.empty()) fail(ErrorCode::EmptyInput, "empty configuration");
  double s = 0.0;
  for (double x : c.points) s += phi(x);
  return s / static_cast<double>(c.points.size());
}

/// ||prod (x - x_k)||_K^{1/n}. Between consecutive zeros log|P| is concave,
/// so golden-section search on every zero-free piece of every band finds the
/// exact maximum.
inline double sup_norm_root(const IntervalUnion& k, const PointConfiguration& c) {
  std::vector<double> pts = c.points;
  std::sort(pts.begin(), pts.end());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < k.size(); ++l) {
    std::vector<double> cuts{k.left(l)};
    for (double p : pts) {
      if (p > k.left(l) && p < k.right(l)) cuts.push_back(p);
    }
    cuts.push_back(k.right(l));
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      if (!(cuts[i] > cuts[i - 1])) continue;
      const double x = detail::golden_max(pts, cuts[i - 1], cuts[i]);
      best = std::max({best, detail::log_abs_product(x, pts),
                       detail::log_abs_product(cuts[i - 1], pts),
                       detail::log_abs_product(cuts[i], pts)});
    }
  }
  return std::exp(best / static_cast<double>(pts.size()));
}

/// Kolmogorov distance between the empirical measure of c and mu_K.
inline double cdf_distance(const EquilibriumSolution& sol, const PointConfiguration& c) {
  std::vector<double> pts = c.points;
  std::sort(pts.begin(), pts.end());
  const double n = static_cast<double>(pts.size());
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double f = sol.cdf(pts[i]);
    d = std::max({d, std::abs(f - i / n), std::abs(f - (i + 1) / n)});
  }
  return d;
}

struct CoefficientLimitRow {
  int n = 0;
  double ratio = 0.0;  // a_{n-1,n} / n = -(1/n) sum x_k
  double limit = 0.0;  // -int x dmu_K
};

/// Subleading coefficient of the Leja polynomials of K in [0, inf) with
/// capacity 1 against its limit -int x dmu_K, which is at most -2.
inline std::vector<CoefficientLimitRow> coefficient_limit_check(const EquilibriumSolution& sol,
                                                                const std::vector<int>& n_list,
                                                                const QuadratureConfig& cfg = {}) {
  if (sol.set().hull_left() < 0.0) fail(ErrorCode::HypothesisViolated, "K must lie in [0, inf)");
  if (std::abs(sol.capacity() - 1.0) > 1e-8) fail(ErrorCode::HypothesisViolated, "cap(K) must be 1");
  std::vector<CoefficientLimitRow> rows;
  int n_max = 0;
  for (int n : n_list) n_max = std::max(n_max, n);
  const auto leja = leja_points(sol.set(), n_max, cfg);
  for (int n : n_list) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += leja.points[i];
    rows.push_back({n, -s / n, -sol.centroid()});
  }
  return rows;
}

}  // namespace eqm
