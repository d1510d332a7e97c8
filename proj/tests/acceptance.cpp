// Acceptance run: one PASS/FAIL line per criterion at its pinned tolerance.
// Exit status is non-zero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "eqm/eqm.hpp"

using namespace eqm;

namespace {

constexpr double kPiD = std::numbers::pi;
const CorpusSpec kCorpus{7, 200};

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<IntervalUnion>& corpus() {
  static const auto c = make_corpus(kCorpus);
  return c;
}

const QuadratureConfig& config() {
  static const QuadratureConfig cfg;
  return cfg;
}

const EquilibriumSolution& segment() {
  static const auto s = solve_equilibrium(IntervalUnion::segment(), config());
  return s;
}

// Normalized corpus, solved once and shared by criteria 5, 7 and 8.
const std::vector<EquilibriumSolution>& normalized_corpus() {
  static const auto v = [] {
    const auto& c = corpus();
    auto sols = parallel_map(c.size(), [&](std::size_t i) -> std::optional<EquilibriumSolution> {
      return solve_normalized(c[i], config()).first;
    });
    std::vector<EquilibriumSolution> out;
    for (auto& s : sols) out.push_back(std::move(*s));
    return out;
  }();
  return v;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome closed_forms() {
  const auto& cfg = config();
  const auto& l = segment();
  const auto plus = solve_equilibrium(IntervalUnion::from_endpoints({0.0, 4.0}), cfg);
  double worst = 0.0;
  auto check = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
  check(moment_real(l, ConvexTestFunction::abs_power(1.0), cfg), 4.0 / kPiD);
  check(moment_real(l, ConvexTestFunction::power(2), cfg), 2.0);
  const double lp[] = {2.0, 6.0, 20.0};
  for (int m = 1; m <= 3; ++m) {
    // x^m is convex on [0, 4] only for even m, so integrate it directly.
    check(plus.integrate([m](double x) { return std::pow(x, m); }), lp[m - 1]);
    check(ell_plus(m), lp[m - 1]);
  }
  check(ell(1), 4.0 / kPiD);
  check(ell(2), 2.0);
  return {worst <= 1e-10, fmt("max error %.2e (tol 1e-10)", worst)};
}

Outcome equilibrium_solver() {
  const auto& cfg = config();
  const auto& l = segment();
  double err_t = 0.0;
  const auto mono = l.T().monomial();
  err_t = std::abs(mono.at(0) + 1.0);
  for (std::size_t i = 1; i < mono.size(); ++i) err_t = std::max(err_t, std::abs(mono[i]));
  double err_d = 0.0;
  for (int j = 1; j < 200; ++j) {
    const double x = -2.0 + 4.0 * j / 200.0;
    err_d = std::max(err_d, std::abs(l.density(x) - 1.0 / (kPiD * std::sqrt(4.0 - x * x))));
  }
  const auto two = solve_equilibrium(IntervalUnion::from_endpoints({-3, -1, 1, 3}), cfg);
  const double z1 = std::abs(two.critical_points().at(0));

  // Mass, positivity and Frostman constancy over the corpus.
  const auto& c = corpus();
  struct Row {
    double mass = 0, frost = 0;
    bool positive = true;
  };
  const auto rows = parallel_map(c.size(), [&](std::size_t i) {
    const auto s = solve_equilibrium(c[i], cfg);
    Row r;
    r.mass = std::abs(s.total_mass() - 1.0);
    r.frost = s.frostman_deviation();
    for (std::size_t b = 0; b < c[i].size(); ++b) {
      for (int j = 1; j < 50; ++j) {
        const double x = c[i].left(b) + c[i].width(b) * j / 50.0;
        if (!(s.density(x) > 0.0)) r.positive = false;
      }
    }
    return r;
  });
  double mass = 0.0, frost = 0.0;
  bool positive = true;
  for (const auto& r : rows) {
    mass = std::max(mass, r.mass);
    frost = std::max(frost, r.frost);
    positive = positive && r.positive;
  }
  const bool pass = err_t <= 1e-10 && err_d <= 1e-10 && z1 <= 1e-10 && mass <= 1e-7 &&
                    frost <= 1e-7 && positive;
  return {pass, fmt("T %.1e, arcsine %.1e, z1 %.1e; ", err_t, err_d, z1) +
                    fmt("corpus mass %.1e, Frostman %.1e, positive ", mass, frost) +
                    (positive ? "yes" : "no")};
}

Outcome capacity_identities() {
  const auto& cfg = config();
  double worst = 0.0;
  for (auto [a, b] : {std::pair{-1.0, 3.0}, {0.0, 4.0}, {2.0, 2.5}, {-7.0, 1.0}}) {
    const auto s = solve_equilibrium(IntervalUnion::from_endpoints({a, b}), cfg);
    worst = std::max(worst, std::abs(s.capacity() - (b - a) / 4.0));
  }
  for (auto [a, b] : {std::pair{1.0, 3.0}, {0.5, 2.0}, {0.1, 1.0}, {2.0, 2.2}}) {
    const auto s = solve_equilibrium(IntervalUnion::from_endpoints({-b, -a, a, b}), cfg);
    worst = std::max(worst, std::abs(s.capacity() - std::sqrt(b * b - a * a) / 2.0));
  }
  return {worst <= 1e-8, fmt("max error %.2e (tol 1e-8)", worst)};
}

Outcome cauchy_identity() {
  const auto& cfg = config();
  const auto& c = corpus();
  const auto worst = parallel_map(c.size(), [&](std::size_t i) {
    const auto s = solve_equilibrium(c[i], cfg);
    const IntervalUnion& k = c[i];
    double w = 0.0;
    // 50 band points spread over the bands by width.
    double total = 0.0;
    for (std::size_t b = 0; b < k.size(); ++b) total += k.width(b);
    int placed = 0;
    for (std::size_t b = 0; b < k.size(); ++b) {
      const int n = b + 1 == k.size() ? 50 - placed
                                       : std::max(1, static_cast<int>(std::lround(50 * k.width(b) / total)));
      placed += n;
      for (int j = 0; j < n; ++j) {
        const double x = k.left(b) + k.width(b) * (j + 0.5) / n;
        w = std::max(w, std::abs(cauchy_pv_check(s, Complex(x, 0.0))));
      }
    }
    // 50 exterior points: gaps, outside the hull and off the axis.
    const double lo = k.hull_left() - 1.0;
    const double hi = k.hull_right() + 1.0;
    int count = 0;
    for (int j = 0; count < 50; ++j) {
      Complex z;
      if (j % 2 == 0) {
        z = Complex(lo + (hi - lo) * (j + 0.5) / 100.0, 0.3 + 0.05 * (j % 7));
      } else {
        const double x = lo + (hi - lo) * (j + 0.5) / 100.0;
        if (k.contains(x)) continue;
        z = Complex(x, 0.0);
      }
      w = std::max(w, std::abs(cauchy_pv_check(s, z)));
      ++count;
    }
    return w;
  });
  double m = 0.0;
  for (double w : worst) m = std::max(m, w);
  return {m <= 1e-7, fmt("max residual %.2e over %.0f sets (tol 1e-7)", m, double(c.size()))};
}

Outcome theorem1() {
  const auto& cfg = config();
  const auto& sols = normalized_corpus();
  const auto phis = standard_test_functions(cfg.smoothing_width);
  const auto mins = parallel_map(sols.size(), [&](std::size_t i) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& phi : phis) m = std::min(m, verify_thm1(sols[i], segment(), phi, cfg).margin);
    return m;
  });
  double worst = std::numeric_limits<double>::infinity();
  for (double m : mins) worst = std::min(worst, m);
  double spot = 0.0;
  for (double a : {0.25, 0.5, 1.0, 1.5}) {
    const double b = std::sqrt(a * a + 4.0);
    const auto s = solve_equilibrium(IntervalUnion::from_endpoints({-b, -a, a, b}), cfg);
    const double margin = verify_thm1(s, segment(), ConvexTestFunction::power(2), cfg).margin;
    spot = std::max(spot, std::abs(margin - a * a));
  }
  return {worst >= -1e-8 && spot <= 1e-7,
          fmt("min margin %.2e (tol -1e-8); spot check error %.2e (tol 1e-7)", worst, spot)};
}

Outcome theorem2() {
  const auto& cfg = config();
  auto family = ellipse_family();
  for (auto& m : rotated_segment_family()) family.push_back(m);
  const auto phis = standard_test_functions(cfg.smoothing_width);
  const auto maxes = parallel_map(family.size(), [&](std::size_t i) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& phi : phis) m = std::max(m, verify_thm2(family[i], segment(), phi, cfg).margin);
    return m;
  });
  double worst = -std::numeric_limits<double>::infinity();
  for (double m : maxes) worst = std::max(worst, m);
  double spot = 0.0;
  for (const auto& m : ellipse_family()) {
    const double d = m.parameter();
    const double margin = verify_thm2(m, segment(), ConvexTestFunction::power(2), cfg).margin;
    spot = std::max(spot, std::abs(margin - ((1.0 + d) * (1.0 + d) / 2.0 - 2.0)));
  }
  return {worst <= 1e-8 && spot <= 1e-9,
          fmt("max margin %.2e (tol 1e-8); spot check error %.2e (tol 1e-9)", worst, spot)};
}

Outcome w_function() {
  const auto& cfg = config();
  const auto& sols = normalized_corpus();
  const Potential l(segment());
  const auto phis = standard_test_functions(cfg.smoothing_width);
  struct Row {
    double max_w = -1e300, edge = 0.0, formula = 0.0;
  };
  std::vector<Row> rows(sols.size());
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const Potential k(sols[i]);
    const double r = std::max(l.enclosing_radius(), k.enclosing_radius());
    auto grid = default_w_grid(r, cfg.w_grid);
    grid.push_back(-r);
    grid.push_back(r);
    const WProfile wp = w_profile(l, k, grid, cfg);
    for (double v : wp.w) rows[i].max_w = std::max(rows[i].max_w, v);
    rows[i].edge = std::max(std::abs(wp.w[wp.w.size() - 2]), std::abs(wp.w.back()));
    for (const auto& fc : formula_checks(l, k, phis, cfg)) {
      rows[i].formula = std::max(rows[i].formula, std::abs(fc.difference()));
    }
  }
  double max_w = -1e300, edge = 0.0, formula = 0.0;
  for (const auto& r : rows) {
    max_w = std::max(max_w, r.max_w);
    edge = std::max(edge, r.edge);
    formula = std::max(formula, r.formula);
  }
  return {max_w <= 1e-6 && edge <= 1e-6 && formula <= 1e-5,
          fmt("max w %.2e, |w(+-R)| %.2e (tol 1e-6); formula gap %.2e (tol 1e-5)", max_w, edge, formula)};
}

Outcome pointbound() {
  const auto& cfg = config();
  const auto& sols = normalized_corpus();
  const double x0s[] = {2.5, 3.0, 4.0, 6.0};
  struct Row {
    int checked = 0;
    double worst_strict = 1e300;  // min margin over K != L
    double worst_equal = 0.0;     // max |margin| over K = L
  };
  const auto rows = parallel_map(sols.size(), [&](std::size_t i) {
    Row r;
    const bool is_l = sols[i].set().size() == 1;
    for (double x0 : x0s) {
      if (!(sols[i].set().hull_right() < x0)) continue;
      const auto pb = verify_pointbound(sols[i], segment(), x0, 0.0, 4, cfg);
      ++r.checked;
      if (is_l) {
        r.worst_equal = std::max(r.worst_equal, pb.max_abs_margin());
      } else {
        r.worst_strict = std::min(r.worst_strict, pb.min_margin());
      }
    }
    return r;
  });
  int checked = 0;
  double strict = 1e300, equal = 0.0;
  for (const auto& r : rows) {
    checked += r.checked;
    strict = std::min(strict, r.worst_strict);
    equal = std::max(equal, r.worst_equal);
  }
  return {checked > 0 && strict > 1e-8 && equal <= 1e-8,
          fmt("%.0f (set, x0) cases; min margin for K != L %.2e (> 1e-8); |margin| for K = L %.2e",
              double(checked), strict, equal)};
}

Outcome gap_average() {
  const auto& cfg = config();
  const auto& c = corpus();
  const auto margins = parallel_map(c.size(), [&](std::size_t i) {
    return gap_midpoint_bound(solve_normalized(c[i], cfg).first).margin();
  });
  double worst = 1e300;
  for (double m : margins) worst = std::min(worst, m);
  double eq = 0.0;
  for (double cc : {-2.0, 0.0, 1.0}) {
    const auto s = solve_equilibrium(IntervalUnion::from_endpoints({cc, cc + 4.0}), cfg);
    eq = std::max(eq, std::abs(gap_midpoint_bound(s).margin()));
  }
  return {worst >= -1e-8 && eq <= 1e-9,
          fmt("min margin %.2e (tol -1e-8); [c, c+4] equality %.2e (tol 1e-9)", worst, eq)};
}

Outcome section_six() {
  const auto& cfg = config();
  std::vector<Potential> ps{Potential(segment()), Potential(joukowski_ellipse(0.5)),
                            Potential(rotated_segment(kPiD / 5)), Potential(shifted_ellipse(0.3))};
  for (std::size_t i = 0; i < 3; ++i) ps.emplace_back(normalized_corpus()[i * 17]);
  double err_i = 0.0;
  for (const auto& p : ps) {
    for (double r : {4.0, 5.0, 8.0}) {
      if (r < p.enclosing_radius()) continue;
      err_i = std::max(err_i, std::abs(circle_mean_I(p, r, cfg) - std::log(r)));
    }
  }
  double err_rep = 0.0;
  const ConvexTestFunction phis[] = {ConvexTestFunction::exponential(1.0),
                                     ConvexTestFunction::squared_hinge(0.0),
                                     ConvexTestFunction::smoothed_hinge(0.2, cfg.smoothing_width)};
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto& phi : phis) {
      const auto rc = logmoment_representation_check(ps[i], phi, std::max(4.0, ps[i].enclosing_radius()), cfg);
      err_rep = std::max(err_rep, std::abs(rc.difference()));
    }
  }
  double err_area = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Sigma0Map f = random_sigma0(11, i, 1 + static_cast<int>(i % 6));
    err_area = std::max(err_area, std::abs(area_theorem_mean_sq(f) - mean_square_quadrature(f)));
  }
  const Sigma0Map f0{{Complex(1.0, 0.0)}};
  const double f0_area = std::abs(area_theorem_mean_sq(f0) - 2.0) +
                         std::abs(mean_square_quadrature(f0) - 2.0);
  const double f0_pom = std::abs(pommerenke_mean(f0, cfg) - 4.0 / kPiD);
  const bool pass = err_i <= 1e-8 && err_rep <= 1e-5 && err_area <= 1e-12 && f0_area <= 1e-12 &&
                    f0_pom <= 1e-10;
  return {pass, fmt("I(r) - log r %.1e; representation %.1e; area mean %.1e; ", err_i, err_rep, err_area) +
                    fmt("F0 area %.1e, F0 mean %.1e", f0_area, f0_pom)};
}

Outcome oracles() {
  const auto& cfg = config();
  // Asserted on the segment, [0, 4] and [-3,-1] U [1,3]. Corpus sets are
  // reported only: at n = 16 a band of mass 0.29 cannot be matched by whole
  // points, and the Kolmogorov distance of true Fekete sets exceeds 0.08.
  std::vector<EquilibriumSolution> sets{segment(),
                                       solve_equilibrium(IntervalUnion::from_endpoints({0, 4}), cfg),
                                       solve_equilibrium(IntervalUnion::from_endpoints({-3, -1, 1, 3}), cfg)};
  std::vector<EquilibriumSolution> extra;
  for (const auto& s : normalized_corpus()) {
    if (s.set().size() >= 2 && extra.size() < 6) extra.push_back(s);
  }
  double cdf = 0.0, counts = 0.0, leja = 0.0, zeros = 0.0, extra_cdf = 0.0, extra_leja = 0.0;
  auto fekete_sweep = [&](const EquilibriumSolution& s, double& count_err) {
    double d = 0.0;
    for (int n = 16; n <= 64; n += 16) {
      const auto f = fekete_points(s.set(), n, cfg);
      d = std::max(d, cdf_distance(s, f));
      for (std::size_t b = 0; b < s.set().size(); ++b) {
        int in = 0;
        for (double x : f.points) in += x >= s.set().left(b) && x <= s.set().right(b);
        count_err = std::max(count_err, std::abs(in - n * s.band_mass(b)));
      }
    }
    return d;
  };
  for (const auto& s : sets) cdf = std::max(cdf, fekete_sweep(s, counts));
  double extra_counts = 0.0;
  for (const auto& s : extra) extra_cdf = std::max(extra_cdf, fekete_sweep(s, extra_counts));
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& s = sets[i];
    leja = std::max(leja, std::abs(sup_norm_root(s.set(), leja_points(s.set(), 64, cfg)) - s.capacity()));
    const auto l256 = leja_points(s.set(), 256, cfg);
    for (const auto& phi : {ConvexTestFunction::power(2), ConvexTestFunction::abs_power(1.0),
                            ConvexTestFunction::exponential(1.0)}) {
      zeros = std::max(zeros, std::abs(zero_mean(l256, phi) - moment_real(s, phi, cfg)));
    }
    // [0, 4] with phi = x.
    if (i == 1) zeros = std::max(zeros, std::abs(zero_mean(l256, ConvexTestFunction::power(1)) - 2.0));
  }
  for (std::size_t i = 2; i < sets.size(); ++i) {
    extra_leja = std::max(extra_leja, std::abs(sup_norm_root(sets[i].set(), leja_points(sets[i].set(), 64, cfg)) -
                                               sets[i].capacity()));
  }
  const bool pass = cdf <= 0.08 && counts <= 1.0 && leja <= 5e-2 && zeros <= 5e-2;
  return {pass, fmt("Fekete CDF %.3f (tol 0.08), band counts %.2f/n (tol 1/n); ", cdf, counts) +
                    fmt("Leja norm %.3f (tol 5e-2); zero means %.3f (tol 5e-2); ", leja, zeros) +
                    fmt("corpus, not asserted: CDF %.3f, counts %.2f/n, ", extra_cdf, extra_counts) +
                    fmt("two-interval Leja %.3f", extra_leja)};
}

Outcome conjecture_tables() {
  const auto& cfg = config();
  auto family = ellipse_family();
  for (auto& m : rotated_segment_family()) family.push_back(m);
  const auto table = conjecture_scan(family, {0.25, 0.5, 1.0, 1.5, 2.0, 3.0}, 4.0,
                                     standard_test_functions(cfg.smoothing_width), cfg);
  bool ok = !table.j_rows.empty() && !table.log_rows.empty() && table.mk_rows.size() == family.size();
  int jensen_fail = 0, bound_fail = 0, ratio_fail = 0;
  for (const auto& r : table.jensen_rows) jensen_fail += !r.holds;
  for (const auto& r : table.mk_rows) {
    bound_fail += !r.bound_holds;
    ratio_fail += !r.within_1022;
  }
  // Single intervals: M_K = M_L exactly.
  for (double c : {-2.0, 0.0, 1.0}) {
    const auto s = solve_equilibrium(IntervalUnion::from_endpoints({c, c + 4.0}), cfg);
    const auto mk = factor_constant_MK(Potential(s), cfg);
    const auto ml = factor_constant_MK(Potential(segment()), cfg);
    ratio_fail += !(mk.m < 1.022 * ml.m);
  }
  ok = ok && jensen_fail == 0 && bound_fail == 0 && ratio_fail == 0;
  return {ok, fmt("%.0f radial rows, %.0f log-moment rows, ", double(table.j_rows.size()),
                  double(table.log_rows.size())) +
                  fmt("violations: Jensen %.0f, log bound %.0f, 1.022 ratio %.0f", jensen_fail,
                      bound_fail, ratio_fail)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"closed-form moments", closed_forms},
      {"equilibrium solver", equilibrium_solver},
      {"capacity identities", capacity_identities},
      {"Cauchy principal value identity", cauchy_identity},
      {"interval unions against L", theorem1},
      {"continua against L", theorem2},
      {"w-function sign and formula", w_function},
      {"Green derivative sign pattern", pointbound},
      {"gap-midpoint bound", gap_average},
      {"radial means and area theorem", section_six},
      {"extremal point oracles", oracles},
      {"conjecture tables and proven bounds", conjecture_tables},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %-36s %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
