#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "eqm/config.hpp"
#include "eqm/continua.hpp"
#include "eqm/equilibrium.hpp"
#include "eqm/greens.hpp"
#include "eqm/moments.hpp"
#include "eqm/parallel.hpp"
#include "eqm/potential.hpp"
#include "eqm/verify.hpp"

namespace eqm {

/// int phi(log|z|) dmu - int phi(log|z|) dmu_L for a continuum symmetric under
/// z -> -z; at most 0 for convex phi.
inline double symmetric_logmoment_check(const ParametricMeasure& m, const ConvexTestFunction& phi,
                                        const QuadratureConfig& cfg = {}) {
  if (!m.symmetric()) fail(ErrorCode::NotSymmetric, m.tag() + " is not symmetric about 0");
  return moment_log(m, phi, cfg) - moment_log(rotated_segment(0.0), phi, cfg);
}

/// int phi(log|z|) dmu - int phi(log|z|) dmu_[0,4] for a continuum of capacity 1
/// in the closed right half-plane containing 0; at most 0 for convex phi.
inline double zero_four_logmoment_check(const ParametricMeasure& m, const ConvexTestFunction& phi,
                                        const QuadratureConfig& cfg = {}) {
  if (!m.contains(0.0)) fail(ErrorCode::HypothesisViolated, m.tag() + " does not contain 0");
  for (int j = 0; j < 4096; ++j) {
    if (m.boundary(-kPi + 2.0 * kPi * j / 4096).real() < -1e-12) {
      fail(ErrorCode::HypothesisViolated, m.tag() + " leaves the right half-plane");
    }
  }
  return moment_log(m, phi, cfg) - moment_log(shifted_ellipse(1.0), phi, cfg);
}

struct JRow {
  std::string tag;
  double parameter = 0.0;
  double r = 0.0;
  double j_k = 0.0;
  double j_l = 0.0;
  double margin = 0.0;  // j_k - j_l; the conjecture says <= 0
};

struct LogMomentRow {
  std::string tag;
  double parameter = 0.0;
  std::string phi;
  double value = 0.0;
  double reference = 0.0;
  double margin = 0.0;  // value - reference; the conjecture says <= 0
  bool univalence_unverified = false;
};

struct MKRow {
  std::string tag;
  double parameter = 0.0;
  double m_k = 0.0;
  double m_l = 0.0;
  double ratio = 0.0;
  double log_m = 0.0;
  double log_bound = 0.0;
  bool bound_holds = false;    // log M_K <= int log(2 + |z|) dmu
  bool within_1022 = false;    // M_K < 1.022 M_L
};

struct JensenRow {
  std::string tag;
  double parameter = 0.0;
  std::string phi;
  double moment = 0.0;
  double floor = 0.0;  // phi(0)
  bool holds = false;
};

struct ConjectureTable {
  std::vector<JRow> j_rows;
  std::vector<LogMomentRow> log_rows;
  std::vector<MKRow> mk_rows;
  std::vector<JensenRow> jensen_rows;
};

inline void require_conjecture_hypotheses(const ParametricMeasure& m) {
  if (std::abs(m.centroid()) > 1e-12 || !m.contains(0.0)) {
    std::ostringstream os;
    os << m.tag() << ":" << m.parameter() << " needs centroid 0 and 0 in the set";
    fail(ErrorCode::HypothesisViolated, os.str());
  }
}

/// Margins of J(r, K) <= J(r, L) and of int phi(log|z|) dmu_K <=
/// int phi(log|z|) dmu_L over a family, plus M_K against M_L and the Jensen
/// floor. Signs of the conjectures are reported, never asserted.
inline ConjectureTable conjecture_scan(const std::vector<ParametricMeasure>& family,
                                       const std::vector<double>& r_grid, double big_r,
                                       const std::vector<ConvexTestFunction>& phis,
                                       const QuadratureConfig& cfg = {}) {
  if (big_r < 2.0) fail(ErrorCode::OutOfRange, "conjecture scan needs R >= 2");
  for (const auto& m : family) require_conjecture_hypotheses(m);
  const Potential l(solve_equilibrium(IntervalUnion::segment(), cfg));
  const auto j_l = radial_mean_J(l, r_grid, big_r, cfg);
  const FactorConstant mk_l = factor_constant_MK(l, cfg);
  std::vector<double> log_l;
  for (const auto& phi : phis) log_l.push_back(moment_log(l, phi, cfg));

  struct Member {
    std::vector<JRow> j;
    std::vector<LogMomentRow> log;
    MKRow mk;
    std::vector<JensenRow> jensen;
  };
  const auto members = parallel_map(family.size(), [&](std::size_t i) {
    const ParametricMeasure& m = family[i];
    const Potential p(m);
    Member out;
    const auto j_k = radial_mean_J(p, r_grid, big_r, cfg);
    for (std::size_t q = 0; q < r_grid.size(); ++q) {
      out.j.push_back({m.tag(), m.parameter(), r_grid[q], j_k[q], j_l[q], j_k[q] - j_l[q]});
    }
    for (std::size_t q = 0; q < phis.size(); ++q) {
      const double v = moment_log(m, phis[q], cfg);
      out.log.push_back({m.tag(), m.parameter(), phis[q].name(), v, log_l[q], v - log_l[q],
                         m.univalence_unverified()});
      const double jm = moment_real(m, phis[q], cfg);
      const double floor = phis[q](0.0);
      out.jensen.push_back({m.tag(), m.parameter(), phis[q].name(), jm, floor,
                            jm >= floor - 1e-10});
    }
    const FactorConstant mk = factor_constant_MK(p, cfg);
    out.mk = {m.tag(),  m.parameter(), mk.m,
              mk_l.m,   mk.m / mk_l.m, mk.log_m,
              mk.log_bound, mk.log_m <= mk.log_bound + 1e-9, mk.m < 1.022 * mk_l.m};
    return out;
  });
  ConjectureTable table;
  for (const auto& m : members) {
    table.j_rows.insert(table.j_rows.end(), m.j.begin(), m.j.end());
    table.log_rows.insert(table.log_rows.end(), m.log.begin(), m.log.end());
    table.mk_rows.push_back(m.mk);
    table.jensen_rows.insert(table.jensen_rows.end(), m.jensen.begin(), m.jensen.end());
  }
  return table;
}

}  // namespace eqm
