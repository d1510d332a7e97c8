// Moments of the ellipse family against the segment, plus the w-profile peak.
#include <cstdio>

#include "eqm/eqm.hpp"

int main() {
  using namespace eqm;
  QuadratureConfig cfg;
  cfg.w_grid = 64;
  const auto segment = solve_equilibrium(IntervalUnion::segment(), cfg);
  const Potential l(segment);
  for (const auto& m : ellipse_family()) {
    const auto c = verify_thm2(m, segment, ConvexTestFunction::power(2), cfg);
    const Potential p(m);
    const auto wp = w_profile(p, l, default_w_grid(p.enclosing_radius(), cfg.w_grid), cfg);
    std::printf("d=%.1f  int x^2 = %.10f  margin %+.3e  max w %+.2e\n", m.parameter(), c.value,
                c.margin, wp.max());
  }
}
