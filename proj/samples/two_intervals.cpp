// Equilibrium measure of [-3,-1] U [1,3], its normalized image and the
// second-moment comparison with [-2, 2].
#include <cstdio>

#include "eqm/eqm.hpp"

int main() {
  using namespace eqm;
  const QuadratureConfig cfg;
  const auto k = IntervalUnion::from_endpoints({-3, -1, 1, 3});
  const auto sol = solve_equilibrium(k, cfg);
  std::printf("capacity       %.12f\n", sol.capacity());
  std::printf("critical point %.3e\n", sol.critical_points().front());
  for (double x : {-2.5, -1.5, 1.5, 2.5}) std::printf("density(%+.1f) %.10f\n", x, sol.density(x));

  const auto phi = ConvexTestFunction::power(2);
  const auto cmp = verify_thm1(k, phi, cfg);
  std::printf("int x^2 dmu_K' = %.10f, int x^2 dmu_L = %.10f, margin %.3e\n", cmp.value,
              cmp.reference, cmp.margin);
}
