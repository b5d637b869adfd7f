// scratch probe: lateral potential and raw roots at the pump wavelength
#include <cstdio>

#include "tmw/modes.hpp"

using namespace tmw;

int main() {
  material::Model model;
  model.mat.temperature_C = 80.0;
  model.geom = {0.1, 3.0, 4.0};
  model.xi = material::XiMode::scaled_ref;

  const double lambda = 0.406, w = 4.0, D = 3.0;
  modes::DepthMap dm(model, lambda, Pol::TM, {});
  const double dn_peak =
      material::peak_index_increase(model.geom, Branch::extraordinary, lambda, model.xi);
  std::printf("n_bulk=%.8f dn_peak=%.6f table_max=%.6f\n", dm.n_bulk(), dn_peak,
              dm.dn_table_max());

  // lateral potential: look for non-monotonic wiggles in the tail
  double prev = 1e9;
  int wiggles = 0;
  for (double x = 0.0; x <= 13.0; x += 0.075) {
    const double nd = dm.n_d(dn_peak * material::lateral_profile(x, w, D));
    if (nd > prev + 1e-12) {
      ++wiggles;
      if (wiggles < 8)
        std::printf("  wiggle at x=%.3f: nd=%.10f prev=%.10f (+%.3e)\n", x, nd, prev, nd - prev);
    }
    prev = nd;
  }
  std::printf("wiggles=%d\n", wiggles);

  // raw slab roots and node counts
  modes::SlabProblem lat;
  lat.k0 = 2.0 * pi / lambda;
  const double h = D / 40.0;
  const double x_half = 0.5 * w + 5.0 * D;
  const int nhalf = int(std::ceil(x_half / h));
  for (int i = -nhalf; i <= nhalf; ++i) {
    const double x = i * h;
    lat.xi_um.push_back(x);
    const double nd = dm.n_d(dn_peak * material::lateral_profile(x, w, D));
    lat.n2.push_back(nd * nd);
  }
  lat.ext_left_um = lat.ext_right_um = 80.0;
  auto roots = modes::solve_slab(lat, -1, {});
  for (std::size_t i = 0; i < roots.size(); ++i)
    std::printf("root %zu: n_eff=%.10f (dn=%.3e) nodes=%d\n", i, roots[i].n_eff,
                roots[i].n_eff - dm.n_bulk(), roots[i].nodes);
  return 0;
}
