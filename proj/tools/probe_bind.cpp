// scratch probe: binding of marginal lateral modes (development aid only)
#include <cstdio>

#include "tmw/modes.hpp"

using namespace tmw;

static void show(material::XiMode xi, double w, double lambda, Pol pol) {
  material::Model model;
  model.mat.temperature_C = 80.0;
  model.geom = {0.1, 3.0, 4.0};
  model.xi = xi;
  const char* name = xi == material::XiMode::none     ? "none"
                     : xi == material::XiMode::direct ? "direct"
                                                      : "scaled_ref";
  modes::SolverOptions opt;
  opt.max_lateral_modes = 12;
  try {
    auto ms = modes::solve_modes(model, w, lambda, pol, opt);
    const double nb = material::bulk_index(model.mat, lambda, pol);
    std::printf("[%-10s] w=%.2f lam=%.4f %s: %zu modes;", name, w, lambda, to_string(pol),
                ms.size());
    const double k0 = 2.0 * pi / lambda;
    for (const auto& m : ms) {
      const double g = k0 * std::sqrt(std::max((m.n_eff - nb) * (m.n_eff + nb), 1e-30));
      std::printf(" m%d dn=%.3e Ldec=%.1fum", m.m, m.n_eff - nb, 1.0 / g);
    }
    std::printf("\n");
  } catch (const std::exception& e) {
    std::printf("[%-10s] w=%.2f lam=%.4f %s: ERROR %s\n", name, w, lambda, to_string(pol),
                e.what());
  }
}

int main() {
  for (auto xi : {material::XiMode::none, material::XiMode::scaled_ref, material::XiMode::direct}) {
    show(xi, 2.2, 0.812, Pol::TM);
    show(xi, 4.0, 0.812, Pol::TM);
    show(xi, 2.4, 0.780, Pol::TM);   // fig4 SMW at the upper preselected frequency
    show(xi, 4.0, 0.406, Pol::TM);   // pump guide (ladder-bug case)
  }
  return 0;
}
