// scratch probe: mode counts and uniform poling periods under the three
// chromatic-weight conventions (not installed; development aid only)
#include <cstdio>

#include "tmw/modes.hpp"

using namespace tmw;

static double design_lambda(modes::ModesDb& db, double w1, double lp, Pol pol_p, Pol pol_s, Pol pol_i,
                            int ms, int mi, double ls, double li) {
  // Delta beta = beta_p(m=1) - beta_s(ms) - beta_i(mi), each at its own wavelength
  const double bp = db.beta(w1, lp, pol_p, 1);
  const double bs = db.beta(w1, ls, pol_s, ms);
  const double bi = db.beta(w1, li, pol_i, mi);
  const double dbeta = bp - bs - bi;
  return 2.0 * pi / dbeta;  // first order
}

int main() {
  for (auto xi : {material::XiMode::none, material::XiMode::direct, material::XiMode::scaled_ref}) {
    const char* name = xi == material::XiMode::none     ? "none"
                       : xi == material::XiMode::direct ? "direct"
                                                        : "scaled_ref";
    material::Model model;
    model.mat.temperature_C = 80.0;
    model.geom = {0.1, 3.0, 4.0};
    model.xi = xi;
    modes::ModesDb db(model);

    const std::size_t n40 = db.modes(4.0, 0.812, Pol::TM).size();
    const std::size_t n22 = db.modes(2.2, 0.812, Pol::TM).size();
    std::printf("[%-10s] modes(w=4.0)=%zu modes(w=2.2)=%zu\n", name, n40, n22);

    // fig2: degenerate type-0, TM pump at 406, signal/idler 812/812, w1=4.0
    try {
      const double L2 = design_lambda(db, 4.0, 0.406, Pol::TM, Pol::TM, Pol::TM, 0, 1, 0.812, 0.812);
      std::printf("             fig2 Lambda = %.4f um (target 2.644, %+.2f%%)\n", L2,
                  100.0 * (L2 / 2.644 - 1.0));
    } catch (const std::exception& e) {
      std::printf("             fig2 failed: %s\n", e.what());
    }

    // fig4: type-0 nondegenerate, w1=4.2, 780 / 846.7
    try {
      material::Model m4 = model;
      modes::ModesDb db4(m4);
      const double d01 = 2.0 * pi / design_lambda(db4, 4.2, 0.406, Pol::TM, Pol::TM, Pol::TM, 0, 1,
                                                  0.780, 0.8467);
      const double d10 = 2.0 * pi / design_lambda(db4, 4.2, 0.406, Pol::TM, Pol::TM, Pol::TM, 1, 0,
                                                  0.780, 0.8467);
      const double L4 = 2.0 * pi / (0.5 * (d01 + d10));
      std::printf("             fig4 Lambda = %.4f um (target 2.588, %+.2f%%)\n", L4,
                  100.0 * (L4 / 2.588 - 1.0));
    } catch (const std::exception& e) {
      std::printf("             fig4 failed: %s\n", e.what());
    }

    // fig5: type-II (o,e,o), TE pump, w1=4.4, 780 / 846.7
    try {
      const double d01 = 2.0 * pi / design_lambda(db, 4.4, 0.406, Pol::TE, Pol::TE, Pol::TM, 0, 1,
                                                  0.780, 0.8467);
      const double d10 = 2.0 * pi / design_lambda(db, 4.4, 0.406, Pol::TE, Pol::TE, Pol::TM, 1, 0,
                                                  0.780, 0.8467);
      const double L5 = 2.0 * pi / (0.5 * (d01 + d10));
      std::printf("             fig5 Lambda = %.4f um (target 1.869, %+.2f%%)\n", L5,
                  100.0 * (L5 / 1.869 - 1.0));
    } catch (const std::exception& e) {
      std::printf("             fig5 failed: %s\n", e.what());
    }
  }
  return 0;
}
