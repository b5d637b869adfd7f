// Independent reference computations used only by the test suites. Nothing
// here may call into the production solvers it is checking.
#ifndef TMW_TESTS_ORACLES_HPP
#define TMW_TESTS_ORACLES_HPP

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace oracles {

// Guided n_eff of a symmetric step-index slab (scalar model), found by
// brute-force bisection of the textbook dispersion relations
//   even:  kappa tan(kappa a) = gamma
//   odd :  -kappa cot(kappa a) = gamma
// with a the half-width, kappa = k0 sqrt(nc^2-ne^2), gamma = k0 sqrt(ne^2-ns^2).
inline std::vector<double> symmetric_slab_neff(double n_core, double n_clad, double full_width,
                                               double lambda) {
  const double k0 = 2.0 * M_PI / lambda;
  const double a = 0.5 * full_width;
  auto disp = [&](double ne, bool even) {
    const double kap = k0 * std::sqrt(std::max(n_core * n_core - ne * ne, 0.0));
    const double gam = k0 * std::sqrt(std::max(ne * ne - n_clad * n_clad, 0.0));
    return even ? kap * std::sin(kap * a) - gam * std::cos(kap * a)
                : -kap * std::cos(kap * a) - gam * std::sin(kap * a);
  };
  std::vector<double> roots;
  for (int parity = 0; parity < 2; ++parity) {
    const bool even = parity == 0;
    const int N = 20000;
    double prev_ne = n_clad + 1e-12;
    double prev_f = disp(prev_ne, even);
    for (int i = 1; i <= N; ++i) {
      const double ne = n_clad + (n_core - n_clad - 2e-12) * double(i) / N + 1e-12;
      const double f = disp(ne, even);
      // skip tan/cot pole jumps: bracket only when the function is moderate
      if ((f < 0) != (prev_f < 0) && std::abs(f) + std::abs(prev_f) < 1e3 * k0 * k0) {
        double lo = prev_ne, hi = ne, flo = prev_f;
        for (int it = 0; it < 100; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = disp(mid, even);
          if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
      prev_ne = ne;
      prev_f = f;
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

// Finite-difference eigensolve of E'' + k0^2 n^2(x) E = beta^2 E on a uniform
// grid with Dirichlet ends (LAPACK tridiagonal solver). Returns n_eff of all
// guided modes, descending.
inline std::vector<double> fd_slab_neff(const std::vector<double>& x,
                                        const std::vector<double>& n, double lambda,
                                        double n_background) {
  const double k0 = 2.0 * M_PI / lambda;
  const int N = int(x.size());
  const double h = x[1] - x[0];
  std::vector<double> diag(N), off(N - 1, 1.0 / (h * h));
  for (int i = 0; i < N; ++i) diag[i] = -2.0 / (h * h) + k0 * k0 * n[i] * n[i];
  const int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'N', N, diag.data(), off.data(), nullptr, N);
  if (info != 0) throw std::runtime_error("fd_slab_neff: dstev failed");
  std::vector<double> neff;
  for (int i = N - 1; i >= 0; --i) {
    const double b2 = diag[i];
    if (b2 <= 0) break;
    const double ne = std::sqrt(b2) / k0;
    if (ne <= n_background) break;
    neff.push_back(ne);
  }
  return neff;
}

// Analytic two-guide coupled-mode transfer: power in guide B at length L for
// input (1, 0), coupling kappa and mismatch Delta (both per unit length).
inline double cmt_transfer(double kappa, double Delta, double L) {
  const double q = std::sqrt(kappa * kappa + 0.25 * Delta * Delta);
  const double F = kappa * kappa / (q * q);
  const double s = std::sin(q * L);
  return F * s * s;
}

// Reflectivity of a uniform Bragg grating obtained by direct RK4 integration
// of the counter-propagating coupled equations, shooting from the
// transmission end. delta = beta - pi/Lambda_B, kappa the grating coupling.
inline std::complex<double> grating_reflection_rk4(double kappa, double delta, double L,
                                                   int steps = 20000) {
  using cd = std::complex<double>;
  const cd I(0.0, 1.0);
  // d/dz [u; v] = [-i delta, -i kappa; +i kappa, +i delta] [u; v]
  auto rhs = [&](const cd& u, const cd& v, cd& du, cd& dv) {
    du = -I * delta * u - I * kappa * v;
    dv = I * kappa * u + I * delta * v;
  };
  cd u = 1.0, v = 0.0;  // at z = L: unit transmitted, no incoming backward wave
  const double h = -L / steps;  // integrate backwards to z = 0
  for (int i = 0; i < steps; ++i) {
    cd k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
    rhs(u, v, k1u, k1v);
    rhs(u + 0.5 * h * k1u, v + 0.5 * h * k1v, k2u, k2v);
    rhs(u + 0.5 * h * k2u, v + 0.5 * h * k2v, k3u, k3v);
    rhs(u + h * k3u, v + h * k3v, k4u, k4v);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return v / u;
}

}  // namespace oracles

#endif
