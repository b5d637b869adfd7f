#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tmw/material.hpp"

using namespace tmw;
using namespace tmw::material;

TEST_CASE("extraordinary Sellmeier matches an independent evaluation") {
  // literal re-evaluation of the published series, written out term by term
  const double T = 80.0, lam = 0.812;
  const double f = (T - 24.5) * (T + 570.82);
  const double l2 = lam * lam;
  const double pole = 0.20692 - 0.89e-8 * f;
  const double n2 = 5.35583 + 4.629e-7 * f + (0.100473 + 3.862e-8 * f) / (l2 - pole * pole) +
                    (100.0 + 2.657e-5 * f) / (l2 - 11.34927 * 11.34927) - 0.015334 * l2;
  MaterialParams mat;
  mat.temperature_C = T;
  CHECK(bulk_index(mat, 0.812, Branch::extraordinary) == doctest::Approx(std::sqrt(n2)).epsilon(1e-12));
}

TEST_CASE("ordinary Sellmeier matches an independent evaluation") {
  const double T = 80.0, lam = 0.406;
  const double F = (T - 24.5) * (T + 570.5);
  const double l2 = lam * lam;
  const double pole = 0.21802 - 2.9671e-8 * F;
  const double n2 =
      4.9048 + (0.11775 + 2.2314e-8 * F) / (l2 - pole * pole) + 2.1429e-8 * F - 0.027153 * l2;
  MaterialParams mat;
  mat.temperature_C = T;
  CHECK(bulk_index(mat, 0.406, Branch::ordinary) == doctest::Approx(std::sqrt(n2)).epsilon(1e-12));
}

TEST_CASE("normal dispersion and sane index values") {
  MaterialParams mat;
  mat.temperature_C = 80.0;
  for (Branch b : {Branch::ordinary, Branch::extraordinary}) {
    double prev = 1e9;
    for (double lam = 0.40; lam <= 1.0001; lam += 0.02) {
      const double n = bulk_index(mat, lam, b);
      CHECK(n < prev);  // monotonically decreasing over [0.4, 1.0] um
      prev = n;
    }
    for (double lam = 0.35; lam <= 2.0001; lam += 0.05) {
      const double n = bulk_index(mat, lam, b);
      CHECK(n > 1.5);
      CHECK(n < 3.0);
    }
  }
}

TEST_CASE("polarization resolves to the right branch in a z-cut crystal") {
  MaterialParams mat;
  CHECK(bulk_index(mat, 0.812, Pol::TE) == bulk_index(mat, 0.812, Branch::ordinary));
  CHECK(bulk_index(mat, 0.812, Pol::TM) == bulk_index(mat, 0.812, Branch::extraordinary));
  // LiNbO3 is negative uniaxial: n_o > n_e
  CHECK(bulk_index(mat, 0.812, Pol::TE) > bulk_index(mat, 0.812, Pol::TM));
}

TEST_CASE("out-of-range wavelength raises a domain error naming the range") {
  MaterialParams mat;
  CHECK_THROWS_AS(bulk_index(mat, 0.2, Branch::ordinary), std::domain_error);
  CHECK_THROWS_AS(bulk_index(mat, 9.0, Branch::extraordinary), std::domain_error);
  try {
    bulk_index(mat, 0.2, Branch::ordinary);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("0.35") != std::string::npos);
  }
}

TEST_CASE("peak index increase, closed-form value") {
  DiffusionGeometry g{0.1, 3.0, 4.0};
  const double expected = 2.0 * 0.1 * 0.625 * std::erf(2.0 / 3.0) / (std::sqrt(M_PI) * 3.0);
  CHECK(peak_index_increase(g, Branch::extraordinary) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(peak_index_increase(g, Branch::extraordinary) == doctest::Approx(0.0154).epsilon(2e-3));
}

TEST_CASE("peak index increase limits in strip width") {
  DiffusionGeometry g{0.1, 3.0, 1e-9};
  CHECK(peak_index_increase(g, Branch::extraordinary) < 1e-9);
  g.strip_width_um = 1e6;
  const double sat = 2.0 * 0.1 * 0.625 / (std::sqrt(M_PI) * 3.0);
  CHECK(peak_index_increase(g, Branch::extraordinary) == doctest::Approx(sat).epsilon(1e-12));
}

TEST_CASE("peak index increase is monotone in width") {
  DiffusionGeometry g{0.1, 3.0, 1.0};
  double prev = 0.0;
  for (double w = 1.0; w <= 10.0; w += 0.5) {
    g.strip_width_um = w;
    const double dn = peak_index_increase(g, Branch::ordinary);
    CHECK(dn > prev);
    prev = dn;
  }
}

TEST_CASE("branch ratio is exactly rho_e / rho_o under identical xi handling") {
  DiffusionGeometry g{0.1, 3.0, 4.0};
  for (double lam = 0.4; lam <= 1.0001; lam += 0.1) {
    const double de = peak_index_increase(g, Branch::extraordinary, lam, XiMode::direct);
    const double dd = peak_index_increase(g, Branch::ordinary, lam, XiMode::direct);
    CHECK(de / dd == doctest::Approx(0.625 / 0.47).epsilon(1e-12));
  }
}

TEST_CASE("xi handling modes") {
  DiffusionGeometry g{0.1, 3.0, 4.0};
  const double base = peak_index_increase(g, Branch::extraordinary);
  const double lam = 0.812;
  CHECK(peak_index_increase(g, Branch::extraordinary, lam, XiMode::none) == base);
  CHECK(peak_index_increase(g, Branch::extraordinary, lam, XiMode::direct) ==
        doctest::Approx(base * xi_factor(lam)).epsilon(1e-12));
  CHECK(peak_index_increase(g, Branch::extraordinary, lam, XiMode::scaled_ref) ==
        doctest::Approx(base * xi_factor(lam) / xi_factor(0.633)).epsilon(1e-12));
  CHECK(peak_index_increase(g, Branch::extraordinary, 0.633, XiMode::scaled_ref) ==
        doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("index profile: normalization, symmetry, tails") {
  DiffusionGeometry g{0.1, 3.0, 4.0};
  MaterialParams mat;
  auto p = build_index_profile(g, mat, 0.812, Pol::TM);

  CHECK(lateral_profile(0.0, g.strip_width_um, g.diffusion_length_um) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x = 0.0; x < 10.0; x += 0.37)
    CHECK(lateral_profile(x, 4.0, 3.0) ==
          doctest::Approx(lateral_profile(-x, 4.0, 3.0)).epsilon(1e-14));

  // surface maximum at x = 0, z = 0; value equals n_bulk + dn_peak
  const std::size_t nz = p.z_um.size();
  std::size_t iz0 = 0;
  while (p.z_um[iz0] < 0.0) ++iz0;
  std::size_t ix0 = p.x_um.size() / 2;
  CHECK(p.x_um[ix0] == doctest::Approx(0.0).epsilon(1e-12));
  const double nmax = *std::max_element(p.n.begin(), p.n.end());
  CHECK(p.at(ix0, iz0) == doctest::Approx(nmax).epsilon(1e-15));
  CHECK(nmax == doctest::Approx(p.n_bulk + p.dn_peak).epsilon(1e-12));

  // in-crystal index never drops below bulk; far tails recover bulk
  for (std::size_t ix = 0; ix < p.x_um.size(); ++ix)
    for (std::size_t iz = iz0; iz < nz; ++iz) CHECK(p.at(ix, iz) >= p.n_bulk - 1e-15);
  CHECK(std::abs(p.at(0, iz0) - p.n_bulk) < 1e-9 * p.dn_peak + 1e-9);

  // lateral symmetry on the grid
  for (std::size_t ix = 0; ix < p.x_um.size(); ++ix)
    CHECK(p.at(ix, iz0) == doctest::Approx(p.at(p.x_um.size() - 1 - ix, iz0)).epsilon(1e-12));
}

TEST_CASE("degenerate grids are rejected") {
  DiffusionGeometry g{0.1, 3.0, 4.0};
  MaterialParams mat;
  GridSpec gs;
  gs.samples_per_D = 4.0;
  CHECK_THROWS_AS(build_index_profile(g, mat, 0.812, Pol::TM, XiMode::direct, gs), ConfigError);
  DiffusionGeometry bad{-1.0, 3.0, 4.0};
  CHECK_THROWS_AS(peak_index_increase(bad, Branch::ordinary), ConfigError);
}
