#include "tmw/material.hpp"

#include <cmath>
#include <sstream>

namespace tmw::material {

void validate(const DiffusionGeometry& g) {
  if (g.film_thickness_um <= 0 || g.diffusion_length_um <= 0 || g.strip_width_um <= 0)
    throw ConfigError("diffusion geometry: delta, D, w must all be positive");
  if (g.film_thickness_um > g.diffusion_length_um / 10.0)
    warn("diffusion geometry: film thickness exceeds D/10; thin-film model is questionable");
}

double xi_factor(double lambda_um) { return 0.052 + 0.065 / (lambda_um * lambda_um); }

double bulk_index(const SellmeierSet& s, double lambda_um, double temperature_C) {
  if (lambda_um < s.lambda_min_um || lambda_um > s.lambda_max_um) {
    std::ostringstream os;
    os << "bulk_index: wavelength " << lambda_um << " um outside the accepted range ["
       << s.lambda_min_um << ", " << s.lambda_max_um << "] um of the Sellmeier set";
    throw std::domain_error(os.str());
  }
  const double f = (temperature_C - s.t0) * (temperature_C + s.t1);
  const double l2 = lambda_um * lambda_um;
  const double pole1 = s.a3 + s.b3 * f;
  double n2 = s.a1 + s.b1 * f + (s.a2 + s.b2 * f) / (l2 - pole1 * pole1) - s.a6 * l2;
  if (s.a4 != 0.0 || s.b4 != 0.0) n2 += (s.a4 + s.b4 * f) / (l2 - s.a5 * s.a5);
  return std::sqrt(n2);
}

double bulk_index(const MaterialParams& mat, double lambda_um, Branch branch) {
  const SellmeierSet& s = branch == Branch::ordinary ? mat.ordinary : mat.extraordinary;
  return bulk_index(s, lambda_um, mat.temperature_C);
}

double bulk_index(const MaterialParams& mat, double lambda_um, Pol pol) {
  return bulk_index(mat, lambda_um, branch_for(pol));
}

double peak_index_increase(const DiffusionGeometry& g, Branch branch) {
  validate(g);
  const double rho = branch == Branch::ordinary ? 0.47 : 0.625;
  return 2.0 * g.film_thickness_um * rho *
         std::erf(g.strip_width_um / (2.0 * g.diffusion_length_um)) /
         (std::sqrt(pi) * g.diffusion_length_um);
}

double peak_index_increase(const DiffusionGeometry& g, Branch branch, double lambda_um,
                           XiMode xi) {
  const double base = peak_index_increase(g, branch);
  switch (xi) {
    case XiMode::none:
      return base;
    case XiMode::direct:
      return base * xi_factor(lambda_um);
    case XiMode::scaled_ref:
      return base * xi_factor(lambda_um) / xi_factor(xi_reference_lambda_um);
  }
  return base;
}

double lateral_profile(double x_um, double strip_width_um, double diffusion_length_um) {
  const double D = diffusion_length_um;
  const double hw = 0.5 * strip_width_um;
  return (std::erf((x_um + hw) / D) - std::erf((x_um - hw) / D)) / (2.0 * std::erf(hw / D));
}

IndexProfile build_index_profile(const DiffusionGeometry& g, const MaterialParams& mat,
                                 double lambda_um, Pol pol, XiMode xi, const GridSpec& grid) {
  validate(g);
  if (grid.samples_per_D < 20.0)
    throw ConfigError("build_index_profile: need >= 20 samples per diffusion length");

  const double D = g.diffusion_length_um;
  const double h = D / grid.samples_per_D;
  const double x_half = 0.5 * g.strip_width_um + grid.lateral_pad_D * D;
  const double z_max = grid.depth_window_D * D;

  const std::size_t nx = 2 * std::size_t(std::ceil(x_half / h)) + 1;  // symmetric, x=0 on grid
  const std::size_t n_air = std::size_t(std::ceil(grid.air_window_um / h));
  const std::size_t nz = n_air + std::size_t(std::ceil(z_max / h)) + 1;

  IndexProfile p;
  p.pol = pol;
  p.lambda_um = lambda_um;
  p.n_bulk = bulk_index(mat, lambda_um, pol);
  p.dn_peak = peak_index_increase(g, branch_for(pol), lambda_um, xi);
  p.x_um = linspace(-x_half, x_half, nx);
  p.z_um.resize(nz);
  for (std::size_t iz = 0; iz < nz; ++iz) p.z_um[iz] = (double(iz) - double(n_air)) * h;
  p.n.resize(nx * nz);

  for (std::size_t ix = 0; ix < nx; ++ix) {
    const double gx = lateral_profile(p.x_um[ix], g.strip_width_um, D);
    for (std::size_t iz = 0; iz < nz; ++iz) {
      const double z = p.z_um[iz];
      if (z < 0.0) {
        p.n[ix * nz + iz] = 1.0;  // air cover
      } else {
        p.n[ix * nz + iz] = p.n_bulk + p.dn_peak * gx * std::exp(-z * z / (D * D));
      }
    }
  }
  return p;
}

}  // namespace tmw::material
