#ifndef TMW_MATERIAL_HPP
#define TMW_MATERIAL_HPP

#include <vector>

#include "tmw/common.hpp"

namespace tmw::material {

// Temperature-dependent Sellmeier series
//   n^2 = a1 + b1*f + (a2 + b2*f) / (lam^2 - (a3 + b3*f)^2)
//              + (a4 + b4*f) / (lam^2 - a5^2) - a6*lam^2,
//   f = (T - t0)*(T + t1),  lam in um, T in deg C.
struct SellmeierSet {
  double a1, b1, a2, b2, a3, b3, a4, b4, a5, a6;
  double t0, t1;
  double lambda_min_um, lambda_max_um;  // accepted evaluation domain
};

// Congruent LiNbO3, ordinary branch: Edwards & Lawrence, Opt. Quantum
// Electron. 16, 373 (1984). Fitted 0.40-3.1 um; we accept down to 0.35 um
// where the series is still smooth and real.
inline constexpr SellmeierSet lnb_ordinary{
    4.9048, 2.1429e-8, 0.11775, 2.2314e-8, 0.21802, -2.9671e-8,
    0.0,    0.0,       1.0,     0.027153,  24.5,    570.5,
    0.35,   3.1};

// Congruent LiNbO3, extraordinary branch: Jundt, Opt. Lett. 22, 1553 (1997).
// Fitted 0.40-5.0 um, 20-250 C; accepted from 0.35 um as above.
inline constexpr SellmeierSet lnb_extraordinary{
    5.35583, 4.629e-7, 0.100473, 3.862e-8, 0.20692,   -0.89e-8,
    100.0,   2.657e-5, 11.34927, 0.015334, 24.5,      570.82,
    0.35,    5.0};

struct MaterialParams {
  SellmeierSet ordinary = lnb_ordinary;
  SellmeierSet extraordinary = lnb_extraordinary;
  double temperature_C = 80.0;
};

// Ti-film / indiffusion geometry. All lengths in um.
struct DiffusionGeometry {
  double film_thickness_um = 0.1;  // delta
  double diffusion_length_um = 3.0;  // D, same laterally and in depth
  double strip_width_um = 4.0;  // w
};

void validate(const DiffusionGeometry& g);

// How the chromatic factor xi(lambda) = 0.052 + 0.065/lambda^2 enters the
// surface index increase.
enum class XiMode {
  none,        // plain erf formula, no chromatic weight
  direct,      // dn = dn_base * xi(lambda)
  scaled_ref,  // dn = dn_base * xi(lambda)/xi(0.633 um)
};

inline constexpr double xi_reference_lambda_um = 0.633;

double xi_factor(double lambda_um);

double bulk_index(const SellmeierSet& s, double lambda_um, double temperature_C);
double bulk_index(const MaterialParams& mat, double lambda_um, Branch branch);
double bulk_index(const MaterialParams& mat, double lambda_um, Pol pol);

// Peak surface index increase of the diffused strip, dn = 2*delta*rho*
// erf(w/2D)/(sqrt(pi)*D), chromatically weighted per XiMode.
double peak_index_increase(const DiffusionGeometry& g, Branch branch);
double peak_index_increase(const DiffusionGeometry& g, Branch branch, double lambda_um,
                           XiMode xi);

// Lateral shape of the diffused index, normalized so g(0) = 1.
double lateral_profile(double x_um, double strip_width_um, double diffusion_length_um);

// Everything the waveguide solvers need to evaluate the index landscape.
struct Model {
  MaterialParams mat;
  DiffusionGeometry geom;
  XiMode xi = XiMode::direct;
};

struct GridSpec {
  double samples_per_D = 40.0;
  double lateral_pad_D = 5.0;   // window: +-(w/2 + pad*D)
  double depth_window_D = 5.0;  // crystal side depth
  double air_window_um = 0.5;
};

struct IndexProfile {
  std::vector<double> x_um;  // lateral
  std::vector<double> z_um;  // depth; negative values are in the air cover
  std::vector<double> n;     // row-major [ix * nz + iz]
  Pol pol{};
  double lambda_um = 0.0;
  double n_bulk = 0.0;
  double dn_peak = 0.0;

  double at(std::size_t ix, std::size_t iz) const { return n[ix * z_um.size() + iz]; }
};

IndexProfile build_index_profile(const DiffusionGeometry& g, const MaterialParams& mat,
                                 double lambda_um, Pol pol, XiMode xi = XiMode::direct,
                                 const GridSpec& grid = {});

}  // namespace tmw::material

#endif
