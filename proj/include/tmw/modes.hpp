#ifndef TMW_MODES_HPP
#define TMW_MODES_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "tmw/common.hpp"
#include "tmw/material.hpp"

namespace tmw::modes {

struct SolverOptions {
  material::GridSpec grid{};
  int n_brackets = 200;       // uniform scan brackets between the n_eff bounds
  double bisect_tol = 1e-10;  // absolute tolerance on n_eff
  double flat_ext_um = 80.0;  // exact flat-layer extension beyond the sampled window
  double tail_sample_um = 48.0;  // analytic evanescent tail kept in stored fields
  int depth_table_points = 96;
  int max_lateral_modes = 2;  // guides of interest are two-mode; higher m discarded
};

// One guided lateral mode of the diffused channel guide. The transverse
// profile is separable, E(x,z) = X(x) Z(z), with X and Z each L2-normalized;
// Z is the depth slab mode at the strip center.
struct GuidedMode {
  double lambda_um = 0.0;
  Pol pol{};
  int m = 0;  // lateral mode number (0 even, 1 odd)
  double width_um = 0.0;
  double n_eff = 0.0;
  double beta_rad_um = 0.0;
  std::vector<double> x_um, lat_field;
  std::vector<double> z_um, depth_field;
};

// 1-D scalar slab problem on a sampled index profile. Layers between nodes
// are treated as uniform (transfer matrix is exact per layer); flat
// extensions are applied as single exact steps.
struct SlabProblem {
  std::vector<double> xi_um;
  std::vector<double> n2;
  double k0 = 0.0;
  double ext_left_um = 0.0;
  double ext_right_um = 0.0;
};

struct SlabMode {
  double n_eff = 0.0;
  int nodes = 0;
  std::vector<double> xi_um;   // includes analytic tail samples
  std::vector<double> field;   // L2-normalized
};

// All guided modes of the slab in descending n_eff. max_modes <= 0 means all.
std::vector<SlabMode> solve_slab(const SlabProblem& p, int max_modes,
                                 const SolverOptions& opt = {});

// Memoized map from the local surface index step to the fundamental depth
// effective index, for one (material, wavelength, polarization). The depth
// problem depends on the lateral position only through that scalar, so one
// table serves every lateral point and every strip width.
class DepthMap {
public:
  DepthMap(const material::Model& model, double lambda_um, Pol pol, const SolverOptions& opt = {});

  double n_d(double dn_surface) const;  // = n_bulk below the depth cutoff
  double n_bulk() const { return n_bulk_; }
  double dn_table_max() const { return dn_max_; }

  // full depth solve at a given surface step (for mode profiles / tests)
  std::optional<SlabMode> depth_mode(double dn_surface) const;

private:
  material::Model model_;
  double lambda_um_, k0_, n_bulk_, dn_max_;
  Pol pol_;
  SolverOptions opt_;
  CubicSpline table_;
  double dn_cutoff_ = 0.0;
  SlabProblem depth_problem(double dn_surface) const;
};

// Effective-index method: depth slabs per lateral position, then one lateral
// graded problem on n_d(x). Returns guided lateral modes, descending n_eff;
// empty when the guide is below cutoff. Lateral modes beyond
// opt.max_lateral_modes are discarded with a warning.
std::vector<GuidedMode> solve_modes(const material::Model& model, double width_um,
                                    double lambda_um, Pol pol, const SolverOptions& opt = {});

struct BetaCurve {
  std::vector<double> width_um;
  std::vector<double> beta_m0;  // NaN where the mode is absent
  std::vector<double> beta_m1;
};

BetaCurve beta_vs_width(const material::Model& model, const std::vector<double>& widths_um,
                        double lambda_um, Pol pol, const SolverOptions& opt = {});

// 2-D overlap integral of two separable mode profiles, guide b displaced by
// `lateral_shift_um` relative to a. Grids are resampled as needed.
double mode_overlap(const GuidedMode& a, const GuidedMode& b, double lateral_shift_um);

// Cache of mode solves and smooth n_eff(omega) interpolants.
class ModesDb {
public:
  explicit ModesDb(material::Model model, SolverOptions opt = {})
      : model_(std::move(model)), opt_(opt) {}

  const material::Model& model() const { return model_; }
  const SolverOptions& options() const { return opt_; }

  const std::vector<GuidedMode>& modes(double width_um, double lambda_um, Pol pol);
  // throws std::domain_error naming (w, lambda, pol, m) when the mode is absent
  const GuidedMode& mode(double width_um, double lambda_um, Pol pol, int m);
  double n_eff(double width_um, double lambda_um, Pol pol, int m);
  double beta(double width_um, double lambda_um, Pol pol, int m);

  // Sample n_eff across [omega_lo, omega_hi] (plus margin) and spline it;
  // subsequent beta_omega calls inside the band are cheap and smooth.
  void prepare_band(double width_um, Pol pol, const std::vector<int>& ms, double omega_lo,
                    double omega_hi, int nodes = 11);
  double n_eff_omega(double width_um, Pol pol, int m, double omega);
  double beta_omega(double width_um, Pol pol, int m, double omega);

private:
  material::Model model_;
  SolverOptions opt_;
  std::mutex mu_;
  std::map<std::tuple<double, double, int>, std::vector<GuidedMode>> cache_;
  struct Band {
    double lo, hi;
    CubicSpline neff;
  };
  std::map<std::tuple<double, int, int>, std::vector<Band>> bands_;
  const std::vector<GuidedMode>& modes_locked(double w, double l, Pol p);
};

}  // namespace tmw::modes

#endif
