#include "tmw/modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tmw::modes {

namespace {

// Advance (E, E') across a uniform layer of squared index n2, thickness h:
// E'' = -k2 E with k2 = k0^2 (n2 - ne2).
inline void step(double& E, double& Ep, double k2, double h) {
  double c, s;  // s = sin(kh)/k resp. sinh(gh)/g
  const double a = k2 * h * h;
  if (std::abs(a) < 1e-10) {
    c = 1.0 - 0.5 * a * (1.0 - a / 12.0);
    s = h * (1.0 - a / 6.0 * (1.0 - a / 20.0));
  } else if (k2 > 0.0) {
    const double k = std::sqrt(k2);
    c = std::cos(k * h);
    s = std::sin(k * h) / k;
  } else {
    const double g = std::sqrt(-k2);
    c = std::cosh(g * h);
    s = std::sinh(g * h) / g;
  }
  const double E1 = c * E + s * Ep;
  Ep = -k2 * s * E + c * Ep;
  E = E1;
}

inline void renorm(double& E, double& Ep) {
  const double m = std::max(std::abs(E), std::abs(Ep));
  if (m > 1e100) {
    E /= m;
    Ep /= m;
  }
}

inline double layer_n2(const SlabProblem& p, std::size_t i) {
  return 0.5 * (p.n2[i] + p.n2[i + 1]);
}

std::size_t match_index(const SlabProblem& p) {
  return std::size_t(std::max_element(p.n2.begin(), p.n2.end()) - p.n2.begin());
}

// Shooting mismatch: Wronskian of the two decaying solutions at the match
// node. Zero exactly at guided-mode eigenvalues.
double mismatch(const SlabProblem& p, double ne, std::size_t im) {
  const double ne2 = ne * ne;
  const double k02 = p.k0 * p.k0;

  double gl2 = k02 * (ne2 - p.n2.front());
  double gr2 = k02 * (ne2 - p.n2.back());
  const double gl = std::sqrt(std::max(gl2, 1e-30));
  const double gr = std::sqrt(std::max(gr2, 1e-30));

  // left-decaying solution, marched right up to the match node
  double El = 1.0, Epl = gl;
  if (p.ext_left_um > 0.0) step(El, Epl, k02 * (p.n2.front() - ne2), p.ext_left_um);
  for (std::size_t i = 0; i < im; ++i) {
    step(El, Epl, k02 * (layer_n2(p, i) - ne2), p.xi_um[i + 1] - p.xi_um[i]);
    renorm(El, Epl);
  }

  // right-decaying solution, marched left down to the match node
  double Er = 1.0, Epr = -gr;
  if (p.ext_right_um > 0.0) step(Er, Epr, k02 * (p.n2.back() - ne2), -p.ext_right_um);
  for (std::size_t i = p.n2.size() - 1; i > im; --i) {
    step(Er, Epr, k02 * (layer_n2(p, i - 1) - ne2), p.xi_um[i - 1] - p.xi_um[i]);
    renorm(Er, Epr);
  }

  // scale both to unit magnitude so the Wronskian stays O(1)
  const double ml = std::max(std::abs(El), std::abs(Epl));
  const double mr = std::max(std::abs(Er), std::abs(Epr));
  return (El / ml) * (Epr / mr) - (Epl / ml) * (Er / mr);
}

struct RawRoot {
  double n_eff;
};

std::vector<RawRoot> scan_roots(const SlabProblem& p, double n_lo, double n_hi, int max_modes,
                                const SolverOptions& opt, std::size_t im) {
  std::vector<RawRoot> roots;
  if (n_hi <= n_lo) return roots;
  const int nb = opt.n_brackets;
  const double h = (n_hi - n_lo) / nb;
  double x1 = n_hi;
  double f1 = mismatch(p, x1, im);
  for (int b = 0; b < nb; ++b) {
    const double x0 = n_hi - (b + 1) * h;
    const double f0 = mismatch(p, x0, im);
    if ((f0 < 0.0) != (f1 < 0.0) || f0 == 0.0) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 200 && hi - lo > opt.bisect_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = mismatch(p, mid, im);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const double r = 0.5 * (lo + hi);
      if (roots.empty() || std::abs(roots.back().n_eff - r) > 10.0 * opt.bisect_tol)
        roots.push_back({r});
      if (max_modes > 0 && int(roots.size()) >= max_modes) return roots;
    }
    x1 = x0;
    f1 = f0;
  }
  return roots;
}

int count_nodes(const std::vector<double>& f) {
  double peak = 0.0;
  for (double v : f) peak = std::max(peak, std::abs(v));
  const double thr = 1e-7 * peak;
  int nodes = 0, last = 0;
  for (double v : f) {
    if (std::abs(v) < thr) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++nodes;
    last = s;
  }
  return nodes;
}

SlabMode build_field(const SlabProblem& p, double ne, const SolverOptions& opt, std::size_t im) {
  const double ne2 = ne * ne;
  const double k02 = p.k0 * p.k0;
  const std::size_t n = p.n2.size();

  // march a decaying solution inward, rescaling the whole stored prefix
  // whenever the state grows large (deeply evanescent tails overflow otherwise)
  auto rescale = [](std::vector<double>& stored, std::size_t count, double& E, double& Ep) {
    const double m = std::max(std::abs(E), std::abs(Ep));
    if (m > 1e50) {
      for (std::size_t j = 0; j < count; ++j) stored[j] /= m;
      E /= m;
      Ep /= m;
    }
  };

  std::vector<double> EL(n, 0.0), ER(n, 0.0);
  double Epl_m, Epr_m;
  {
    double E = 1.0, Ep = std::sqrt(std::max(k02 * (ne2 - p.n2.front()), 1e-30));
    if (p.ext_left_um > 0.0) step(E, Ep, k02 * (p.n2.front() - ne2), p.ext_left_um);
    EL[0] = E;
    for (std::size_t i = 0; i < im; ++i) {
      step(E, Ep, k02 * (layer_n2(p, i) - ne2), p.xi_um[i + 1] - p.xi_um[i]);
      EL[i + 1] = E;
      rescale(EL, i + 2, E, Ep);
    }
    Epl_m = Ep;

    double Er = 1.0, Epr = -std::sqrt(std::max(k02 * (ne2 - p.n2.back()), 1e-30));
    if (p.ext_right_um > 0.0) step(Er, Epr, k02 * (p.n2.back() - ne2), -p.ext_right_um);
    ER[n - 1] = Er;
    std::vector<double> tmp(n - im, 0.0);
    tmp[n - 1 - im] = Er;
    for (std::size_t i = n - 1; i > im; --i) {
      step(Er, Epr, k02 * (layer_n2(p, i - 1) - ne2), p.xi_um[i - 1] - p.xi_um[i]);
      tmp[i - 1 - im] = Er;
      rescale(tmp, n - im, Er, Epr);
    }
    Epr_m = Epr;
    for (std::size_t i = im; i < n; ++i) ER[i] = tmp[i - im];

    // least-squares splice of (E, E'/kbar): exact when the two solutions are
    // proportional, robust when E or E' vanishes at the match node
    const double El_m = EL[im], Er_m = ER[im];
    const double kbar = std::sqrt(std::max(k02 * std::abs(p.n2[im] - ne2), 1e-12));
    const double rl = Epl_m / kbar, rr = Epr_m / kbar;
    const double scale = (El_m * Er_m + rl * rr) / (Er_m * Er_m + rr * rr);
    for (std::size_t i = im; i < n; ++i) ER[i] *= scale;
  }

  SlabMode mode;
  mode.n_eff = ne;
  mode.xi_um.reserve(n + 64);
  mode.field.reserve(n + 64);

  // analytic evanescent tail on the left
  const double gl = std::sqrt(std::max(k02 * (ne2 - p.n2.front()), 1e-30));
  const double hl = p.xi_um[1] - p.xi_um[0];
  const int ntl = int(std::min(opt.tail_sample_um / hl, 20.0 / (gl * hl)));
  for (int i = ntl; i >= 1; --i) {
    mode.xi_um.push_back(p.xi_um.front() - i * hl);
    mode.field.push_back(EL[0] * std::exp(-gl * i * hl));
  }
  for (std::size_t i = 0; i < n; ++i) {
    mode.xi_um.push_back(p.xi_um[i]);
    mode.field.push_back(i < im ? EL[i] : ER[i]);
  }
  const double gr = std::sqrt(std::max(k02 * (ne2 - p.n2.back()), 1e-30));
  const double hr = p.xi_um[n - 1] - p.xi_um[n - 2];
  const int ntr = int(std::min(opt.tail_sample_um / hr, 20.0 / (gr * hr)));
  for (int i = 1; i <= ntr; ++i) {
    mode.xi_um.push_back(p.xi_um.back() + i * hr);
    mode.field.push_back(ER[n - 1] * std::exp(-gr * i * hr));
  }

  std::vector<double> f2(mode.field.size());
  for (std::size_t i = 0; i < f2.size(); ++i) f2[i] = mode.field[i] * mode.field[i];
  const double nrm = std::sqrt(trapz(mode.xi_um, f2));
  for (double& v : mode.field) v /= nrm;
  mode.nodes = count_nodes(mode.field);
  return mode;
}

}  // namespace

std::vector<SlabMode> solve_slab(const SlabProblem& p, int max_modes, const SolverOptions& opt) {
  if (p.n2.size() < 3 || p.xi_um.size() != p.n2.size())
    throw ConfigError("solve_slab: degenerate grid");
  const std::size_t im = match_index(p);
  const double n_end = std::sqrt(std::max(p.n2.front(), p.n2.back()));
  const double n_top = std::sqrt(*std::max_element(p.n2.begin(), p.n2.end()));
  const double span = n_top - n_end;
  if (span <= 1e-12) return {};
  const double n_lo = n_end + std::max(1e-9, 1e-7 * span);
  const double n_hi = n_top - std::max(1e-9, 1e-7 * span);

  std::vector<SlabMode> out;
  for (const RawRoot& r : scan_roots(p, n_lo, n_hi, max_modes, opt, im))
    out.push_back(build_field(p, r.n_eff, opt, im));
  return out;
}

// ---------------------------------------------------------------- DepthMap

SlabProblem DepthMap::depth_problem(double dn_surface) const {
  SlabProblem p;
  p.k0 = 2.0 * pi / lambda_um_;
  const double D = model_.geom.diffusion_length_um;
  const double h = D / opt_.grid.samples_per_D;
  const std::size_t n_air = std::size_t(std::ceil(opt_.grid.air_window_um / h));
  const std::size_t n_sub = std::size_t(std::ceil(opt_.grid.depth_window_D * D / h));
  p.xi_um.resize(n_air + n_sub + 1);
  p.n2.resize(p.xi_um.size());
  for (std::size_t i = 0; i < p.xi_um.size(); ++i) {
    const double z = (double(i) - double(n_air)) * h;
    p.xi_um[i] = z;
    const double nv =
        z < 0.0 ? 1.0 : n_bulk_ + dn_surface * std::exp(-z * z / (D * D));
    p.n2[i] = nv * nv;
  }
  p.ext_right_um = opt_.flat_ext_um;  // substrate side
  return p;
}

DepthMap::DepthMap(const material::Model& model, double lambda_um, Pol pol,
                   const SolverOptions& opt)
    : model_(model), lambda_um_(lambda_um), k0_(2.0 * pi / lambda_um), pol_(pol), opt_(opt) {
  n_bulk_ = material::bulk_index(model.mat, lambda_um, pol);
  material::DiffusionGeometry sat = model.geom;
  sat.strip_width_um = 1e6;  // erf saturates: widest possible surface step
  dn_max_ = material::peak_index_increase(sat, branch_for(pol), lambda_um, model.xi) * 1.02;

  const int npts = opt_.depth_table_points;
  std::vector<double> dn_nodes, nd_vals;
  int first_guided = -1;
  for (int i = 0; i <= npts; ++i) {
    const double dn = dn_max_ * double(i) / double(npts);
    double nd = n_bulk_;
    if (dn > 0.0) {
      auto ms = solve_slab(depth_problem(dn), 1, opt_);
      if (!ms.empty()) nd = ms.front().n_eff;
    }
    if (nd > n_bulk_ && first_guided < 0) first_guided = i;
    dn_nodes.push_back(dn);
    nd_vals.push_back(nd);
  }
  if (first_guided < 0) {
    dn_cutoff_ = dn_max_;  // nothing guides; n_d(dn) == n_bulk everywhere
    return;
  }
  const int lo = std::max(0, first_guided - 1);
  dn_cutoff_ = dn_nodes[lo];
  table_ = CubicSpline(std::vector<double>(dn_nodes.begin() + lo, dn_nodes.end()),
                       std::vector<double>(nd_vals.begin() + lo, nd_vals.end()));
}

double DepthMap::n_d(double dn_surface) const {
  if (dn_surface <= dn_cutoff_ || !table_.valid()) return n_bulk_;
  return std::max(n_bulk_, table_(std::min(dn_surface, dn_table_max())));
}

std::optional<SlabMode> DepthMap::depth_mode(double dn_surface) const {
  if (dn_surface <= 0.0) return std::nullopt;
  auto ms = solve_slab(depth_problem(dn_surface), 1, opt_);
  if (ms.empty()) return std::nullopt;
  return ms.front();
}

// ------------------------------------------------------------- solve_modes

std::vector<GuidedMode> solve_modes(const material::Model& model, double width_um,
                                    double lambda_um, Pol pol, const SolverOptions& opt) {
  DepthMap dm(model, lambda_um, pol, opt);
  material::DiffusionGeometry g = model.geom;
  g.strip_width_um = width_um;
  material::validate(g);
  const double dn_peak =
      material::peak_index_increase(g, branch_for(pol), lambda_um, model.xi);

  const double D = g.diffusion_length_um;
  const double h = D / opt.grid.samples_per_D;
  const double x_half = 0.5 * width_um + opt.grid.lateral_pad_D * D;
  const std::size_t nhalf = std::size_t(std::ceil(x_half / h));

  SlabProblem lat;
  lat.k0 = 2.0 * pi / lambda_um;
  lat.xi_um.resize(2 * nhalf + 1);
  lat.n2.resize(lat.xi_um.size());
  for (std::size_t i = 0; i < lat.xi_um.size(); ++i) {
    const double x = (double(i) - double(nhalf)) * h;
    lat.xi_um[i] = x;
    const double nd = dm.n_d(dn_peak * material::lateral_profile(x, width_um, D));
    lat.n2[i] = nd * nd;
  }
  lat.ext_left_um = lat.ext_right_um = opt.flat_ext_um;

  auto lat_modes = solve_slab(lat, -1, opt);
  for (std::size_t i = 0; i < lat_modes.size(); ++i) {
    if (lat_modes[i].nodes != int(i)) {
      std::ostringstream os;
      os << "solve_modes: inconsistent lateral mode ladder at w=" << width_um << " um, lambda="
         << lambda_um << " um, " << to_string(pol) << " (root " << i << " has "
         << lat_modes[i].nodes << " nodes)";
      throw NumericError(os.str());
    }
  }
  if (int(lat_modes.size()) > opt.max_lateral_modes) {
    std::ostringstream os;
    os << "solve_modes: discarding " << lat_modes.size() - opt.max_lateral_modes
       << " lateral mode(s) beyond m=" << opt.max_lateral_modes - 1 << " at w=" << width_um
       << " um, lambda=" << lambda_um << " um";
    warn(os.str());
    lat_modes.resize(opt.max_lateral_modes);
  }

  auto depth0 = dm.depth_mode(dn_peak);
  std::vector<GuidedMode> out;
  for (std::size_t i = 0; i < lat_modes.size(); ++i) {
    GuidedMode gm;
    gm.lambda_um = lambda_um;
    gm.pol = pol;
    gm.m = int(i);
    gm.width_um = width_um;
    gm.n_eff = lat_modes[i].n_eff;
    gm.beta_rad_um = 2.0 * pi * gm.n_eff / lambda_um;
    gm.x_um = std::move(lat_modes[i].xi_um);
    gm.lat_field = std::move(lat_modes[i].field);
    if (depth0) {
      gm.z_um = depth0->xi_um;
      gm.depth_field = depth0->field;
    }
    out.push_back(std::move(gm));
  }
  return out;
}

BetaCurve beta_vs_width(const material::Model& model, const std::vector<double>& widths_um,
                        double lambda_um, Pol pol, const SolverOptions& opt) {
  for (std::size_t i = 0; i + 1 < widths_um.size(); ++i)
    if (widths_um[i + 1] <= widths_um[i])
      throw ConfigError("beta_vs_width: widths must be ascending");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  BetaCurve c;
  c.width_um = widths_um;
  c.beta_m0.assign(widths_um.size(), nan);
  c.beta_m1.assign(widths_um.size(), nan);
  for (std::size_t i = 0; i < widths_um.size(); ++i) {
    auto ms = solve_modes(model, widths_um[i], lambda_um, pol, opt);
    for (const auto& m : ms) {
      if (m.m == 0) c.beta_m0[i] = m.beta_rad_um;
      if (m.m == 1) c.beta_m1[i] = m.beta_rad_um;
    }
  }
  return c;
}

namespace {
double overlap_1d(const std::vector<double>& xa, const std::vector<double>& fa,
                  const std::vector<double>& xb, const std::vector<double>& fb, double shift) {
  // integrate fa(x - shift) * fb(x) over b's grid, linear interpolation of fa
  auto sample_a = [&](double x) -> double {
    const double xs = x - shift;
    if (xs <= xa.front() || xs >= xa.back()) return 0.0;
    const std::size_t hi = std::size_t(std::lower_bound(xa.begin(), xa.end(), xs) - xa.begin());
    const std::size_t lo = hi - 1;
    const double t = (xs - xa[lo]) / (xa[hi] - xa[lo]);
    return fa[lo] * (1.0 - t) + fa[hi] * t;
  };
  std::vector<double> prod(xb.size());
  for (std::size_t i = 0; i < xb.size(); ++i) prod[i] = sample_a(xb[i]) * fb[i];
  return trapz(xb, prod);
}
}  // namespace

double mode_overlap(const GuidedMode& a, const GuidedMode& b, double lateral_shift_um) {
  const double lat = overlap_1d(a.x_um, a.lat_field, b.x_um, b.lat_field, lateral_shift_um);
  const double dep = overlap_1d(a.z_um, a.depth_field, b.z_um, b.depth_field, 0.0);
  return lat * dep;
}

// ----------------------------------------------------------------- ModesDb

const std::vector<GuidedMode>& ModesDb::modes_locked(double w, double l, Pol p) {
  const auto key = std::make_tuple(w, l, int(p));
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, solve_modes(model_, w, l, p, opt_)).first;
  return it->second;
}

const std::vector<GuidedMode>& ModesDb::modes(double width_um, double lambda_um, Pol pol) {
  std::lock_guard lk(mu_);
  return modes_locked(width_um, lambda_um, pol);
}

const GuidedMode& ModesDb::mode(double width_um, double lambda_um, Pol pol, int m) {
  std::lock_guard lk(mu_);
  for (const auto& gm : modes_locked(width_um, lambda_um, pol))
    if (gm.m == m) return gm;
  std::ostringstream os;
  os << "no guided mode (w=" << width_um << " um, lambda=" << lambda_um << " um, "
     << to_string(pol) << ", m=" << m << ")";
  throw std::domain_error(os.str());
}

double ModesDb::n_eff(double w, double l, Pol p, int m) { return mode(w, l, p, m).n_eff; }
double ModesDb::beta(double w, double l, Pol p, int m) { return mode(w, l, p, m).beta_rad_um; }

void ModesDb::prepare_band(double width_um, Pol pol, const std::vector<int>& ms, double omega_lo,
                           double omega_hi, int nodes) {
  const double pad = 0.15 * (omega_hi - omega_lo);
  const double lo = omega_lo - pad, hi = omega_hi + pad;
  for (int m : ms) {
    {
      std::lock_guard lk(mu_);
      bool covered = false;
      for (const auto& b : bands_[std::make_tuple(width_um, int(pol), m)])
        if (b.lo <= omega_lo && b.hi >= omega_hi) covered = true;
      if (covered) continue;
    }
    std::vector<double> om = linspace(lo, hi, nodes);
    std::vector<double> ne(om.size());
    for (std::size_t i = 0; i < om.size(); ++i)
      ne[i] = mode(width_um, lambda_um_from_omega(om[i]), pol, m).n_eff;
    std::lock_guard lk(mu_);
    bands_[std::make_tuple(width_um, int(pol), m)].push_back({lo, hi, CubicSpline(om, ne)});
  }
}

double ModesDb::n_eff_omega(double width_um, Pol pol, int m, double omega) {
  std::lock_guard lk(mu_);
  for (const auto& b : bands_[std::make_tuple(width_um, int(pol), m)])
    if (b.lo <= omega && omega <= b.hi) return b.neff(omega);
  std::ostringstream os;
  os << "n_eff_omega: no prepared band covers omega=" << omega << " rad/fs (w=" << width_um
     << " um, " << to_string(pol) << ", m=" << m << ")";
  throw NumericError(os.str());
}

double ModesDb::beta_omega(double width_um, Pol pol, int m, double omega) {
  return n_eff_omega(width_um, pol, m, omega) * omega / c_um_fs;
}

}  // namespace tmw::modes
