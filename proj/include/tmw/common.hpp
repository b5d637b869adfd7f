#ifndef TMW_COMMON_HPP
#define TMW_COMMON_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tmw {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
// speed of light in the unit system used throughout: lengths in um, time in fs
inline constexpr double c_um_fs = 0.299792458;

inline double omega_from_lambda_um(double lambda_um) { return 2.0 * pi * c_um_fs / lambda_um; }
inline double lambda_um_from_omega(double omega_rad_fs) { return 2.0 * pi * c_um_fs / omega_rad_fs; }

// TE is polarized along x (crystal x-axis), TM along z, for a z-cut
// y-propagating substrate.
enum class Pol { TE, TM };

enum class Branch { ordinary, extraordinary };

// z-cut, y-propagating crystal: TE sees n_o, TM sees n_e.
inline Branch branch_for(Pol p) { return p == Pol::TE ? Branch::ordinary : Branch::extraordinary; }

inline const char* to_string(Pol p) { return p == Pol::TE ? "TE" : "TM"; }
inline const char* to_string(Branch b) { return b == Branch::ordinary ? "o" : "e"; }

// configuration problems -> CLI exit code 2
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// solver non-convergence and similar -> CLI exit code 3
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Non-fatal diagnostics. Kept as a replaceable sink so tests can silence or
// capture warnings.
namespace detail {
inline std::function<void(const std::string&)>& warn_sink() {
  static std::function<void(const std::string&)> sink = [](const std::string& m) {
    std::cerr << "warning: " << m << '\n';
  };
  return sink;
}
}  // namespace detail

inline void warn(const std::string& msg) { detail::warn_sink()(msg); }
inline void set_warn_sink(std::function<void(const std::string&)> sink) {
  detail::warn_sink() = std::move(sink);
}

inline double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

inline std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = a;
    return v;
  }
  const double h = (b - a) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + h * double(i);
  v.back() = b;
  return v;
}

inline double trapz(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) s += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  return s;
}

// Natural cubic spline on strictly increasing nodes. Used for smooth
// interpolation of solver-derived curves (n_eff vs wavelength, depth-slab
// index vs surface index step).
class CubicSpline {
public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw ConfigError("CubicSpline: need >= 2 nodes");
    m_.assign(n, 0.0);
    if (n == 2) return;
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x_[i] - x_[i - 1];
      const double h1 = x_[i + 1] - x_[i];
      a[i] = h0;
      b[i] = 2.0 * (h0 + h1);
      c[i] = h1;
      d[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    // natural boundary: m_0 = m_{n-1} = 0; Thomas algorithm on interior rows
    for (std::size_t i = 2; i + 1 < n; ++i) {
      const double w = a[i] / b[i - 1];
      b[i] -= w * c[i - 1];
      d[i] -= w * d[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m_[i] = (d[i] - c[i] * (i + 2 < n ? m_[i + 1] : 0.0)) / b[i];
      if (i == 1) break;
    }
  }

  double operator()(double xq) const {
    const std::size_t n = x_.size();
    std::size_t lo = 0, hi = n - 1;
    if (xq <= x_.front()) {
      hi = 1;
    } else if (xq >= x_.back()) {
      lo = n - 2;
    } else {
      while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        (x_[mid] <= xq ? lo : hi) = mid;
      }
    }
    const double h = x_[lo + 1] - x_[lo];
    const double t = xq - x_[lo];
    const double s = x_[lo + 1] - xq;
    return (m_[lo] * s * s * s + m_[lo + 1] * t * t * t) / (6.0 * h) +
           (y_[lo] / h - m_[lo] * h / 6.0) * s + (y_[lo + 1] / h - m_[lo + 1] * h / 6.0) * t;
  }

  double xmin() const { return x_.front(); }
  double xmax() const { return x_.back(); }
  bool valid() const { return x_.size() >= 2; }

private:
  std::vector<double> x_, y_, m_;
};

// Deterministic static-partition parallel map; results are independent of the
// thread count because every index writes only its own slot.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned nt = std::min<unsigned>(threads, std::max<std::size_t>(1, n));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < n; i += nt) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace tmw

#endif
