#pragma once

// Method of images in golden annuli 1 < |z| < phi^{k/2}. A vortex at z0 has
// images z0 q^n and q^n / conj(z0), q = phi^k, for every integer n.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <thread>
#include <vector>

#include "goldcalc/error.hpp"
#include "goldcalc/functions.hpp"
#include "goldcalc/golden.hpp"

namespace goldcalc {

/// Default exclusion radius around image singularities.
inline constexpr double kSingularityEps = 1e-9;

struct AnnulusSpec {
  int k = 1;           // level: inner radius 1, outer radius phi^{k/2}
  int truncation = 80; // images summed for |n| <= truncation

  /// q = r2^2 / r1^2 = phi^k.
  double ratio() const { return std::pow(kPhi, k); }
  double inner_radius() const { return 1.0; }
  double outer_radius() const { return std::pow(kPhi, 0.5 * k); }
  bool contains(Complex z, double slack = 0.0) const {
    const double r = std::abs(z);
    return r >= inner_radius() - slack && r <= outer_radius() + slack;
  }
  bool strictly_contains(Complex z) const {
    const double r = std::abs(z);
    return r > inner_radius() && r < outer_radius();
  }
  void validate() const {
    if (k < 1) throw DomainError("AnnulusSpec: k must be a positive integer");
    if (truncation < 0) throw DomainError("AnnulusSpec: truncation must be non-negative");
  }
};

/// How the two image ladders are paired into a convergent sum.
///   inner: z0 q^n with q^n / conj(z0)      (reflection of z0 in |z| = 1)
///   outer: z0 q^n with q^{n+1} / conj(z0)  (reflection of z0 in |z| = phi^{k/2})
/// The limits differ by a point vortex of the same circulation at the origin,
/// i.e. by the circulation carried around the inner circle. The e_phi / Ln_phi
/// product representation and the dynamics use `outer`.
enum class ImagePairing { inner, outer };

class ImageSystem {
 public:
  ImageSystem(Complex z0, double gamma, AnnulusSpec annulus, ImagePairing pairing = ImagePairing::inner)
      : z0_(z0), gamma_(gamma), annulus_(annulus), pairing_(pairing) {
    annulus_.validate();
    if (!annulus_.strictly_contains(z0_)) {
      throw DomainError("ImageSystem: vortex must lie strictly inside the annulus");
    }
  }

  Complex z0() const { return z0_; }
  double gamma() const { return gamma_; }
  const AnnulusSpec& annulus() const { return annulus_; }
  ImagePairing pairing() const { return pairing_; }
  int pairing_shift() const { return pairing_ == ImagePairing::outer ? 1 : 0; }

 private:
  Complex z0_;
  double gamma_;
  AnnulusSpec annulus_;
  ImagePairing pairing_;
};

struct ImagePair {
  int n;
  Complex direct;  // z0 q^n
  Complex image;   // q^n / conj(z0)
};

/// Pole positions for n in [n_lo, n_hi]. z0 may lie anywhere except 0.
inline std::vector<ImagePair> image_positions(Complex z0, int k, int n_lo, int n_hi) {
  if (z0 == 0.0) throw DomainError("image_positions: z0 must be nonzero");
  if (n_hi < n_lo) throw DomainError("image_positions: empty index range");
  const double q = std::pow(kPhi, k);
  const Complex mirror = 1.0 / std::conj(z0);
  std::vector<ImagePair> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    const double s = std::pow(q, n);
    out.push_back({n, z0 * s, mirror * s});
  }
  return out;
}

inline std::vector<ImagePair> image_positions(const ImageSystem& sys) {
  const int N = sys.annulus().truncation;
  return image_positions(sys.z0(), sys.annulus().k, -N, N);
}

namespace detail {

inline Complex two_pi_i() { return Complex(0.0, 2.0 * std::numbers::pi); }

// Calls term(direct, image) for n in [n_lo, n_hi]; image index shifted by the pairing.
template <class Fn>
void for_each_pair(const ImageSystem& sys, Complex z, int n_lo, int n_hi, double eps, Fn&& term) {
  const double q = sys.annulus().ratio();
  const Complex mirror = 1.0 / std::conj(sys.z0());
  const int shift = sys.pairing_shift();
  for (int n = n_lo; n <= n_hi; ++n) {
    const Complex direct = sys.z0() * std::pow(q, n);
    const Complex image = mirror * std::pow(q, n + shift);
    if (std::abs(z - direct) < eps || std::abs(z - image) < eps) {
      throw SingularityError("image sum: evaluation point within eps of an image");
    }
    term(direct, image);
  }
}

}  // namespace detail

/// F(z) = Gamma/(2 pi i) sum_{n=n_lo}^{n_hi} Log[(z - z0 q^n) / (z - q^{n+s}/conj(z0))],
/// principal branch, s the pairing shift. Im F (the stream function) is branch-free.
inline Complex vortex_potential(const ImageSystem& sys, Complex z, int n_lo, int n_hi,
                                double eps = kSingularityEps) {
  Complex acc = 0.0;
  detail::for_each_pair(sys, z, n_lo, n_hi, eps,
                        [&](Complex d, Complex m) { acc += std::log((z - d) / (z - m)); });
  return sys.gamma() / detail::two_pi_i() * acc;
}

inline Complex vortex_potential(const ImageSystem& sys, Complex z, double eps = kSingularityEps) {
  const int N = sys.annulus().truncation;
  return vortex_potential(sys, z, -N, N, eps);
}

/// Conjugate velocity dF/dz = Gamma/(2 pi i) sum [1/(z - z0 q^n) - 1/(z - q^{n+s}/conj(z0))].
inline Complex vortex_velocity(const ImageSystem& sys, Complex z, int n_lo, int n_hi,
                               double eps = kSingularityEps) {
  Complex acc = 0.0;
  detail::for_each_pair(sys, z, n_lo, n_hi, eps,
                        [&](Complex d, Complex m) { acc += 1.0 / (z - d) - 1.0 / (z - m); });
  return sys.gamma() / detail::two_pi_i() * acc;
}

inline Complex vortex_velocity(const ImageSystem& sys, Complex z, double eps = kSingularityEps) {
  const int N = sys.annulus().truncation;
  return vortex_velocity(sys, z, -N, N, eps);
}

/// Stream function Im F; sums log-moduli directly.
inline double stream_function(const ImageSystem& sys, Complex z, double eps = kSingularityEps) {
  const int N = sys.annulus().truncation;
  double acc = 0.0;
  detail::for_each_pair(sys, z, -N, N, eps,
                        [&](Complex d, Complex m) { acc += std::log(std::abs(z - d) / std::abs(z - m)); });
  return -sys.gamma() / (2.0 * std::numbers::pi) * acc;
}

/// True if z is within eps of any truncated image of sys.
inline bool near_singularity(const ImageSystem& sys, Complex z, double eps = kSingularityEps) {
  try {
    const int N = sys.annulus().truncation;
    detail::for_each_pair(sys, z, -N, N, eps, [](Complex, Complex) {});
  } catch (const SingularityError&) {
    return true;
  }
  return false;
}

/// Re of the contour integral of V-bar dz around a circle (trapezoid rule).
inline double circulation(const ImageSystem& sys, Complex center, double radius, int n_points = 256) {
  Complex acc = 0.0;
  for (int j = 0; j < n_points; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n_points;
    const Complex e = std::polar(1.0, th);
    const Complex dz = Complex(0.0, 1.0) * radius * e;
    acc += vortex_velocity(sys, center + radius * e) * dz;
  }
  return (acc * (2.0 * std::numbers::pi / n_points)).real();
}

/// Population standard deviation of psi sampled at n_angles points on |z| = radius.
inline double circle_psi_stddev(std::span<const ImageSystem> systems, double radius, int n_angles = 64) {
  std::vector<double> psi(static_cast<std::size_t>(n_angles), 0.0);
  for (int j = 0; j < n_angles; ++j) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * j / n_angles);
    for (const auto& s : systems) psi[j] += stream_function(s, z);
  }
  double mean = 0.0;
  for (double p : psi) mean += p;
  mean /= n_angles;
  double var = 0.0;
  for (double p : psi) var += (p - mean) * (p - mean);
  return std::sqrt(var / n_angles);
}

inline double circle_psi_stddev(const ImageSystem& sys, double radius, int n_angles = 64) {
  return circle_psi_stddev(std::span<const ImageSystem>(&sys, 1), radius, n_angles);
}

// ---------------------------------------------------------------------------
// Pure golden-periodic flow F(z) = z^{2 pi i / ln phi}

struct PureFlowSample {
  Complex F;
  double psi;
  Complex Vbar;
};

/// Circulation of the modulated vortex at the origin, -4 pi^2 / ln phi.
inline double pure_flow_circulation() {
  return -4.0 * std::numbers::pi * std::numbers::pi / std::log(kPhi);
}

inline PureFlowSample pure_golden_flow(Complex z) {
  if (z == 0.0) throw DomainError("pure_golden_flow: z = 0 is a branch point");
  const double lnphi = std::log(kPhi);
  const Complex c(0.0, 2.0 * std::numbers::pi / lnphi);
  const Complex F = std::exp(c * std::log(z));
  const double r = std::abs(z);
  const double theta = std::arg(z);
  const double psi =
      std::exp(-2.0 * std::numbers::pi * theta / lnphi) * std::sin(2.0 * std::numbers::pi * std::log(r) / lnphi);
  return {F, psi, c * F / z};
}

// ---------------------------------------------------------------------------
// Product / phi-logarithm representation (k = 1 annulus 1 < |z| < sqrt(phi))

struct PointVortex {
  Complex z;
  double kappa;  // strength in i*kappa*ln(z - z_s); kappa = -Gamma / (2 pi)
};

inline double kappa_from_gamma(double gamma) { return -gamma / (2.0 * std::numbers::pi); }
inline double gamma_from_kappa(double kappa) { return -2.0 * std::numbers::pi * kappa; }

namespace detail {

inline void check_product_form_inputs(std::span<const PointVortex> vortices, Complex z, double eps) {
  const AnnulusSpec golden{1, 0};
  if (!golden.contains(z, 1e-12)) throw DomainError("product form: z must lie in the annulus 1 <= |z| <= sqrt(phi)");
  for (const auto& v : vortices) {
    if (!golden.strictly_contains(v.z)) throw DomainError("product form: vortices must lie inside the annulus");
    if (std::abs(z - v.z) < eps) throw SingularityError("product form: z within eps of a vortex");
  }
}

}  // namespace detail

/// F(z) = sum_s i kappa_s { ln(z - z_s)
///          + ln[e(-phi z/z_s) e(-phi z_s/z) / (e(-phi z conj z_s) e(-phi^2/(z conj z_s)))] }
/// with e = e_phi in product form. Equal, up to an additive constant, to the
/// image-sum potential with ImagePairing::outer and Gamma = -2 pi kappa.
inline Complex potential_via_e_phi(std::span<const PointVortex> vortices, Complex z,
                                   const SeriesTruncation& t = {}, double eps = kSingularityEps) {
  detail::check_product_form_inputs(vortices, z, eps);
  Complex acc = 0.0;
  for (const auto& v : vortices) {
    const Complex zs = v.z;
    const Complex cs = std::conj(zs);
    const Complex logs = std::log(z - zs) + log_e_phi_product(-kPhi * z / zs, t) +
                         log_e_phi_product(-kPhi * zs / z, t) - log_e_phi_product(-kPhi * z * cs, t) -
                         log_e_phi_product(-kPhi * kPhi / (z * cs), t);
    acc += Complex(0.0, v.kappa) * logs;
  }
  return acc;
}

/// V-bar(z) = sum_s i kappa_s/(z - z_s) + (i phi / z) sum_s kappa_s [Ln(1 - z/z_s) - Ln(1 - z conj z_s)
///            + Ln(1 - phi/(z conj z_s)) - Ln(1 - z_s/z)],  Ln = Ln_phi in pole-sum form.
inline Complex velocity_via_ln_phi(std::span<const PointVortex> vortices, Complex z,
                                   const SeriesTruncation& t = {}, double eps = kSingularityEps) {
  detail::check_product_form_inputs(vortices, z, eps);
  Complex direct = 0.0;
  Complex ladder = 0.0;
  for (const auto& v : vortices) {
    const Complex zs = v.z;
    const Complex cs = std::conj(zs);
    direct += Complex(0.0, v.kappa) / (z - zs);
    ladder += v.kappa * (ln_phi_one_minus(z / zs, 1, t) - ln_phi_one_minus(z * cs, 1, t) +
                         ln_phi_one_minus(kPhi / (z * cs), 1, t) - ln_phi_one_minus(zs / z, 1, t));
  }
  return direct + Complex(0.0, kPhi) / z * ladder;
}

// ---------------------------------------------------------------------------
// Golden Weierstrass-Mandelbrot function

namespace detail {

inline void check_wm_args(double t, double d, int trunc) {
  if (!(d > 0.0 && d < 1.0)) throw DomainError("wm_fractal: d must lie in (0, 1)");
  if (!(t > 0.0)) throw DomainError("wm_fractal: t must be positive");
  if (trunc < 1) throw DomainError("wm_fractal: truncation must be positive");
}

}  // namespace detail

/// W(t) = sum_{|n| <= trunc} (1 - cos(phi^n t)) / phi^{n d}.
inline double wm_fractal(double t, double d, int trunc) {
  detail::check_wm_args(t, d, trunc);
  double acc = 0.0;
  for (int n = -trunc; n <= trunc; ++n) {
    const double s = std::pow(kPhi, n);
    // 1 - cos(a) = 2 sin^2(a/2) keeps the small-argument terms accurate.
    const double h = std::sin(0.5 * s * t);
    acc += 2.0 * h * h / std::pow(s, d);
  }
  return acc;
}

/// A(t) = sum_{|n| <= trunc} (1 - exp(i phi^n t)) / (phi^{d n} t^d); Re A = W / t^d.
inline Complex wm_modulation(double t, double d, int trunc) {
  detail::check_wm_args(t, d, trunc);
  Complex acc = 0.0;
  for (int n = -trunc; n <= trunc; ++n) {
    const double s = std::pow(kPhi, n);
    const double h = std::sin(0.5 * s * t);
    acc += Complex(2.0 * h * h, -std::sin(s * t)) / std::pow(s, d);
  }
  return acc / std::pow(t, d);
}

// ---------------------------------------------------------------------------
// Sampled fields

struct FlowSample {
  double x;
  double y;
  double psi;
  double u;
  double v;
};

struct GridSpec {
  int nx = 64;
  int ny = 64;
  // Bounds default to the square circumscribing the outer circle when min >= max.
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  double eps = kSingularityEps;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct FlowGrid {
  GridSpec spec;
  std::vector<FlowSample> samples;
};

/// psi = Im F and (u, v) = (Re V-bar, -Im V-bar) on an nx-by-ny lattice, keeping
/// points in the closed annulus outside eps-disks around images. Rows are
/// evaluated in parallel; sample order is row-major regardless of thread count.
inline FlowGrid field_grid(std::span<const ImageSystem> systems, const AnnulusSpec& annulus, GridSpec spec) {
  annulus.validate();
  if (spec.nx < 2 || spec.ny < 2) throw DomainError("field_grid: resolution must be at least 2x2");
  for (const auto& s : systems) {
    if (s.annulus().k != annulus.k) throw DomainError("field_grid: all systems must share the annulus level");
  }
  const double R = annulus.outer_radius();
  if (!(spec.x_min < spec.x_max)) {
    spec.x_min = -R;
    spec.x_max = R;
  }
  if (!(spec.y_min < spec.y_max)) {
    spec.y_min = -R;
    spec.y_max = R;
  }
  unsigned n_threads = spec.threads != 0 ? spec.threads : std::max(1U, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(spec.ny));

  std::vector<std::vector<FlowSample>> rows(static_cast<std::size_t>(spec.ny));
  auto eval_row = [&](int j) {
    const double y = spec.y_min + (spec.y_max - spec.y_min) * j / (spec.ny - 1);
    auto& row = rows[j];
    for (int i = 0; i < spec.nx; ++i) {
      const double x = spec.x_min + (spec.x_max - spec.x_min) * i / (spec.nx - 1);
      const Complex z(x, y);
      if (!annulus.contains(z)) continue;
      bool excluded = false;
      for (const auto& s : systems) excluded = excluded || near_singularity(s, z, spec.eps);
      if (excluded) continue;
      double psi = 0.0;
      Complex vbar = 0.0;
      for (const auto& s : systems) {
        psi += stream_function(s, z, spec.eps);
        vbar += vortex_velocity(s, z, spec.eps);
      }
      row.push_back({x, y, psi, vbar.real(), -vbar.imag()});
    }
  };
  {
    std::vector<std::jthread> workers;
    workers.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) {
      workers.emplace_back([&, w] {
        for (int j = static_cast<int>(w); j < spec.ny; j += static_cast<int>(n_threads)) eval_row(j);
      });
    }
  }
  FlowGrid grid{spec, {}};
  for (auto& row : rows) grid.samples.insert(grid.samples.end(), row.begin(), row.end());
  return grid;
}

inline FlowGrid field_grid(const ImageSystem& sys, GridSpec spec) {
  return field_grid(std::span<const ImageSystem>(&sys, 1), sys.annulus(), spec);
}

}  // namespace goldcalc
