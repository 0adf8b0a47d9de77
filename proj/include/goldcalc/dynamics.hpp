#pragma once

// Point vortices in the golden annulus 1 < |z| < sqrt(phi). Every vortex z_j
// carries the ladder z_j phi^n and its mirror ladder phi^{n+1} / conj(z_j)
// (ImagePairing::outer), which is the convention of the e_phi / Ln_phi closed
// forms used for the rotation law, the Hamiltonian and the Green function.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goldcalc/error.hpp"
#include "goldcalc/functions.hpp"
#include "goldcalc/hydro.hpp"

namespace goldcalc {

/// Minimum allowed separation between two vortices.
inline constexpr double kCollisionDistance = 1e-6;

struct VortexState {
  std::vector<Complex> positions;
  std::vector<double> circulations;  // Gamma_l
  double time = 0.0;

  std::size_t size() const { return positions.size(); }
};

enum class Scheme { rk4 };

struct IntegratorConfig {
  double dt = 1e-3;
  long steps = 1000;
  Scheme scheme = Scheme::rk4;
  int image_truncation = 100;
  int level = 1;           // annulus 1 < |z| < phi^{level/2}
  long record_every = 1;   // keep every n-th state (initial and final always kept)

  void validate() const {
    if (!(dt > 0.0)) throw DomainError("IntegratorConfig: dt must be positive");
    if (steps < 1) throw DomainError("IntegratorConfig: steps must be positive");
    if (image_truncation < 1) throw DomainError("IntegratorConfig: image_truncation must be positive");
    if (level < 1) throw DomainError("IntegratorConfig: level must be positive");
    if (record_every < 1) throw DomainError("IntegratorConfig: record_every must be positive");
  }
};

namespace detail {

inline void check_state(const VortexState& s, int level) {
  if (s.positions.size() != s.circulations.size()) {
    throw DomainError("VortexState: positions and circulations differ in length");
  }
  const AnnulusSpec annulus{level, 0};
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!annulus.strictly_contains(s.positions[i])) throw DomainError("VortexState: vortex outside the open annulus");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(s.positions[i] - s.positions[j]) < kCollisionDistance) {
        throw DomainError("VortexState: coincident vortices");
      }
    }
  }
}

inline std::vector<Complex> rhs_unchecked(std::span<const Complex> z, std::span<const double> gamma, int trunc,
                                          int level) {
  const double q = std::pow(kPhi, level);
  std::vector<double> qpow(static_cast<std::size_t>(2 * trunc + 2));
  for (int n = -trunc; n <= trunc + 1; ++n) qpow[n + trunc] = std::pow(q, n);
  std::vector<Complex> out(z.size());
  for (std::size_t l = 0; l < z.size(); ++l) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (gamma[j] == 0.0) continue;
      const Complex mirror = 1.0 / std::conj(z[j]);
      Complex ladder = 0.0;
      for (int n = -trunc; n <= trunc; ++n) {
        if (!(j == l && n == 0)) ladder += 1.0 / (z[l] - z[j] * qpow[n + trunc]);
        ladder -= 1.0 / (z[l] - mirror * qpow[n + 1 + trunc]);
      }
      acc += gamma[j] * ladder;
    }
    out[l] = std::conj(acc / two_pi_i());
  }
  return out;
}

// Re log of the e_phi ratio in the image part of H and G.
inline double log_abs_image_ratio(Complex z, Complex w, const SeriesTruncation& t) {
  const Complex cw = std::conj(w);
  return (log_e_phi_product(-kPhi * z / w, t) + log_e_phi_product(-kPhi * w / z, t) -
          log_e_phi_product(-kPhi * z * cw, t) - log_e_phi_product(-kPhi * kPhi / (z * cw), t))
      .real();
}

inline void check_golden_radius(double r, const char* where) {
  if (!(r > 1.0 && r < std::sqrt(kPhi))) throw DomainError(std::string(where) + ": r must lie in (1, sqrt(phi))");
}

}  // namespace detail

struct IntegrationEvent {
  enum class Kind { escape, collision };
  Kind kind;
  long step;
  std::size_t vortex;
  std::string message;
};

namespace detail {

// First vortex outside the open annulus, else first pair closer than kCollisionDistance.
inline std::optional<IntegrationEvent> first_event(std::span<const Complex> z, const AnnulusSpec& annulus, long step) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!annulus.strictly_contains(z[i])) {
      return IntegrationEvent{IntegrationEvent::Kind::escape, step, i,
                              "vortex " + std::to_string(i) + " left the annulus at step " + std::to_string(step)};
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(z[i] - z[j]) < kCollisionDistance) {
        return IntegrationEvent{IntegrationEvent::Kind::collision, step, i,
                                "vortices " + std::to_string(j) + " and " + std::to_string(i) +
                                    " collided at step " + std::to_string(step)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Angular velocity of a lone vortex at radius r:
/// omega = (phi kappa / r^2) [Ln_phi(1 - r^2) - Ln_phi(1 - phi / r^2)].
inline double single_vortex_omega(double r, double kappa, const SeriesTruncation& t = {}) {
  detail::check_golden_radius(r, "single_vortex_omega");
  if (kappa == 0.0) return 0.0;
  const double r2 = r * r;
  const double bracket = (ln_phi_one_minus(r2, 1, t) - ln_phi_one_minus(kPhi / r2, 1, t)).real();
  return kPhi * kappa / r2 * bracket;
}

/// dz_l/dt for every vortex: direct interactions plus both image ladders, |n| <= trunc.
inline std::vector<Complex> n_vortex_rhs(const VortexState& state, int trunc = 100, int level = 1) {
  if (trunc < 0) throw DomainError("n_vortex_rhs: trunc must be non-negative");
  detail::check_state(state, level);
  return detail::rhs_unchecked(state.positions, state.circulations, trunc, level);
}

struct IntegrationResult {
  std::vector<VortexState> trajectory;
  std::vector<long> steps;  // step index of each recorded state
  std::optional<IntegrationEvent> event;
};

/// Fixed-step RK4. Stops at the first step where a vortex leaves the open
/// annulus or two vortices come within kCollisionDistance.
inline IntegrationResult integrate(const VortexState& initial, const IntegratorConfig& cfg) {
  cfg.validate();
  detail::check_state(initial, cfg.level);
  const AnnulusSpec annulus{cfg.level, 0};
  const int N = cfg.image_truncation;
  const std::size_t m = initial.size();
  auto f = [&](const std::vector<Complex>& z) { return detail::rhs_unchecked(z, initial.circulations, N, cfg.level); };

  IntegrationResult result;
  result.trajectory.push_back(initial);
  result.steps.push_back(0);
  std::vector<Complex> z = initial.positions;
  std::vector<Complex> tmp(m);
  const double h = cfg.dt;
  for (long step = 1; step <= cfg.steps; ++step) {
    const auto k1 = f(z);
    for (std::size_t i = 0; i < m; ++i) tmp[i] = z[i] + 0.5 * h * k1[i];
    const auto k2 = f(tmp);
    for (std::size_t i = 0; i < m; ++i) tmp[i] = z[i] + 0.5 * h * k2[i];
    const auto k3 = f(tmp);
    for (std::size_t i = 0; i < m; ++i) tmp[i] = z[i] + h * k3[i];
    const auto k4 = f(tmp);
    for (std::size_t i = 0; i < m; ++i) z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    const double t = initial.time + h * static_cast<double>(step);
    auto event = detail::first_event(z, annulus, step);
    if (event || step % cfg.record_every == 0 || step == cfg.steps) {
      result.trajectory.push_back(VortexState{z, initial.circulations, t});
      result.steps.push_back(step);
    }
    if (event) {
      result.event = std::move(event);
      break;
    }
  }
  return result;
}

/// H = -1/(4 pi) sum_{i != j} G_i G_j ln|z_i - z_j|
///     -1/(4 pi) sum_{i,j} G_i G_j ln| e(-phi z_i/z_j) e(-phi z_j/z_i) / (e(-phi z_i conj z_j) e(-phi^2/(z_i conj z_j))) |
inline double hamiltonian(const VortexState& state, const SeriesTruncation& t = {}) {
  detail::check_state(state, 1);
  const double c = 1.0 / (4.0 * std::numbers::pi);
  double h = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (std::size_t j = 0; j < state.size(); ++j) {
      const double gg = state.circulations[i] * state.circulations[j];
      if (gg == 0.0) continue;
      if (i != j) h -= c * gg * std::log(std::abs(state.positions[i] - state.positions[j]));
      h -= c * gg * detail::log_abs_image_ratio(state.positions[i], state.positions[j], t);
    }
  }
  return h;
}

/// Green function of the annulus with the image ladders in product form,
/// normalized to vanish on the outer circle.
inline double green_function(Complex z, Complex zl, const SeriesTruncation& t = {}) {
  const AnnulusSpec golden{1, 0};
  if (!golden.contains(z, 1e-12) || !golden.contains(zl, 1e-12)) {
    throw DomainError("green_function: points must lie in the closed annulus");
  }
  if (std::abs(z - zl) < kSingularityEps) throw SingularityError("green_function: z coincides with z_l");
  const double c = 1.0 / (2.0 * std::numbers::pi);
  return -c * std::log(std::abs(z - zl)) - c * detail::log_abs_image_ratio(z, zl, t) +
         std::log(kPhi) / (4.0 * std::numbers::pi);
}

/// Rotation rate of N identical vortices Gamma equally spaced on |z| = r.
inline double ring_frequency(int N, double r, double gamma, const SeriesTruncation& t = {}) {
  if (N < 1) throw DomainError("ring_frequency: N must be positive");
  detail::check_golden_radius(r, "ring_frequency");
  const double r2 = r * r;
  Complex sum = 0.0;
  for (int j = 1; j <= N; ++j) {
    const double th = 2.0 * std::numbers::pi * j / N;
    sum += ln_phi_one_minus(kPhi / r2 * std::polar(1.0, th), 1, t) - ln_phi_one_minus(r2 * std::polar(1.0, -th), 1, t);
  }
  return gamma / (2.0 * std::numbers::pi * r2) * (0.5 * (N - 1) + kPhi * sum.real());
}

/// Bohr-Sommerfeld level E_n = Gamma^2/(4 pi) ln| e_phi(-phi (n + 1/2)) e_phi(-phi^2 / (n + 1/2)) |.
inline double semiclassical_energy(int n, double gamma, const SeriesTruncation& t = {}) {
  if (n < 0) throw DomainError("semiclassical_energy: n must be non-negative");
  if (gamma == 0.0) return 0.0;
  const double h = n + 0.5;
  const double lg = (log_e_phi_product(-kPhi * h, t) + log_e_phi_product(-kPhi * kPhi / h, t)).real();
  return gamma * gamma / (4.0 * std::numbers::pi) * lg;
}

}  // namespace goldcalc
