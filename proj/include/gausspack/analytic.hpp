#pragma once

#include <Eigen/Core>
#include <complex>

#include "gausspack/quantities.hpp"

namespace gausspack {

using cplx = std::complex<double>;

/// Largest |omega_tilde * t| accepted for the inverted oscillator. Beyond it
/// |B(t)|^2 ~ e^{2 omega_tilde t} leaves double range.
inline constexpr double kInvertedGrowthLimit = 300.0;

/// Time-dependent Gaussian in regularized form:
///
///   psi(x,t) = norm * exp(-quad_coeff (x-center)^2 + i lin_phase x
///                         + i const_phase)
///
/// Every closed-form solution handled by the library is written this way,
/// so no evaluation path ever divides by sin(omega t) or by the force.
struct PacketState {
  double t = 0.0;
  double center = 0.0;  ///< <x>_t
  double width = 1.0;   ///< envelope width: beta_t, |A(t)| or |B(t)|
  cplx quad_coeff{0.5, 0.0};
  double lin_phase = 0.0;  ///< <p>_t / hbar
  double const_phase = 0.0;
  double norm = 1.0;

  /// Delta x_t = width / sqrt 2.
  double spread() const;

  cplx psi(double x) const;
  /// Closed-form d psi / dx = (i lin_phase - 2 quad_coeff (x-center)) psi.
  cplx dpsi_dx(double x) const;
  double prob(double x) const;
};

PacketState state_at(const SystemSpec& system, const PacketParams& params,
                     double t);

cplx eval_psi(const SystemSpec& system, const PacketParams& params, double x,
              double t);

double probability_density(const SystemSpec& system,
                           const PacketParams& params, double x, double t);

/// Closed-form expectation values at time t. `energy` is the conserved
/// <H> evaluated from the initial state.
struct Moments {
  double mean_x = 0.0;
  double var_x = 0.0;
  double mean_p = 0.0;
  double var_p = 0.0;
  double kinetic = 0.0;
  double potential = 0.0;
  double energy = 0.0;
};

Moments moments_at(const SystemSpec& system, const PacketParams& params,
                   double t);

struct Window {
  double xmin = -1.0;
  double xmax = 1.0;
};

struct GridResult {
  double t = 0.0;
  Eigen::ArrayXd xs;
  Eigen::ArrayXcd psi;
  Eigen::ArrayXd prob;
};

/// Uniform grid of n points including both window endpoints.
Eigen::ArrayXd uniform_grid(const Window& window, Eigen::Index n);

GridResult sample_grid(const SystemSpec& system, const PacketParams& params,
                       double t, const Window& window, Eigen::Index n);

}  // namespace gausspack
