#pragma once

#include <Eigen/Core>
#include <functional>
#include <utility>

#include "gausspack/analytic.hpp"
#include "gausspack/kedensity.hpp"

namespace gausspack::oracle {

// ---------------------------------------------------------------------------
// Adaptive quadrature

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Integration window is <x>_t +- window_sigmas * Delta x_t.
  double window_sigmas = 12.0;
  int max_subdivisions = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
  int subdivisions = 0;
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [lo, hi]: the interval
/// with the largest error estimate is bisected until the total error meets
/// max(abs_tol, rel_tol*|value|). Throws AccuracyError (with the best
/// estimate) if max_subdivisions is exhausted.
QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           const QuadratureSpec& spec = {});

/// [center - w, center + w] with w = window_sigmas * spread.
Window quadrature_window(const PacketState& state, const QuadratureSpec& spec);

/// Integral of f over the packet window, split exactly at <x>_t so the split
/// point is a node. Returns (left, right).
std::pair<QuadratureResult, QuadratureResult> split_integrals(
    const RealFunction& f, const PacketState& state, const QuadratureSpec& spec);

// ---------------------------------------------------------------------------
// Finite differences (4th-order central stencils)

using PsiSampler = std::function<cplx(double x, double t)>;

cplx fd_derivative(const PsiSampler& psi, double x, double t, double h);
cplx fd_second_derivative(const PsiSampler& psi, double x, double t, double h);
cplx fd_time_derivative(const PsiSampler& psi, double x, double t, double h);

/// Shortest length over which psi varies inside the quadrature window: the
/// smaller of Delta x_t and the inverse of the largest local wavenumber.
double local_length_scale(const PacketState& state, const QuadratureSpec& spec);

/// |(i hbar d/dt - H) psi| at (x, t) from finite differences in x and t.
double schrodinger_residual(const SystemSpec& system, const PacketParams& params,
                            double x, double t, double hx, double ht);

// ---------------------------------------------------------------------------
// Oracle estimates of closed-form quantities

/// Integral of |psi|^2 over the quadrature window.
QuadratureResult norm_integral(const SystemSpec& system,
                               const PacketParams& params, double t,
                               const QuadratureSpec& spec = {});

/// -(hbar^2/2m) Re int psi* psi'' dx with psi'' from finite differences.
/// Like every finite-difference integrand here, the relative tolerance is
/// floored at 1e-9.
QuadratureResult kinetic_ibp(const SystemSpec& system, const PacketParams& params,
                             double t, const QuadratureSpec& spec = {});

/// Integral of the closed-form kinetic density over the window.
QuadratureResult kinetic_density_integral(const SystemSpec& system,
                                          const PacketParams& params, double t,
                                          const QuadratureSpec& spec = {});

/// T+- by quadrature of (hbar^2/2m)|psi'|^2, psi' from finite differences,
/// over half-windows split at <x>_t.
EnergySplit half_energies_quadrature(const SystemSpec& system,
                                     const PacketParams& params, double t,
                                     const QuadratureSpec& spec = {});

// ---------------------------------------------------------------------------
// Momentum space

struct MomentumGrid {
  Eigen::ArrayXd ps;    ///< ascending momenta, spacing 2 pi hbar / (N dx)
  Eigen::ArrayXcd phi;  ///< phi(p) with the 1/sqrt(2 pi hbar) convention
  double xmin = 0.0;    ///< origin of the position grid it came from
  double dx = 0.0;
};

/// Discrete approximation of phi(p) = (2 pi hbar)^{-1/2} int e^{-ipx/hbar}
/// psi(x) dx on a uniform periodic grid. Throws ResolutionError when
/// |phi| at the band edges exceeds 1e-12 of its peak.
MomentumGrid momentum_transform(const Eigen::ArrayXd& xs,
                                const Eigen::ArrayXcd& psi, double hbar);

/// Inverse of momentum_transform, back onto the original position grid.
Eigen::ArrayXcd position_transform(const MomentumGrid& grid, double hbar);

// ---------------------------------------------------------------------------
// Split-step propagation

struct PropagatorSpec {
  Eigen::Index n_grid = 4096;
  Window domain{-40.0, 40.0};
  double dt = 1e-3;
  SystemSpec potential = FreeParticle{};
  PhysicalConstants constants{};
};

/// Periodic grid xmin + j dx, j < n_grid, dx = (xmax - xmin) / n_grid.
Eigen::ArrayXd propagator_grid(const PropagatorSpec& spec);

struct PropagationResult {
  Eigen::ArrayXcd psi;
  double t = 0.0;
  long steps = 0;
};

/// Strang splitting: half potential kick, exact kinetic drift in momentum
/// space, half potential kick. The step is shrunk so an integer number of
/// steps lands on t_final. Throws BoundaryError if <x> +- 4 Delta x leaves
/// the domain.
PropagationResult propagate(const Eigen::ArrayXcd& initial,
                            const PropagatorSpec& spec, double t_final);

/// sqrt(sum |a-b|^2 dx).
double l2_distance(const Eigen::ArrayXcd& a, const Eigen::ArrayXcd& b,
                   double dx);
/// L2 distance after removing the best-fit global phase between a and b.
double l2_distance_mod_phase(const Eigen::ArrayXcd& a, const Eigen::ArrayXcd& b,
                             double dx);

}  // namespace gausspack::oracle
