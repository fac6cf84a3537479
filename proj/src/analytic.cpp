#include "gausspack/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gausspack/detail/overloaded.hpp"
#include "gausspack/errors.hpp"
#include "gausspack/parallel.hpp"

namespace gausspack {

namespace {

using detail::overloaded;
using std::numbers::pi;

constexpr cplx I{0.0, 1.0};

double sqrt_pi() { return std::sqrt(pi); }

// Free particle and constant force share the spreading law of the free
// packet; only the center, the momentum and the phase feel the force.
PacketState ballistic_state(const PacketParams& p, double force, double t) {
  const double m = p.mass();
  const double hbar = p.hbar();
  const double beta = p.beta();
  const double x0 = p.x0();
  const double p0 = p.p0();
  const double s = t / p.t0();
  const double spread2 = 1.0 + s * s;

  PacketState st;
  st.t = t;
  st.center = x0 + p0 * t / m + force * t * t / (2.0 * m);
  st.width = beta * std::sqrt(spread2);
  st.quad_coeff = cplx(1.0, -s) / (2.0 * beta * beta * spread2);
  st.lin_phase = (p0 + force * t) / hbar;
  st.const_phase = force * t * (x0 - force * t * t / (6.0 * m)) / hbar -
                   (p0 + force * t) * (x0 + p0 * t / (2.0 * m)) / hbar -
                   0.5 * std::atan(s);
  st.norm = 1.0 / std::sqrt(sqrt_pi() * st.width);
  return st;
}

void require_origin(const PacketParams& p, const char* system) {
  if (p.x0() != 0.0) {
    throw DomainError(std::string(system) +
                      " packets must start centered at x0 = 0");
  }
}

// Propagator solution with the two exponents merged into one complex
// quadratic. With c = cos wt, s = sin wt, g = hbar/(m w beta) and
// A = beta c + i g s:
//   quad  = 1/(2|A|^2) + i (m w / 2 hbar) c s (beta^2 - g^2)/|A|^2
//   phase = -p0^2 c s /(2 hbar m w) - arg(A)/2
// Every 1/sin(wt) cancels, and s/w is kept together so that w -> 0 is
// regular as well.
PacketState oscillator_state(const PacketParams& p, double omega, double t) {
  require_origin(p, "oscillator");
  const double m = p.mass();
  const double hbar = p.hbar();
  const double beta = p.beta();
  const double p0 = p.p0();
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t);
  const double s_over_w = s / omega;
  const double gs = hbar / (m * beta) * s_over_w;  // g * s
  const double width2 = beta * beta * c * c + gs * gs;

  double arg_a = std::atan2(gs, beta * c);
  // Continuous branch of sqrt(A): A winds once around the origin per period.
  arg_a += 2.0 * pi * std::round((omega * t - arg_a) / (2.0 * pi));

  PacketState st;
  st.t = t;
  st.center = p0 * s_over_w / m;
  st.width = std::sqrt(width2);
  const double imag = c *
                      (m * omega * beta * beta / (2.0 * hbar) * s -
                       hbar / (2.0 * m * beta * beta) * s_over_w) /
                      width2;
  st.quad_coeff = cplx(0.5 / width2, imag);
  st.lin_phase = p0 * c / hbar;
  st.const_phase = -p0 * p0 * c * s_over_w / (2.0 * hbar * m) - 0.5 * arg_a;
  st.norm = 1.0 / std::sqrt(sqrt_pi() * st.width);
  return st;
}

// Same construction under w -> i w~: B = beta cosh + i g~ sinh. The common
// factor cosh(w~ t) is pulled out of every product so nothing squares a
// number near the overflow threshold before it is needed.
PacketState inverted_state(const PacketParams& p, double omega_tilde,
                           double t) {
  require_origin(p, "inverted oscillator");
  if (!(std::abs(omega_tilde * t) <= kInvertedGrowthLimit)) {
    throw RangeError("inverted oscillator: |omega_tilde * t| exceeds " +
                     std::to_string(kInvertedGrowthLimit));
  }
  const double m = p.mass();
  const double hbar = p.hbar();
  const double beta = p.beta();
  const double p0 = p.p0();
  const double ch = std::cosh(omega_tilde * t);
  const double sh = std::sinh(omega_tilde * t);
  const double th = std::tanh(omega_tilde * t);
  const double sh_over_w = sh / omega_tilde;
  const double g = hbar / (m * omega_tilde * beta);
  const double g_th = g * th;
  const double reduced2 = beta * beta + g_th * g_th;  // |B|^2 / cosh^2

  PacketState st;
  st.t = t;
  st.center = p0 * sh_over_w / m;
  st.width = ch * std::sqrt(reduced2);
  const double imag =
      -(m * omega_tilde / (2.0 * hbar)) * th * (beta * beta + g * g) / reduced2;
  st.quad_coeff = cplx(0.5 / (st.width * st.width), imag);
  st.lin_phase = p0 * ch / hbar;
  st.const_phase = -p0 * p0 * ch * sh_over_w / (2.0 * hbar * m) -
                   0.5 * std::atan2(g_th, beta);
  st.norm = 1.0 / std::sqrt(sqrt_pi() * st.width);
  return st;
}

}  // namespace

double PacketState::spread() const { return width / std::numbers::sqrt2; }

cplx PacketState::psi(double x) const {
  const double u = x - center;
  const cplx exponent = -quad_coeff * u * u +
                        I * (lin_phase * u + const_phase + lin_phase * center);
  return norm * std::exp(exponent);
}

cplx PacketState::dpsi_dx(double x) const {
  const double u = x - center;
  return (I * lin_phase - 2.0 * quad_coeff * u) * psi(x);
}

double PacketState::prob(double x) const {
  const double u = x - center;
  return norm * norm * std::exp(-2.0 * quad_coeff.real() * u * u);
}

PacketState state_at(const SystemSpec& system, const PacketParams& params,
                     double t) {
  if (!std::isfinite(t)) throw ArgumentError("time must be finite");
  validate(system);
  return std::visit(
      overloaded{
          [&](const FreeParticle&) { return ballistic_state(params, 0.0, t); },
          [&](const UniformAcceleration& s) {
            return ballistic_state(params, s.force, t);
          },
          [&](const HarmonicOscillator& s) {
            return oscillator_state(params, s.omega, t);
          },
          [&](const InvertedOscillator& s) {
            return inverted_state(params, s.omega_tilde, t);
          },
      },
      system);
}

cplx eval_psi(const SystemSpec& system, const PacketParams& params, double x,
              double t) {
  return state_at(system, params, t).psi(x);
}

double probability_density(const SystemSpec& system,
                           const PacketParams& params, double x, double t) {
  return std::norm(eval_psi(system, params, x, t));
}

Moments moments_at(const SystemSpec& system, const PacketParams& params,
                   double t) {
  const PacketState st = state_at(system, params, t);
  const double m = params.mass();
  const double hbar = params.hbar();
  const double beta = params.beta();
  const double p0 = params.p0();
  // <p^2>_0 - p0^2 for the initial Gaussian.
  const double var_p0 = hbar * hbar / (2.0 * beta * beta);

  Moments mo;
  mo.mean_x = st.center;
  mo.var_x = st.width * st.width / 2.0;
  const double x2 = mo.mean_x * mo.mean_x + mo.var_x;

  std::visit(
      overloaded{
          [&](const FreeParticle&) {
            mo.mean_p = p0;
            mo.var_p = var_p0;
            mo.potential = 0.0;
            mo.energy = (p0 * p0 + var_p0) / (2.0 * m);
          },
          [&](const UniformAcceleration& s) {
            mo.mean_p = p0 + s.force * t;
            mo.var_p = var_p0;
            mo.potential = -s.force * mo.mean_x;
            mo.energy = (p0 * p0 + var_p0) / (2.0 * m) - s.force * params.x0();
          },
          [&](const HarmonicOscillator& s) {
            const double w = s.omega;
            const double c = std::cos(w * t);
            const double sn = std::sin(w * t);
            const double mwb = m * w * beta;
            mo.mean_p = p0 * c;
            mo.var_p = var_p0 * c * c + 0.5 * mwb * mwb * sn * sn;
            mo.potential = 0.5 * m * w * w * x2;
            mo.energy = (p0 * p0 + var_p0) / (2.0 * m) + m * w * w * beta * beta / 4.0;
          },
          [&](const InvertedOscillator& s) {
            const double w = s.omega_tilde;
            const double ch = std::cosh(w * t);
            const double sh = std::sinh(w * t);
            const double mwb = m * w * beta;
            mo.mean_p = p0 * ch;
            mo.var_p = var_p0 * ch * ch + 0.5 * mwb * mwb * sh * sh;
            mo.potential = -0.5 * m * w * w * x2;
            mo.energy = (p0 * p0 + var_p0) / (2.0 * m) - m * w * w * beta * beta / 4.0;
          },
      },
      system);
  mo.kinetic = (mo.mean_p * mo.mean_p + mo.var_p) / (2.0 * m);
  return mo;
}

Eigen::ArrayXd uniform_grid(const Window& window, Eigen::Index n) {
  if (!(window.xmin < window.xmax) || !std::isfinite(window.xmin) ||
      !std::isfinite(window.xmax)) {
    throw ArgumentError("window requires finite xmin < xmax");
  }
  if (n < 2) throw ArgumentError("grid needs at least 2 points");
  Eigen::ArrayXd xs(n);
  const double dx = (window.xmax - window.xmin) / static_cast<double>(n - 1);
  for (Eigen::Index i = 0; i < n; ++i) xs[i] = window.xmin + dx * static_cast<double>(i);
  xs[n - 1] = window.xmax;
  return xs;
}

GridResult sample_grid(const SystemSpec& system, const PacketParams& params,
                       double t, const Window& window, Eigen::Index n) {
  GridResult grid;
  grid.xs = uniform_grid(window, n);
  const PacketState st = state_at(system, params, t);
  grid.t = t;
  grid.psi.resize(n);
  grid.prob.resize(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const auto k = static_cast<Eigen::Index>(i);
    grid.psi[k] = st.psi(grid.xs[k]);
    grid.prob[k] = std::norm(grid.psi[k]);
  });
  return grid;
}

}  // namespace gausspack
