#include "gausspack/kedensity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gausspack/detail/overloaded.hpp"
#include "gausspack/errors.hpp"

namespace gausspack {

namespace {

using detail::overloaded;
using std::numbers::pi;

// Fractions whose sum is exactly one: the larger is 1 - smaller.
void fill_fractions(EnergySplit& split) {
  if (split.plus <= split.minus) {
    split.r_plus = split.plus / split.total;
    split.r_minus = 1.0 - split.r_plus;
  } else {
    split.r_minus = split.minus / split.total;
    split.r_plus = 1.0 - split.r_minus;
  }
}

// 1/2 + (2/sqrt pi) u / (2u^2 + s) * g, the common shape of every closed
// form asymmetry.
double asymmetry(double u, double s, double g) {
  return (2.0 / std::sqrt(pi)) * u / (2.0 * u * u + s) * g;
}

}  // namespace

double kinetic_density(const PacketState& state, const PhysicalConstants& k,
                       double x) {
  const double u = x - state.center;
  const cplx factor = cplx(0.0, state.lin_phase) - 2.0 * state.quad_coeff * u;
  return k.hbar * k.hbar / (2.0 * k.mass) * std::norm(factor) * state.prob(x);
}

double kinetic_density(const SystemSpec& system, const PacketParams& params,
                       double x, double t) {
  return kinetic_density(state_at(system, params, t), params.constants(), x);
}

// With P(u) ~ exp(-2 a u^2), a = Re q:
//   |i k - 2 q u|^2 = k^2 - 4 k Im(q) u + 4 |q|^2 u^2,
//   <u^2> = 1/(4a),  int_0^inf u P du = 1 / (2 sqrt(2 pi a)).
double total_kinetic(const PacketState& state, const PhysicalConstants& k) {
  const double a = state.quad_coeff.real();
  const double kk = state.lin_phase;
  return k.hbar * k.hbar / (2.0 * k.mass) *
         (kk * kk + std::norm(state.quad_coeff) / a);
}

double total_kinetic(const SystemSpec& system, const PacketParams& params,
                     double t) {
  return total_kinetic(state_at(system, params, t), params.constants());
}

EnergySplit half_energies(const PacketState& state, const PhysicalConstants& k) {
  const double a = state.quad_coeff.real();
  const double odd = -k.hbar * k.hbar / (2.0 * k.mass) * 2.0 * state.lin_phase *
                     state.quad_coeff.imag() / std::sqrt(2.0 * pi * a);
  EnergySplit split;
  split.t = state.t;
  split.total = total_kinetic(state, k);
  // Each half is a sum of non-negative terms minus |odd|; clamp the rounding.
  split.plus = std::max(0.0, split.total / 2.0 + odd);
  split.minus = std::max(0.0, split.total / 2.0 - odd);
  fill_fractions(split);
  return split;
}

EnergySplit half_energies(const SystemSpec& system, const PacketParams& params,
                          double t) {
  return half_energies(state_at(system, params, t), params.constants());
}

std::vector<EnergySplit> fraction_series(const SystemSpec& system,
                                         const PacketParams& params,
                                         std::span<const double> times) {
  std::vector<EnergySplit> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(half_energies(system, params, t));
  return out;
}

std::pair<double, double> fraction_limits(const SystemSpec& system,
                                          const PacketParams& params) {
  validate(system);
  const double m = params.mass();
  const double hbar = params.hbar();
  const double beta = params.beta();
  const double p0 = params.p0();

  const double delta = std::visit(
      overloaded{
          [&](const FreeParticle&) {
            const double u = p0 * params.alpha();
            return asymmetry(u, 1.0, 1.0);
          },
          [&](const UniformAcceleration&) -> double {
            throw UnsupportedError(
                "uniform acceleration has no asymptotic fraction; see "
                "acceleration_peak_times");
          },
          [&](const HarmonicOscillator& s) {
            // t = tau/8, where cos = sin = 1/sqrt 2.
            const double b04 = std::pow(hbar / (m * s.omega), 2);
            const double sum = b04 / (beta * beta) + beta * beta;
            const double diff = b04 / (beta * beta) - beta * beta;
            const double u = p0 / (m * s.omega);
            return asymmetry(u, sum, diff / std::sqrt(sum));
          },
          [&](const InvertedOscillator& s) {
            const double b04 = std::pow(hbar / (m * s.omega_tilde), 2);
            const double sum = b04 / (beta * beta) + beta * beta;
            const double u = p0 / (m * s.omega_tilde);
            return asymmetry(u, sum, std::sqrt(sum));
          },
      },
      system);
  return {0.5 + delta, 0.5 - delta};
}

double extremal_p0(const SystemSpec& system, const PacketParams& params) {
  validate(system);
  const double m = params.mass();
  const double hbar = params.hbar();
  const double beta = params.beta();
  auto oscillator = [&](double w) {
    const double bmw = beta * m * w;
    return std::sqrt(bmw * bmw / 2.0 + hbar * hbar / (2.0 * beta * beta));
  };
  return std::visit(
      overloaded{
          [&](const FreeParticle&) { return params.dp0(); },
          [&](const UniformAcceleration&) -> double {
            throw UnsupportedError(
                "uniform acceleration: the extremal condition is on p0 + F t; "
                "see acceleration_peak_times");
          },
          [&](const HarmonicOscillator& s) { return oscillator(s.omega); },
          [&](const InvertedOscillator& s) { return oscillator(s.omega_tilde); },
      },
      system);
}

std::vector<double> acceleration_peak_times(const SystemSpec& system,
                                            const PacketParams& params) {
  const auto* accel = std::get_if<UniformAcceleration>(&system);
  if (accel == nullptr) {
    throw UnsupportedError("peak times are defined for uniform acceleration only");
  }
  std::vector<double> times;
  if (accel->force == 0.0) return times;
  for (double target : {params.dp0(), -params.dp0()}) {
    const double t = (target - params.p0()) / accel->force;
    if (t >= 0.0) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  return times;
}

double scaled_density(const SystemSpec& system, const PacketParams& params,
                      double x, double t) {
  const PacketState st = state_at(system, params, t);
  const double total = total_kinetic(st, params.constants());
  if (!(total > 0.0)) throw DomainError("total kinetic energy is zero");
  return kinetic_density(st, params.constants(), x) / total;
}

}  // namespace gausspack
