#include "gausspack/quantities.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gausspack/detail/overloaded.hpp"
#include "gausspack/errors.hpp"

namespace gausspack {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be a positive finite number");
  }
}

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

using detail::overloaded;

}  // namespace

double PacketParams::dp0() const noexcept {
  return 1.0 / (alpha_ * std::numbers::sqrt2);
}

double PacketParams::dx0() const noexcept { return beta_ / std::numbers::sqrt2; }

PacketParams PacketParams::with_p0(double p0) const {
  return make_params(constants_.hbar, constants_.mass, alpha_, x0_, p0);
}

PacketParams make_params(double hbar, double mass, double alpha, double x0,
                         double p0) {
  require_positive(hbar, "hbar");
  require_positive(mass, "mass");
  require_positive(alpha, "alpha");
  require_finite(x0, "x0");
  require_finite(p0, "p0");

  PacketParams p;
  p.constants_ = {hbar, mass};
  p.alpha_ = alpha;
  p.x0_ = x0;
  p.p0_ = p0;
  p.beta_ = alpha * hbar;
  p.t0_ = mass * hbar * alpha * alpha;
  return p;
}

PacketParams params_from_beta(double hbar, double mass, double beta, double x0,
                              double p0) {
  require_positive(hbar, "hbar");
  require_positive(beta, "beta");
  return make_params(hbar, mass, beta / hbar, x0, p0);
}

SystemSpec free_particle() { return FreeParticle{}; }

SystemSpec uniform_acceleration(double force) {
  require_finite(force, "force");
  return UniformAcceleration{force};
}

SystemSpec harmonic_oscillator(double omega) {
  require_positive(omega, "omega");
  return HarmonicOscillator{omega};
}

SystemSpec inverted_oscillator(double omega_tilde) {
  require_positive(omega_tilde, "omega_tilde");
  return InvertedOscillator{omega_tilde};
}

void validate(const SystemSpec& system) {
  std::visit(overloaded{
                 [](const FreeParticle&) {},
                 [](const UniformAcceleration& s) {
                   require_finite(s.force, "force");
                 },
                 [](const HarmonicOscillator& s) {
                   require_positive(s.omega, "omega");
                 },
                 [](const InvertedOscillator& s) {
                   require_positive(s.omega_tilde, "omega_tilde");
                 },
             },
             system);
}

std::string_view system_name(const SystemSpec& system) {
  return std::visit(
      overloaded{
          [](const FreeParticle&) { return std::string_view("free"); },
          [](const UniformAcceleration&) { return std::string_view("accel"); },
          [](const HarmonicOscillator&) { return std::string_view("sho"); },
          [](const InvertedOscillator&) {
            return std::string_view("inverted");
          },
      },
      system);
}

double potential(const SystemSpec& system, const PhysicalConstants& constants,
                 double x) {
  const double m = constants.mass;
  return std::visit(
      overloaded{
          [](const FreeParticle&) { return 0.0; },
          [x](const UniformAcceleration& s) { return -s.force * x; },
          [m, x](const HarmonicOscillator& s) {
            return 0.5 * m * s.omega * s.omega * x * x;
          },
          [m, x](const InvertedOscillator& s) {
            return -0.5 * m * s.omega_tilde * s.omega_tilde * x * x;
          },
      },
      system);
}

OscillatorDerived oscillator_derived(const PhysicalConstants& constants,
                                     double omega) {
  require_positive(omega, "omega");
  require_positive(constants.hbar, "hbar");
  require_positive(constants.mass, "mass");
  return {std::sqrt(constants.hbar / (constants.mass * omega)),
          2.0 * std::numbers::pi / omega};
}

}  // namespace gausspack
