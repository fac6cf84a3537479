#pragma once

#include <string_view>
#include <variant>

namespace gausspack {

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
  friend bool operator==(const PhysicalConstants&,
                         const PhysicalConstants&) = default;
};

/// Initial Gaussian packet. The momentum-space width alpha is the primary
/// parameter; beta = alpha*hbar and t0 = m*hbar*alpha^2 are derived once at
/// construction and never set independently.
class PacketParams {
 public:
  /// hbar = m = alpha = 1, x0 = p0 = 0.
  PacketParams() = default;

  const PhysicalConstants& constants() const noexcept { return constants_; }
  double hbar() const noexcept { return constants_.hbar; }
  double mass() const noexcept { return constants_.mass; }
  double alpha() const noexcept { return alpha_; }
  double x0() const noexcept { return x0_; }
  double p0() const noexcept { return p0_; }
  double beta() const noexcept { return beta_; }
  double t0() const noexcept { return t0_; }

  /// Initial momentum spread 1/(alpha*sqrt 2).
  double dp0() const noexcept;
  /// Initial position spread beta/sqrt 2.
  double dx0() const noexcept;

  /// Same packet with a different mean momentum.
  PacketParams with_p0(double p0) const;

  friend PacketParams make_params(double hbar, double mass, double alpha,
                                  double x0, double p0);

  friend bool operator==(const PacketParams&, const PacketParams&) = default;

 private:
  PhysicalConstants constants_;
  double alpha_ = 1.0;
  double x0_ = 0.0;
  double p0_ = 0.0;
  double beta_ = 1.0;
  double t0_ = 1.0;
};

/// Throws DomainError unless hbar, mass and alpha are strictly positive
/// (and all inputs finite).
PacketParams make_params(double hbar, double mass, double alpha, double x0,
                         double p0);

/// Builds parameters from the position-space width; inverts beta = alpha*hbar.
PacketParams params_from_beta(double hbar, double mass, double beta, double x0,
                              double p0);

struct FreeParticle {
  friend bool operator==(const FreeParticle&, const FreeParticle&) = default;
};

/// V(x) = -F x.
struct UniformAcceleration {
  double force = 0.0;
  friend bool operator==(const UniformAcceleration&,
                         const UniformAcceleration&) = default;
};

/// V(x) = m omega^2 x^2 / 2.
struct HarmonicOscillator {
  double omega = 1.0;
  friend bool operator==(const HarmonicOscillator&,
                         const HarmonicOscillator&) = default;
};

/// V(x) = -m omega_tilde^2 x^2 / 2.
struct InvertedOscillator {
  double omega_tilde = 1.0;
  friend bool operator==(const InvertedOscillator&,
                         const InvertedOscillator&) = default;
};

using SystemSpec = std::variant<FreeParticle, UniformAcceleration,
                                HarmonicOscillator, InvertedOscillator>;

SystemSpec free_particle();
SystemSpec uniform_acceleration(double force);
SystemSpec harmonic_oscillator(double omega);
SystemSpec inverted_oscillator(double omega_tilde);

/// Throws DomainError if the system's frequency parameter is invalid.
void validate(const SystemSpec& system);

/// Short identifier used in files and reports: free, accel, sho, inverted.
std::string_view system_name(const SystemSpec& system);

/// Potential energy V(x) of the system.
double potential(const SystemSpec& system, const PhysicalConstants& constants,
                 double x);

struct OscillatorDerived {
  double beta0 = 1.0;  ///< sqrt(hbar / m omega)
  double tau = 1.0;    ///< 2 pi / omega
};

OscillatorDerived oscillator_derived(const PhysicalConstants& constants,
                                     double omega);

}  // namespace gausspack
