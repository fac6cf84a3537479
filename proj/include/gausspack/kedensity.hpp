#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gausspack/analytic.hpp"

namespace gausspack {

/// Kinetic energy on either side of the instantaneous center <x>_t.
struct EnergySplit {
  double t = 0.0;
  double total = 0.0;
  double plus = 0.0;   ///< x > <x>_t
  double minus = 0.0;  ///< x < <x>_t
  double r_plus = 0.5;
  double r_minus = 0.5;
};

/// (hbar^2/2m) |d psi/dx|^2 from the closed-form derivative.
double kinetic_density(const SystemSpec& system, const PacketParams& params,
                       double x, double t);
double kinetic_density(const PacketState& state, const PhysicalConstants& k,
                       double x);

/// Closed-form <p^2>_t / 2m.
double total_kinetic(const SystemSpec& system, const PacketParams& params,
                     double t);
double total_kinetic(const PacketState& state, const PhysicalConstants& k);

/// Closed-form half-line kinetic energies split at <x>_t.
EnergySplit half_energies(const SystemSpec& system, const PacketParams& params,
                          double t);
EnergySplit half_energies(const PacketState& state, const PhysicalConstants& k);

std::vector<EnergySplit> fraction_series(const SystemSpec& system,
                                         const PacketParams& params,
                                         std::span<const double> times);

/// Long-time (R+, R-) for the free particle and the inverted oscillator; the
/// t = tau/8 values for the harmonic oscillator. Throws UnsupportedError for
/// uniform acceleration, where the asymmetry has no single limit; use
/// acceleration_peak_times instead.
std::pair<double, double> fraction_limits(const SystemSpec& system,
                                          const PacketParams& params);

/// Initial momentum that maximizes the front/back asymmetry.
double extremal_p0(const SystemSpec& system, const PacketParams& params);

/// Times t >= 0 at which |p0 + F t| = Delta p0, sorted ascending. These are
/// where the accelerating packet's asymmetry peaks once t >> t0.
std::vector<double> acceleration_peak_times(const SystemSpec& system,
                                            const PacketParams& params);

/// S(x,t) = T(x,t) / T(t).
double scaled_density(const SystemSpec& system, const PacketParams& params,
                      double x, double t);

}  // namespace gausspack
