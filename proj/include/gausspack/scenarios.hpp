#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gausspack/analytic.hpp"

namespace gausspack {

/// Version written to, and required in, scenario documents.
inline constexpr int kScenarioFormatVersion = 1;

enum class OutputKind { Psi, Prob, KineticDensity, Scaled, Fractions };

std::string_view output_name(OutputKind kind);

/// Spatial window. When `relative` is set the bounds are in units of
/// Delta x_t around <x>_t and are resolved separately at every time.
struct WindowSpec {
  double lo = -8.0;
  double hi = 8.0;
  bool relative = true;
  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

/// Fully resolved scenario: times are absolute, parameters are explicit.
struct Scenario {
  std::string name;
  SystemSpec system = FreeParticle{};
  PacketParams params;
  std::vector<double> times;
  WindowSpec window;
  std::vector<OutputKind> outputs{OutputKind::Psi, OutputKind::Prob};
  long grid_n = 801;
  /// Plot against x - <x>_t instead of x.
  bool recenter = false;

  bool wants(OutputKind kind) const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Absolute window at time t.
Window resolve_window(const Scenario& scenario, double t);

/// Parses a JSON scenario document. Relative units (t0, tau, beta/beta0,
/// p0/Delta p0) are resolved here. In strict mode unknown keys are errors.
/// Throws ParseError naming the field (and line, for syntax errors).
Scenario load_scenario(std::string_view text, bool lax = false);

/// Canonical document with every value absolute; load_scenario inverts it.
std::string serialize(const Scenario& scenario);

/// Named figure presets. All use hbar = m = 1, alpha = 1 (or omega = 1 for
/// the oscillator figures), x0 = 0.
///   fig1         free, p0 = 2, t = 0..4 t0
///   fig2-top     free, p0 = 0,         t = 10 t0
///   fig2-middle  free, p0 = Delta p0,  t = 10 t0
///   fig2-bottom  free, p0 = 4 Delta p0, t = 10 t0
///   fig3         sho, beta = beta0/2, p0 extremal, t in {0, tau/16, .., tau/4}
///   fig4         sho, beta = 2 beta0, p0 extremal, same times
Scenario preset(std::string_view name);
std::vector<std::string> preset_names();

/// One-parameter family of scenarios.
struct Sweep {
  Scenario base;
  std::string axis;  ///< p0, alpha, beta, omega, F, omega_tilde or t
  std::vector<double> values;
};

/// Throws ArgumentError if the axis does not apply to the base system.
std::vector<Scenario> expand(const Sweep& sweep);

/// {"version": 1, "base": {...scenario...}, "axis": ..., "values": [...]}
Sweep load_sweep(std::string_view text, bool lax = false);

}  // namespace gausspack
