#include "gausspack/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gausspack/analytic.hpp"
#include "gausspack/errors.hpp"
#include "gausspack/kedensity.hpp"
#include "gausspack/oracle.hpp"
#include "gausspack/output.hpp"

namespace gausspack {

namespace {

struct Case {
  SystemSpec system;
  PacketParams params;
  double t;
  // split-step setup
  oracle::PropagatorSpec propagator;
  double t_final;
};

std::vector<Case> default_cases() {
  std::vector<Case> cases;
  {
    const PacketParams p = make_params(1.0, 1.0, 0.8, 0.4, 1.3);
    cases.push_back({free_particle(), p, 1.7,
                     {4096, {-30.0, 30.0}, p.t0() / 2000.0, free_particle(), p.constants()},
                     2.0 * p.t0()});
  }
  {
    const SystemSpec s = uniform_acceleration(0.7);
    const PacketParams p = make_params(1.0, 1.0, 1.1, 0.3, -0.5);
    cases.push_back({s, p, 2.2, {4096, {-30.0, 30.0}, 1e-3, s, p.constants()}, 2.2});
  }
  {
    const SystemSpec s = harmonic_oscillator(1.3);
    const PacketParams p = params_from_beta(1.1, 0.9, 0.6, 0.0, 0.9);
    cases.push_back({s, p, 1.1,
                     {4096, {-20.0, 20.0}, 1e-3, s, p.constants()},
                     2.0 * std::numbers::pi / 1.3});
  }
  {
    const SystemSpec s = inverted_oscillator(0.9);
    const PacketParams p = params_from_beta(1.0, 1.0, 0.7, 0.0, 0.6);
    cases.push_back({s, p, 1.4, {4096, {-40.0, 40.0}, 5e-4, s, p.constants()}, 2.0});
  }
  return cases;
}

std::string params_json(const SystemSpec& system, const PacketParams& p, double t) {
  std::ostringstream os;
  os << "{\"hbar\":" << format_number(p.hbar()) << ",\"mass\":" << format_number(p.mass())
     << ",\"alpha\":" << format_number(p.alpha()) << ",\"x0\":" << format_number(p.x0())
     << ",\"p0\":" << format_number(p.p0()) << ",\"t\":" << format_number(t);
  if (const auto* a = std::get_if<UniformAcceleration>(&system)) {
    os << ",\"force\":" << format_number(a->force);
  } else if (const auto* o = std::get_if<HarmonicOscillator>(&system)) {
    os << ",\"omega\":" << format_number(o->omega);
  } else if (const auto* o = std::get_if<InvertedOscillator>(&system)) {
    os << ",\"omega_tilde\":" << format_number(o->omega_tilde);
  }
  os << '}';
  return os.str();
}

class Runner {
 public:
  explicit Runner(const ValidationOptions& options) : options_(options) {}

  bool selected(const std::string& family, const SystemSpec& system) const {
    return options_.filter.empty() || options_.filter == family ||
           options_.filter == system_name(system);
  }

  // `measure` returns (analytic, oracle).
  void run(const std::string& family, const SystemSpec& system,
           const PacketParams& params, double t, double tolerance, bool relative,
           const std::function<std::pair<double, double>()>& measure) {
    if (!selected(family, system)) return;
    CheckRecord r;
    r.name = family;
    r.system = std::string(system_name(system));
    r.params = params_json(system, params, t);
    r.tolerance = options_.tolerance.value_or(tolerance);
    r.relative = relative;
    try {
      const auto [a, o] = measure();
      r.analytic = a;
      r.oracle = o;
      r.abs_err = std::abs(a - o);
      r.rel_err = a != 0.0 ? r.abs_err / std::abs(a)
                           : (r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
      r.pass = (relative ? r.rel_err : r.abs_err) <= r.tolerance;
    } catch (const AccuracyError& e) {
      r.error = e.what();
      r.oracle = e.estimate();
      r.pass = false;
    }
    records_.push_back(std::move(r));
  }

  ValidationReport report() && { return {std::move(records_)}; }

 private:
  const ValidationOptions& options_;
  std::vector<CheckRecord> records_;
};

double max_pointwise_gap(const SystemSpec& limit, const PacketParams& params,
                         double t) {
  const PacketState ref = state_at(free_particle(), params, t);
  const PacketState other = state_at(limit, params, t);
  const Eigen::ArrayXd xs = uniform_grid(
      {ref.center - 6.0 * ref.spread(), ref.center + 6.0 * ref.spread()}, 2001);
  double gap = 0.0;
  for (double x : xs) gap = std::max(gap, std::abs(ref.psi(x) - other.psi(x)));
  return gap;
}

}  // namespace

bool ValidationReport::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

bool ValidationReport::any_nonconvergence() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return !r.error.empty(); });
}

int ValidationReport::exit_code() const {
  if (any_nonconvergence()) return 2;
  return all_pass() ? 0 : 1;
}

ValidationReport run_validation(const ValidationOptions& options) {
  Runner runner(options);
  const auto cases = default_cases();

  for (const Case& c : cases) {
    runner.run("normalization", c.system, c.params, c.t, 1e-9, true, [&] {
      return std::pair{1.0, oracle::norm_integral(c.system, c.params, c.t).value};
    });
  }
  for (const Case& c : cases) {
    runner.run("ibp", c.system, c.params, c.t, 1e-8, true, [&] {
      return std::pair{total_kinetic(c.system, c.params, c.t),
                       oracle::kinetic_ibp(c.system, c.params, c.t).value};
    });
  }
  for (const Case& c : cases) {
    const EnergySplit closed = half_energies(c.system, c.params, c.t);
    std::optional<EnergySplit> quad;
    auto quadrature = [&]() -> const EnergySplit& {
      if (!quad) quad = oracle::half_energies_quadrature(c.system, c.params, c.t);
      return *quad;
    };
    runner.run("t_plus", c.system, c.params, c.t, 1e-8, true,
               [&] { return std::pair{closed.plus, quadrature().plus}; });
    runner.run("t_minus", c.system, c.params, c.t, 1e-8, true,
               [&] { return std::pair{closed.minus, quadrature().minus}; });
  }
  for (const Case& c : cases) {
    runner.run("split_step", c.system, c.params, c.t_final, 1e-6, false, [&] {
      const Eigen::ArrayXd xs = oracle::propagator_grid(c.propagator);
      const PacketState s0 = state_at(c.system, c.params, 0.0);
      const PacketState s1 = state_at(c.system, c.params, c.t_final);
      const Eigen::ArrayXcd psi0 = xs.unaryExpr([&](double x) { return s0.psi(x); });
      const Eigen::ArrayXcd exact = xs.unaryExpr([&](double x) { return s1.psi(x); });
      const auto run = oracle::propagate(psi0, c.propagator, c.t_final);
      return std::pair{0.0, oracle::l2_distance_mod_phase(exact, run.psi, xs[1] - xs[0])};
    });
  }
  {
    const PacketParams p = make_params(1.0, 1.0, 1.0, 0.0, 0.7);
    runner.run("reduction", harmonic_oscillator(1e-6), p, 1.0, 1e-5, false, [&] {
      return std::pair{0.0, max_pointwise_gap(harmonic_oscillator(1e-6), p, 1.0)};
    });
    runner.run("reduction", uniform_acceleration(1e-6), p, 1.0, 1e-5, false, [&] {
      return std::pair{0.0, max_pointwise_gap(uniform_acceleration(1e-6), p, 1.0)};
    });
  }
  return std::move(runner).report();
}

void write_report_json(std::ostream& os, const ValidationReport& report) {
  auto num = [](double v) {
    return std::isfinite(v) ? format_number(v) : std::string("null");
  };
  os << "{\"version\":1,\"command\":\"validate\",\"pass\":"
     << (report.all_pass() ? "true" : "false") << ",\"records\":[\n";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const CheckRecord& r = report.records[i];
    os << "{\"name\":" << json_string(r.name) << ",\"system\":" << json_string(r.system)
       << ",\"params\":" << r.params << ",\"analytic\":" << num(r.analytic)
       << ",\"oracle\":" << num(r.oracle) << ",\"abs_err\":" << num(r.abs_err)
       << ",\"rel_err\":" << num(r.rel_err) << ",\"tolerance\":" << num(r.tolerance)
       << ",\"tolerance_kind\":" << (r.relative ? "\"relative\"" : "\"absolute\"")
       << ",\"pass\":" << (r.pass ? "true" : "false");
    if (!r.error.empty()) os << ",\"error\":" << json_string(r.error);
    os << '}' << (i + 1 < report.records.size() ? ",\n" : "\n");
  }
  os << "]}\n";
}

}  // namespace gausspack
