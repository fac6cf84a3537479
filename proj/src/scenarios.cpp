#include "gausspack/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "gausspack/errors.hpp"
#include "gausspack/kedensity.hpp"
#include "json.hpp"

namespace gausspack {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using std::numbers::pi;

const std::map<std::string, OutputKind, std::less<>>& output_table() {
  static const std::map<std::string, OutputKind, std::less<>> table = {
      {"psi", OutputKind::Psi},
      {"prob", OutputKind::Prob},
      {"kedensity", OutputKind::KineticDensity},
      {"scaled", OutputKind::Scaled},
      {"fractions", OutputKind::Fractions},
  };
  return table;
}

const std::set<std::string, std::less<>> kScenarioKeys = {
    "version", "preset",          "name",   "system",      "force",
    "omega",   "omega_tilde",     "hbar",   "mass",        "alpha",
    "beta",    "beta_over_beta0", "x0",     "p0",          "p0_over_dp0",
    "p0_extremal", "times",       "time_unit", "window",   "outputs",
    "grid_n",  "recenter"};

const std::set<std::string, std::less<>> kWindowKeys = {"lo", "hi", "unit"};

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message, field);
}

void reject_unknown(const json& obj, const std::set<std::string, std::less<>>& known,
                    const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.contains(key)) fail(prefix + key, "unknown field");
  }
}

double number(const json& obj, const std::string& key, const std::string& field) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(field, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(field, "expected a finite number");
  return d;
}

double positive(const json& obj, const std::string& key) {
  const double d = number(obj, key, key);
  if (!(d > 0.0)) fail(key, "must be positive");
  return d;
}

int line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), "",
                     line_of(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

double frequency(const SystemSpec& system) {
  if (const auto* s = std::get_if<HarmonicOscillator>(&system)) return s->omega;
  if (const auto* s = std::get_if<InvertedOscillator>(&system)) return s->omega_tilde;
  return 0.0;
}

bool is_oscillator(const SystemSpec& system) { return frequency(system) > 0.0; }

SystemSpec read_system(const json& doc, const SystemSpec& base) {
  SystemSpec system = base;
  if (doc.contains("system")) {
    if (!doc["system"].is_string()) fail("system", "expected a string");
    const auto kind = doc["system"].get<std::string>();
    if (kind == "free") {
      system = FreeParticle{};
    } else if (kind == "accel") {
      if (!doc.contains("force")) fail("force", "required for system accel");
      system = UniformAcceleration{number(doc, "force", "force")};
    } else if (kind == "sho") {
      if (!doc.contains("omega")) fail("omega", "required for system sho");
      system = HarmonicOscillator{positive(doc, "omega")};
    } else if (kind == "inverted") {
      if (!doc.contains("omega_tilde")) fail("omega_tilde", "required for system inverted");
      system = InvertedOscillator{positive(doc, "omega_tilde")};
    } else {
      fail("system", "expected one of free, accel, sho, inverted");
    }
  } else {
    // Parameter overrides on a preset's system.
    if (auto* s = std::get_if<UniformAcceleration>(&system); s && doc.contains("force")) {
      s->force = number(doc, "force", "force");
    }
    if (auto* s = std::get_if<HarmonicOscillator>(&system); s && doc.contains("omega")) {
      s->omega = positive(doc, "omega");
    }
    if (auto* s = std::get_if<InvertedOscillator>(&system); s && doc.contains("omega_tilde")) {
      s->omega_tilde = positive(doc, "omega_tilde");
    }
  }
  const bool accel = std::holds_alternative<UniformAcceleration>(system);
  const bool sho = std::holds_alternative<HarmonicOscillator>(system);
  const bool inv = std::holds_alternative<InvertedOscillator>(system);
  if (doc.contains("force") && !accel) fail("force", "only valid for system accel");
  if (doc.contains("omega") && !sho) fail("omega", "only valid for system sho");
  if (doc.contains("omega_tilde") && !inv) fail("omega_tilde", "only valid for system inverted");
  return system;
}

PacketParams read_params(const json& doc, const SystemSpec& system,
                         const PacketParams& base) {
  const double hbar = doc.contains("hbar") ? positive(doc, "hbar") : base.hbar();
  const double mass = doc.contains("mass") ? positive(doc, "mass") : base.mass();

  const int widths = static_cast<int>(doc.contains("alpha")) +
                     static_cast<int>(doc.contains("beta")) +
                     static_cast<int>(doc.contains("beta_over_beta0"));
  if (widths > 1) fail("alpha", "give only one of alpha, beta, beta_over_beta0");
  double alpha = base.alpha();
  if (doc.contains("alpha")) {
    alpha = positive(doc, "alpha");
  } else if (doc.contains("beta")) {
    alpha = positive(doc, "beta") / hbar;
  } else if (doc.contains("beta_over_beta0")) {
    if (!is_oscillator(system)) fail("beta_over_beta0", "only valid for sho or inverted");
    const double beta0 = std::sqrt(hbar / (mass * frequency(system)));
    alpha = positive(doc, "beta_over_beta0") * beta0 / hbar;
  }

  const double x0 = doc.contains("x0") ? number(doc, "x0", "x0") : base.x0();
  if (is_oscillator(system) && x0 != 0.0) {
    fail("x0", "oscillator packets must start at x0 = 0");
  }

  const int momenta = static_cast<int>(doc.contains("p0")) +
                      static_cast<int>(doc.contains("p0_over_dp0")) +
                      static_cast<int>(doc.contains("p0_extremal"));
  if (momenta > 1) fail("p0", "give only one of p0, p0_over_dp0, p0_extremal");

  PacketParams params = make_params(hbar, mass, alpha, x0, base.p0());
  if (doc.contains("p0")) {
    params = params.with_p0(number(doc, "p0", "p0"));
  } else if (doc.contains("p0_over_dp0")) {
    params = params.with_p0(number(doc, "p0_over_dp0", "p0_over_dp0") * params.dp0());
  } else if (doc.contains("p0_extremal")) {
    if (!doc["p0_extremal"].is_boolean()) fail("p0_extremal", "expected a boolean");
    if (doc["p0_extremal"].get<bool>()) {
      try {
        params = params.with_p0(extremal_p0(system, params));
      } catch (const UnsupportedError& e) {
        fail("p0_extremal", e.what());
      }
    }
  }
  return params;
}

std::vector<double> read_times(const json& doc, const SystemSpec& system,
                               const PacketParams& params) {
  const json& arr = doc.at("times");
  if (!arr.is_array() || arr.empty()) fail("times", "expected a non-empty array");
  double unit = 1.0;
  if (doc.contains("time_unit")) {
    if (!doc["time_unit"].is_string()) fail("time_unit", "expected a string");
    const auto u = doc["time_unit"].get<std::string>();
    if (u == "abs") {
      unit = 1.0;
    } else if (u == "t0") {
      unit = params.t0();
    } else if (u == "tau") {
      const auto* sho = std::get_if<HarmonicOscillator>(&system);
      if (sho == nullptr) fail("time_unit", "tau requires system sho");
      unit = 2.0 * pi / sho->omega;
    } else {
      fail("time_unit", "expected abs, t0 or tau");
    }
  }
  std::vector<double> times;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "times[" + std::to_string(i) + "]";
    if (!arr[i].is_number()) fail(field, "expected a number");
    const double t = arr[i].get<double>() * unit;
    if (!std::isfinite(t)) fail(field, "expected a finite number");
    times.push_back(t);
  }
  return times;
}

WindowSpec read_window(const json& doc, bool lax) {
  const json& w = doc.at("window");
  if (!w.is_object()) fail("window", "expected an object");
  if (!lax) reject_unknown(w, kWindowKeys, "window.");
  if (!w.contains("lo")) fail("window.lo", "required");
  if (!w.contains("hi")) fail("window.hi", "required");
  WindowSpec spec;
  spec.lo = number(w, "lo", "window.lo");
  spec.hi = number(w, "hi", "window.hi");
  if (!(spec.lo < spec.hi)) fail("window", "requires lo < hi");
  spec.relative = true;
  if (w.contains("unit")) {
    if (!w["unit"].is_string()) fail("window.unit", "expected a string");
    const auto u = w["unit"].get<std::string>();
    if (u == "abs") {
      spec.relative = false;
    } else if (u != "spread") {
      fail("window.unit", "expected abs or spread");
    }
  }
  return spec;
}

std::vector<OutputKind> read_outputs(const json& doc) {
  const json& arr = doc.at("outputs");
  if (!arr.is_array()) fail("outputs", "expected an array");
  std::set<OutputKind> kinds;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string field = "outputs[" + std::to_string(i) + "]";
    if (!arr[i].is_string()) fail(field, "expected a string");
    const auto it = output_table().find(arr[i].get<std::string>());
    if (it == output_table().end()) {
      fail(field, "expected psi, prob, kedensity, scaled or fractions");
    }
    kinds.insert(it->second);
  }
  return {kinds.begin(), kinds.end()};
}

Scenario parse_scenario(const json& doc, bool lax) {
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object", "");
  if (!lax) reject_unknown(doc, kScenarioKeys, "");

  const bool preset_only =
      doc.contains("preset") && doc.size() == (doc.contains("version") ? 2u : 1u);
  if (doc.contains("version")) {
    if (!doc["version"].is_number_integer() ||
        doc["version"].get<long>() != kScenarioFormatVersion) {
      fail("version", "unsupported version (expected 1)");
    }
  } else if (!preset_only) {
    fail("version", "required");
  }

  Scenario s;
  const bool from_preset = doc.contains("preset");
  if (from_preset) {
    if (!doc["preset"].is_string()) fail("preset", "expected a string");
    try {
      s = preset(doc["preset"].get<std::string>());
    } catch (const LookupError& e) {
      fail("preset", e.what());
    }
  } else {
    for (const char* key : {"name", "system", "times"}) {
      if (!doc.contains(key)) fail(key, "required");
    }
  }

  if (doc.contains("name")) {
    if (!doc["name"].is_string() || doc["name"].get<std::string>().empty()) {
      fail("name", "expected a non-empty string");
    }
    s.name = doc["name"].get<std::string>();
  }

  try {
    s.system = read_system(doc, s.system);
    s.params = read_params(doc, s.system, s.params);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "params");
  }

  if (doc.contains("times")) {
    s.times = read_times(doc, s.system, s.params);
  } else if (doc.contains("time_unit")) {
    fail("time_unit", "only valid together with times");
  }
  if (doc.contains("window")) s.window = read_window(doc, lax);
  if (doc.contains("outputs")) s.outputs = read_outputs(doc);
  if (doc.contains("grid_n")) {
    const json& g = doc["grid_n"];
    if (!g.is_number_integer()) fail("grid_n", "expected an integer");
    const long n = g.get<long>();
    if (n < 16 || n > 10'000'000) fail("grid_n", "must be in [16, 1e7]");
    s.grid_n = n;
  }
  if (doc.contains("recenter")) {
    if (!doc["recenter"].is_boolean()) fail("recenter", "expected a boolean");
    s.recenter = doc["recenter"].get<bool>();
  }

  // Unit-relative resolution must be possible at every requested time.
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    try {
      (void)state_at(s.system, s.params, s.times[i]);
    } catch (const Error& e) {
      fail("times[" + std::to_string(i) + "]", e.what());
    }
  }
  return s;
}

ordered_json to_json(const Scenario& s) {
  ordered_json doc;
  doc["version"] = kScenarioFormatVersion;
  doc["name"] = s.name;
  doc["system"] = std::string(system_name(s.system));
  if (const auto* a = std::get_if<UniformAcceleration>(&s.system)) doc["force"] = a->force;
  if (const auto* o = std::get_if<HarmonicOscillator>(&s.system)) doc["omega"] = o->omega;
  if (const auto* o = std::get_if<InvertedOscillator>(&s.system)) {
    doc["omega_tilde"] = o->omega_tilde;
  }
  doc["hbar"] = s.params.hbar();
  doc["mass"] = s.params.mass();
  doc["alpha"] = s.params.alpha();
  doc["x0"] = s.params.x0();
  doc["p0"] = s.params.p0();
  doc["times"] = s.times;
  doc["time_unit"] = "abs";
  doc["window"] = {{"lo", s.window.lo},
                   {"hi", s.window.hi},
                   {"unit", s.window.relative ? "spread" : "abs"}};
  ordered_json outs = ordered_json::array();
  for (OutputKind k : s.outputs) outs.push_back(std::string(output_name(k)));
  doc["outputs"] = outs;
  doc["grid_n"] = s.grid_n;
  doc["recenter"] = s.recenter;
  return doc;
}

Scenario free_preset(std::string name, double p0_over_dp0) {
  Scenario s;
  s.name = std::move(name);
  s.system = FreeParticle{};
  s.params = make_params(1.0, 1.0, 1.0, 0.0, 0.0);
  s.params = s.params.with_p0(p0_over_dp0 * s.params.dp0());
  s.times = {10.0 * s.params.t0()};
  s.window = {-6.0, 6.0, true};
  s.outputs = {OutputKind::Psi, OutputKind::Prob, OutputKind::KineticDensity,
               OutputKind::Scaled, OutputKind::Fractions};
  s.grid_n = 1201;
  s.recenter = true;
  return s;
}

Scenario oscillator_preset(std::string name, double beta_over_beta0) {
  Scenario s;
  s.name = std::move(name);
  s.system = HarmonicOscillator{1.0};
  const OscillatorDerived od = oscillator_derived({1.0, 1.0}, 1.0);
  s.params = params_from_beta(1.0, 1.0, beta_over_beta0 * od.beta0, 0.0, 0.0);
  s.params = s.params.with_p0(extremal_p0(s.system, s.params));
  s.times = {0.0, od.tau / 16.0, od.tau / 8.0, 3.0 * od.tau / 16.0, od.tau / 4.0};
  s.window = {-8.0, 8.0, false};
  s.outputs = {OutputKind::Psi, OutputKind::Prob, OutputKind::KineticDensity,
               OutputKind::Scaled, OutputKind::Fractions};
  s.grid_n = 801;
  return s;
}

}  // namespace

std::string_view output_name(OutputKind kind) {
  for (const auto& [name, k] : output_table()) {
    if (k == kind) return name;
  }
  return "?";
}

bool Scenario::wants(OutputKind kind) const {
  return std::find(outputs.begin(), outputs.end(), kind) != outputs.end();
}

Window resolve_window(const Scenario& scenario, double t) {
  if (!scenario.window.relative) return {scenario.window.lo, scenario.window.hi};
  const PacketState st = state_at(scenario.system, scenario.params, t);
  return {st.center + scenario.window.lo * st.spread(),
          st.center + scenario.window.hi * st.spread()};
}

Scenario load_scenario(std::string_view text, bool lax) {
  return parse_scenario(parse_document(text), lax);
}

std::string serialize(const Scenario& scenario) {
  return to_json(scenario).dump(2) + "\n";
}

std::vector<std::string> preset_names() {
  return {"fig1", "fig2-top", "fig2-middle", "fig2-bottom", "fig3", "fig4"};
}

Scenario preset(std::string_view name) {
  if (name == "fig1") {
    Scenario s;
    s.name = "fig1";
    s.system = FreeParticle{};
    s.params = make_params(1.0, 1.0, 1.0, 0.0, 2.0);
    s.times = {0.0, 1.0, 2.0, 3.0, 4.0};
    s.window = {-10.0, 25.0, false};
    s.outputs = {OutputKind::Psi, OutputKind::Prob, OutputKind::KineticDensity,
                 OutputKind::Scaled, OutputKind::Fractions};
    s.grid_n = 801;
    return s;
  }
  if (name == "fig2-top") return free_preset("fig2-top", 0.0);
  if (name == "fig2-middle") return free_preset("fig2-middle", 1.0);
  if (name == "fig2-bottom") return free_preset("fig2-bottom", 4.0);
  if (name == "fig3") return oscillator_preset("fig3", 0.5);
  if (name == "fig4") return oscillator_preset("fig4", 2.0);
  throw LookupError("unknown preset '" + std::string(name) + "'");
}

std::vector<Scenario> expand(const Sweep& sweep) {
  const Scenario& base = sweep.base;
  const PacketParams& p = base.params;
  auto require = [&](bool ok) {
    if (!ok) {
      throw ArgumentError("sweep axis '" + sweep.axis + "' does not apply to system " +
                          std::string(system_name(base.system)));
    }
  };
  std::vector<Scenario> out;
  for (double v : sweep.values) {
    if (!std::isfinite(v)) throw ArgumentError("sweep values must be finite");
    Scenario s = base;
    if (sweep.axis == "p0") {
      s.params = p.with_p0(v);
    } else if (sweep.axis == "alpha") {
      s.params = make_params(p.hbar(), p.mass(), v, p.x0(), p.p0());
    } else if (sweep.axis == "beta") {
      s.params = params_from_beta(p.hbar(), p.mass(), v, p.x0(), p.p0());
    } else if (sweep.axis == "omega") {
      require(std::holds_alternative<HarmonicOscillator>(base.system));
      s.system = harmonic_oscillator(v);
    } else if (sweep.axis == "F") {
      require(std::holds_alternative<UniformAcceleration>(base.system));
      s.system = uniform_acceleration(v);
    } else if (sweep.axis == "omega_tilde") {
      require(std::holds_alternative<InvertedOscillator>(base.system));
      s.system = inverted_oscillator(v);
    } else if (sweep.axis == "t") {
      s.times = {v};
    } else {
      throw ArgumentError("unknown sweep axis '" + sweep.axis + "'");
    }
    std::ostringstream label;
    label.precision(17);
    label << base.name << "[" << sweep.axis << "=" << v << "]";
    s.name = label.str();
    out.push_back(std::move(s));
  }
  return out;
}

Sweep load_sweep(std::string_view text, bool lax) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("sweep must be a JSON object", "");
  if (!lax) reject_unknown(doc, {"version", "base", "axis", "values"}, "");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<long>() != kScenarioFormatVersion) {
    fail("version", "required and must be 1");
  }
  for (const char* key : {"base", "axis", "values"}) {
    if (!doc.contains(key)) fail(key, "required");
  }
  json base = doc["base"];
  if (base.is_object() && !base.contains("version")) base["version"] = kScenarioFormatVersion;
  Sweep sweep;
  try {
    sweep.base = parse_scenario(base, lax);
  } catch (const ParseError& e) {
    throw ParseError(std::string("base.") + e.what(), "base." + e.field(), e.line());
  }
  if (!doc["axis"].is_string()) fail("axis", "expected a string");
  sweep.axis = doc["axis"].get<std::string>();
  if (!doc["values"].is_array() || doc["values"].empty()) {
    fail("values", "expected a non-empty array");
  }
  for (std::size_t i = 0; i < doc["values"].size(); ++i) {
    if (!doc["values"][i].is_number()) fail("values[" + std::to_string(i) + "]", "expected a number");
    sweep.values.push_back(doc["values"][i].get<double>());
  }
  try {
    (void)expand(sweep);
  } catch (const Error& e) {
    fail("axis", e.what());
  }
  return sweep;
}

}  // namespace gausspack
