#include "gausspack/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gausspack/errors.hpp"
#include "gausspack/kedensity.hpp"
#include "gausspack/output.hpp"
#include "gausspack/scenarios.hpp"
#include "gausspack/validate.hpp"

namespace gausspack::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string scenario_file;
  std::string preset_name;
  std::string format;
  std::string out = "-";
  std::string filter;
  std::optional<double> tolerance;
  bool lax = false;
  bool single_table = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scenario load_input(const Options& o) {
  if (!o.scenario_file.empty() && !o.preset_name.empty()) {
    throw UsageError("give either --scenario or --preset, not both");
  }
  if (!o.preset_name.empty()) return preset(o.preset_name);
  if (o.scenario_file.empty()) throw UsageError("one of --scenario or --preset is required");
  std::ifstream in(o.scenario_file, std::ios::binary);
  if (!in) throw IoError("cannot read " + o.scenario_file);
  std::ostringstream text;
  text << in.rdbuf();
  return load_scenario(text.str(), o.lax);
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + path);
  file << content;
  file.close();
  if (!file) throw IoError("failed writing " + path);
}

// out.csv -> out_t<i>.csv
std::string indexed_path(const std::string& path, std::size_t i) {
  const fs::path p(path);
  fs::path name = p.stem();
  name += "_t" + std::to_string(i);
  name += p.extension();
  return (p.parent_path() / name).string();
}

std::string require_format(const Options& o, std::initializer_list<const char*> allowed,
                           const char* fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw UsageError("format '" + f + "' is not valid for this command");
}

int cmd_evolve(const Options& o, std::ostream& out) {
  const std::string format = require_format(o, {"csv", "json"}, "csv");
  const Scenario s = load_input(o);
  const auto tables = evolve_tables(s, s.wants(OutputKind::KineticDensity),
                                    s.wants(OutputKind::Scaled));
  if (format == "json") {
    std::ostringstream os;
    write_evolve_json(os, s, tables);
    emit(o.out, os.str(), out);
  } else if (o.single_table || o.out == "-" || tables.size() == 1) {
    std::ostringstream os;
    write_evolve_csv(os, tables, o.single_table || tables.size() > 1);
    emit(o.out, os.str(), out);
  } else {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::ostringstream os;
      write_evolve_csv(os, {tables[i]}, false);
      emit(indexed_path(o.out, i), os.str(), out);
    }
  }
  return kExitOk;
}

int cmd_fractions(const Options& o, std::ostream& out) {
  const std::string format = require_format(o, {"csv", "json"}, "csv");
  const Scenario s = load_input(o);
  const auto rows = fraction_series(s.system, s.params, s.times);
  std::ostringstream os;
  if (format == "json") {
    write_fractions_json(os, s, rows);
  } else {
    write_fractions_csv(os, rows);
  }
  emit(o.out, os.str(), out);
  return kExitOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  const std::string format = require_format(o, {"svg", "csv", "json"}, "svg");
  const Scenario s = load_input(o);
  std::ostringstream os;
  if (format == "svg") {
    os << render_figure_svg(s);
  } else {
    const auto tables = evolve_tables(s, true, true);
    if (format == "json") {
      write_evolve_json(os, s, tables);
    } else {
      write_evolve_csv(os, tables, true);
    }
  }
  emit(o.out, os.str(), out);
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  require_format(o, {"json"}, "json");
  if (o.tolerance && !(*o.tolerance >= 0.0)) throw UsageError("--tolerance must be >= 0");
  ValidationOptions options;
  options.filter = o.filter;
  options.tolerance = o.tolerance;
  const ValidationReport report = run_validation(options);
  if (report.records.empty()) throw UsageError("--filter '" + o.filter + "' selects no checks");
  std::ostringstream os;
  write_report_json(os, report);
  emit(o.out, os.str(), out);
  return report.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form Gaussian wave packets and their kinetic energy density",
               "gausspack"};
  app.require_subcommand(1, 1);
  Options o;
  double tolerance = 0.0;

  auto add_input = [&](CLI::App* sub) {
    auto* scen = sub->add_option("--scenario", o.scenario_file, "Scenario JSON file");
    auto* pre = sub->add_option("--preset", o.preset_name, "Named figure preset");
    scen->excludes(pre);
    sub->add_flag("--lax", o.lax, "Ignore unknown scenario fields");
  };
  auto add_output = [&](CLI::App* sub, const char* formats) {
    sub->add_option("--format", o.format, formats);
    sub->add_option("--out", o.out, "Output path, '-' for standard output");
  };

  auto* evolve = app.add_subcommand("evolve", "Sample psi and P on the scenario grid");
  add_input(evolve);
  add_output(evolve, "csv (default) or json");
  evolve->add_flag("--single-table", o.single_table,
                   "One CSV with a leading t column instead of one file per time");

  auto* fractions = app.add_subcommand("fractions", "T, T+, T-, R+, R- per time");
  add_input(fractions);
  add_output(fractions, "csv (default) or json");

  auto* figure = app.add_subcommand("figure", "Render the figure panels");
  add_input(figure);
  add_output(figure, "svg (default), csv or json (plotted data)");

  auto* validate = app.add_subcommand("validate", "Run the analytic-vs-oracle checks");
  add_output(validate, "json");
  validate->add_option("--filter", o.filter, "System (free, accel, sho, inverted) or check family");
  auto* tol = validate->add_option("--tolerance", tolerance, "Override every check tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gausspack: " << e.what() << "\n";
    return kExitUsage;
  }
  if (tol->count() > 0) o.tolerance = tolerance;

  try {
    if (evolve->parsed()) return cmd_evolve(o, out);
    if (fractions->parsed()) return cmd_fractions(o, out);
    if (figure->parsed()) return cmd_figure(o, out);
    return cmd_validate(o, out);
  } catch (const UsageError& e) {
    err << "gausspack: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "gausspack: scenario error: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << "\n";
    return kExitUsage;
  } catch (const LookupError& e) {
    err << "gausspack: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AccuracyError& e) {
    err << "gausspack: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const IoError& e) {
    err << "gausspack: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "gausspack: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace gausspack::cli
