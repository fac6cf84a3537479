#include "gausspack/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gausspack/errors.hpp"
#include "json.hpp"

namespace gausspack {

namespace {

std::string fixed2(double v) {
  if (std::abs(v) < 0.005) v = 0.0;  // no "-0.00"
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, ptr);
}

void write_array(std::ostream& os, const Eigen::ArrayXd& a) {
  os << '[';
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << format_number(a[i]);
  }
  os << ']';
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::vector<EvolveTable> evolve_tables(const Scenario& scenario,
                                       bool with_kinetic, bool with_scaled) {
  std::vector<EvolveTable> tables;
  tables.reserve(scenario.times.size());
  const PhysicalConstants& k = scenario.params.constants();
  for (double t : scenario.times) {
    const GridResult grid = sample_grid(scenario.system, scenario.params, t,
                                        resolve_window(scenario, t), scenario.grid_n);
    const PacketState st = state_at(scenario.system, scenario.params, t);
    EvolveTable table;
    table.t = t;
    table.center = st.center;
    table.xs = grid.xs;
    table.psi = grid.psi;
    table.prob = grid.prob;
    if (with_kinetic || with_scaled) {
      const Eigen::ArrayXd ked = grid.xs.unaryExpr(
          [&](double x) { return kinetic_density(st, k, x); });
      if (with_kinetic) table.kinetic = ked;
      if (with_scaled) table.scaled = ked / total_kinetic(st, k);
    }
    tables.push_back(std::move(table));
  }
  return tables;
}

void write_evolve_csv(std::ostream& os, const std::vector<EvolveTable>& tables,
                      bool time_column) {
  if (tables.empty()) return;
  const bool ked = tables.front().kinetic.size() > 0;
  const bool scaled = tables.front().scaled.size() > 0;
  if (time_column) os << "t,";
  os << "x,re_psi,im_psi,abs_psi,prob";
  if (ked) os << ",kedensity";
  if (scaled) os << ",scaled";
  os << '\n';
  for (const EvolveTable& table : tables) {
    for (Eigen::Index i = 0; i < table.xs.size(); ++i) {
      if (time_column) os << format_number(table.t) << ',';
      os << format_number(table.xs[i]) << ',' << format_number(table.psi[i].real())
         << ',' << format_number(table.psi[i].imag()) << ','
         << format_number(std::abs(table.psi[i])) << ',' << format_number(table.prob[i]);
      if (ked) os << ',' << format_number(table.kinetic[i]);
      if (scaled) os << ',' << format_number(table.scaled[i]);
      os << '\n';
    }
  }
}

void write_evolve_json(std::ostream& os, const Scenario& scenario,
                       const std::vector<EvolveTable>& tables) {
  os << "{\"version\":" << kScenarioFormatVersion << ",\"command\":\"evolve\""
     << ",\"scenario\":" << json_string(scenario.name)
     << ",\"system\":" << json_string(std::string(system_name(scenario.system)))
     << ",\"tables\":[";
  for (std::size_t n = 0; n < tables.size(); ++n) {
    const EvolveTable& tb = tables[n];
    if (n) os << ',';
    os << "{\"t\":" << format_number(tb.t) << ",\"x\":";
    write_array(os, tb.xs);
    os << ",\"re_psi\":";
    write_array(os, tb.psi.real());
    os << ",\"im_psi\":";
    write_array(os, tb.psi.imag());
    os << ",\"abs_psi\":";
    write_array(os, tb.psi.abs());
    os << ",\"prob\":";
    write_array(os, tb.prob);
    if (tb.kinetic.size() > 0) {
      os << ",\"kedensity\":";
      write_array(os, tb.kinetic);
    }
    if (tb.scaled.size() > 0) {
      os << ",\"scaled\":";
      write_array(os, tb.scaled);
    }
    os << '}';
  }
  os << "]}\n";
}

void write_fractions_csv(std::ostream& os, const std::vector<EnergySplit>& rows) {
  os << "t,total,plus,minus,r_plus,r_minus\n";
  for (const EnergySplit& r : rows) {
    os << format_number(r.t) << ',' << format_number(r.total) << ','
       << format_number(r.plus) << ',' << format_number(r.minus) << ','
       << format_number(r.r_plus) << ',' << format_number(r.r_minus) << '\n';
  }
}

void write_fractions_json(std::ostream& os, const Scenario& scenario,
                          const std::vector<EnergySplit>& rows) {
  os << "{\"version\":" << kScenarioFormatVersion << ",\"command\":\"fractions\""
     << ",\"scenario\":" << json_string(scenario.name)
     << ",\"system\":" << json_string(std::string(system_name(scenario.system)))
     << ",\"rows\":[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EnergySplit& r = rows[i];
    if (i) os << ',';
    os << "{\"t\":" << format_number(r.t) << ",\"total\":" << format_number(r.total)
       << ",\"plus\":" << format_number(r.plus) << ",\"minus\":" << format_number(r.minus)
       << ",\"r_plus\":" << format_number(r.r_plus)
       << ",\"r_minus\":" << format_number(r.r_minus) << '}';
  }
  os << "]}\n";
}

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr double kPanelW = 360.0;
constexpr double kPanelH = 250.0;
constexpr double kMarginL = 56.0;
constexpr double kMarginR = 16.0;
constexpr double kMarginT = 34.0;
constexpr double kMarginB = 44.0;
constexpr double kHeader = 40.0;
constexpr double kFooter = 26.0;

struct Frame {
  double left, top, width, height;
  double xmin, xmax, ymin, ymax;

  double px(double x) const { return left + (x - xmin) / (xmax - xmin) * width; }
  double py(double y) const { return top + (ymax - y) / (ymax - ymin) * height; }
};

void polyline(std::ostream& os, const Frame& f, const Eigen::ArrayXd& xs,
              const Eigen::ArrayXd& ys, const char* cls) {
  os << "<polyline class=\"" << cls << "\" points=\"";
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    if (i) os << ' ';
    os << fixed2(f.px(xs[i])) << ',' << fixed2(f.py(ys[i]));
  }
  os << "\"/>\n";
}

void axes(std::ostream& os, const Frame& f, const std::string& xlabel,
          const std::string& title) {
  os << "<rect class=\"frame\" x=\"" << fixed2(f.left) << "\" y=\"" << fixed2(f.top)
     << "\" width=\"" << fixed2(f.width) << "\" height=\"" << fixed2(f.height)
     << "\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double fx = f.xmin + (f.xmax - f.xmin) * i / (kTicks - 1);
    const double fy = f.ymin + (f.ymax - f.ymin) * i / (kTicks - 1);
    const double X = f.px(fx);
    const double Y = f.py(fy);
    const double bottom = f.top + f.height;
    os << "<line class=\"tick\" x1=\"" << fixed2(X) << "\" y1=\"" << fixed2(bottom)
       << "\" x2=\"" << fixed2(X) << "\" y2=\"" << fixed2(bottom + 4) << "\"/>\n";
    os << "<text class=\"tl\" x=\"" << fixed2(X) << "\" y=\"" << fixed2(bottom + 15)
       << "\" text-anchor=\"middle\">" << fixed2(fx) << "</text>\n";
    os << "<line class=\"tick\" x1=\"" << fixed2(f.left - 4) << "\" y1=\"" << fixed2(Y)
       << "\" x2=\"" << fixed2(f.left) << "\" y2=\"" << fixed2(Y) << "\"/>\n";
    os << "<text class=\"tl\" x=\"" << fixed2(f.left - 6) << "\" y=\"" << fixed2(Y + 3)
       << "\" text-anchor=\"end\">" << fixed2(fy) << "</text>\n";
  }
  os << "<text class=\"lab\" x=\"" << fixed2(f.left + f.width / 2) << "\" y=\""
     << fixed2(f.top + f.height + 32) << "\" text-anchor=\"middle\">" << xlabel
     << "</text>\n";
  os << "<text class=\"ttl\" x=\"" << fixed2(f.left + f.width / 2) << "\" y=\""
     << fixed2(f.top - 10) << "\" text-anchor=\"middle\">" << title << "</text>\n";
}

std::string time_label(const Scenario& s, double t) {
  std::string label = "t = " + fixed2(t);
  if (const auto* o = std::get_if<HarmonicOscillator>(&s.system)) {
    label += " (" + fixed2(t * o->omega / (2.0 * std::numbers::pi)) + " tau)";
  } else {
    label += " (" + fixed2(t / s.params.t0()) + " t0)";
  }
  return label;
}

}  // namespace

std::string render_figure_svg(const Scenario& scenario) {
  const auto tables = evolve_tables(scenario, false, true);
  const std::size_t n = tables.size();
  const bool single = n == 1;
  const std::size_t cols = single ? 2 : n;
  const std::size_t rows = single ? 1 : 2;
  const double cell_w = kMarginL + kPanelW + kMarginR;
  const double cell_h = kMarginT + kPanelH + kMarginB;
  const double width = cell_w * static_cast<double>(cols);
  const double height = kHeader + cell_h * static_cast<double>(rows) + kFooter;

  const PacketParams& p = scenario.params;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(width)
     << "\" height=\"" << fixed2(height) << "\" viewBox=\"0 0 " << fixed2(width) << ' '
     << fixed2(height) << "\">\n"
     << "<style>\n"
     << "text{font-family:Helvetica,Arial,sans-serif;fill:#000}\n"
     << ".tl{font-size:10px}.lab{font-size:12px}.ttl{font-size:12px}"
        ".hdr{font-size:15px}.ftr{font-size:11px}\n"
     << ".frame{fill:none;stroke:#000;stroke-width:1}\n"
     << ".tick{stroke:#000;stroke-width:1}\n"
     << ".zero{stroke:#999;stroke-width:0.5}\n"
     << "polyline{fill:none;stroke-width:1.4}\n"
     << ".mod{stroke:#000}\n"
     << ".re{stroke:#1f4e9c;stroke-dasharray:1.5,2.5}\n"
     << ".im{stroke:#b03a2e;stroke-dasharray:6,4}\n"
     << ".prob{stroke:#000}\n"
     << ".scaled{stroke:#1a7f37;stroke-dasharray:8,3,2,3}\n"
     << "</style>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  os << "<text class=\"hdr\" x=\"" << fixed2(width / 2) << "\" y=\"24\" "
     << "text-anchor=\"middle\">" << scenario.name << ": " << system_name(scenario.system)
     << ", hbar = " << fixed2(p.hbar()) << ", m = " << fixed2(p.mass())
     << ", alpha = " << fixed2(p.alpha()) << ", p0 = " << fixed2(p.p0()) << "</text>\n";

  const std::string xlabel = scenario.recenter ? "x - (x0 + p0 t/m)" : "x";
  for (std::size_t i = 0; i < n; ++i) {
    const EvolveTable& tb = tables[i];
    const Eigen::ArrayXd xs = scenario.recenter ? Eigen::ArrayXd(tb.xs - tb.center) : tb.xs;
    const double col_left = cell_w * static_cast<double>(i) + kMarginL;

    const Eigen::ArrayXd mod = tb.psi.abs();
    const double amp = 1.1 * std::max(mod.maxCoeff(), 1e-300);
    Frame wave{col_left, kHeader + kMarginT, kPanelW, kPanelH,
               xs[0], xs[xs.size() - 1], -amp, amp};

    const double dens =
        1.1 * std::max({tb.prob.maxCoeff(), tb.scaled.maxCoeff(), 1e-300});
    Frame density = wave;
    density.ymin = 0.0;
    density.ymax = dens;
    if (single) {
      density.left = cell_w + kMarginL;
    } else {
      density.top = kHeader + cell_h + kMarginT;
    }

    axes(os, wave, xlabel, "psi, " + time_label(scenario, tb.t));
    os << "<line class=\"zero\" x1=\"" << fixed2(wave.left) << "\" y1=\""
       << fixed2(wave.py(0)) << "\" x2=\"" << fixed2(wave.left + wave.width)
       << "\" y2=\"" << fixed2(wave.py(0)) << "\"/>\n";
    polyline(os, wave, xs, tb.psi.real(), "re");
    polyline(os, wave, xs, tb.psi.imag(), "im");
    polyline(os, wave, xs, mod, "mod");

    axes(os, density, xlabel, "P and S, " + time_label(scenario, tb.t));
    polyline(os, density, xs, tb.prob, "prob");
    polyline(os, density, xs, tb.scaled, "scaled");
  }

  os << "<text class=\"ftr\" x=\"8\" y=\"" << fixed2(height - 9) << "\">"
     << "|psi| solid, Re psi dotted, Im psi dashed; P = |psi|^2 solid, "
        "S = T(x,t)/T(t) dash-dot. Units: hbar = "
     << fixed2(p.hbar()) << ", m = " << fixed2(p.mass()) << "."
     << (scenario.recenter ? " Plotted against x - (x0 + p0 t/m)." : "") << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gausspack
