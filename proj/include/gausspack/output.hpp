#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "gausspack/kedensity.hpp"
#include "gausspack/scenarios.hpp"

namespace gausspack {

/// Shortest-independent text form used in every CSV/JSON file: 17
/// significant digits, '.' decimal point, no locale influence.
std::string format_number(double value);

/// Sampled quantities at one time. kinetic/scaled are empty unless requested.
struct EvolveTable {
  double t = 0.0;
  double center = 0.0;
  Eigen::ArrayXd xs;
  Eigen::ArrayXcd psi;
  Eigen::ArrayXd prob;
  Eigen::ArrayXd kinetic;
  Eigen::ArrayXd scaled;
};

/// One table per scenario time on the scenario's (resolved) window.
std::vector<EvolveTable> evolve_tables(const Scenario& scenario,
                                       bool with_kinetic, bool with_scaled);

/// Columns: [t,] x, re_psi, im_psi, abs_psi, prob [, kedensity] [, scaled].
/// RFC 4180, LF line endings, header row.
void write_evolve_csv(std::ostream& os, const std::vector<EvolveTable>& tables,
                      bool time_column);
void write_evolve_json(std::ostream& os, const Scenario& scenario,
                       const std::vector<EvolveTable>& tables);

/// Columns: t, total, plus, minus, r_plus, r_minus.
void write_fractions_csv(std::ostream& os, const std::vector<EnergySplit>& rows);
void write_fractions_json(std::ostream& os, const Scenario& scenario,
                          const std::vector<EnergySplit>& rows);

/// Self-contained SVG: per time a wave-function panel (|psi| solid, Re psi
/// dotted, Im psi dashed) and a density panel (P solid, S dash-dot).
std::string render_figure_svg(const Scenario& scenario);

/// JSON string literal with escaping.
std::string json_string(const std::string& s);

}  // namespace gausspack
