#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gausspack/quantities.hpp"

namespace gausspack {

/// One analytic-versus-oracle comparison.
struct CheckRecord {
  std::string name;    ///< check family: normalization, ibp, t_plus, ...
  std::string system;  ///< free, accel, sho, inverted
  std::string params;  ///< compact JSON object with the inputs
  double analytic = 0.0;
  double oracle = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool relative = true;  ///< tolerance applies to rel_err, else abs_err
  bool pass = false;
  std::string error;  ///< set when the oracle failed to converge
};

struct ValidationOptions {
  /// Run only checks whose system or family equals this string.
  std::string filter;
  /// Replaces every check's tolerance when set.
  std::optional<double> tolerance;
};

struct ValidationReport {
  std::vector<CheckRecord> records;
  bool all_pass() const;
  bool any_nonconvergence() const;
  /// 0 all pass, 1 some check failed, 2 an oracle did not converge.
  int exit_code() const;
};

/// Normalization, IBP identity, T+ and T- against quadrature and split-step
/// propagation for all four systems, plus the omega -> 0 and F -> 0 limits.
ValidationReport run_validation(const ValidationOptions& options = {});

void write_report_json(std::ostream& os, const ValidationReport& report);

}  // namespace gausspack
