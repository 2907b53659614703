#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmc/coupling.hpp"
#include "mmc/noise.hpp"
#include "mmc/scenario.hpp"

namespace mmc {

// Everything cmd_report prints, assembled once so text and CSV renderings
// cannot disagree.
struct ReportBundle {
  ResolvedScenario rs;
  ValidationReport validation;
  CouplingReport coupling;
  NoiseReport noise;
  double geom_factor = 0.0;  // chi (quadrupole) or the homogeneous factor
  double corner_field = 0.0; // |B| at the strip corner [T]
  SafetyStatus safety = SafetyStatus::Ok;
  double pearl_over_w = 0.0;
  double lambda_ratio = 1.0;    // eta(Lambda)/eta(0)
  double eta_with_lambda = 0.0; // informational
  double grad_inhom_est = 0.0;  // wire sources only
  double grad_inhom_exact = 0.0;
  std::vector<std::string> assumptions;
  std::vector<std::string> flags;
};

// pearl_override replaces the Pearl-length-to-width ratio derived from the
// strip material, for studies that scan the screening length directly.
ReportBundle build_report(
    const ResolvedScenario& rs,
    std::optional<double> pearl_override = std::nullopt);

std::string render_report_text(const ReportBundle& b);
std::string render_report_csv(const ReportBundle& b);

} // namespace mmc
