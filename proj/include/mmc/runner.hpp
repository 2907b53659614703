#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmc/fieldmap.hpp"
#include "mmc/report.hpp"

namespace mmc {

enum class OutputFormat { Text, Csv };

OutputFormat format_from_string(const std::string& s);

struct ReportOptions {
  std::string scenario;
  OutputFormat format = OutputFormat::Text;
};

// Linear scan of one scenario parameter (dotted path mirroring the scenario
// sections, e.g. coil.z_c). steps is the number of rows; 0 emits only the
// header. strip.pearl_over_w is a virtual parameter that feeds the
// finite-screening ratio without touching the scenario.
struct SweepOptions {
  std::string scenario;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

struct FieldmapOptions {
  std::string scenario;
  std::string which = "total";
  std::optional<double> y0, y1, z0, z1; // defaults derived from the strip
  int ny = 201;
  int nz = 201;
  int threads = 1;
};

// Finite-length screening study. N_spec is "auto" (the standard refinement
// ladder) or a comma-separated list of total-cell targets.
struct MemOptions {
  std::string scenario;
  std::vector<double> L_over_w = {5.0, 10.0, 20.0, 50.0};
  std::string N_spec = "auto";
};

void cmd_report(std::ostream& os, const ReportOptions& opt);
void cmd_sweep(std::ostream& os, const SweepOptions& opt);
void cmd_fieldmap(std::ostream& os, const FieldmapOptions& opt);
void cmd_mem(std::ostream& os, const MemOptions& opt);

// Maps the library's exception taxonomy onto process exit codes: 2 for
// malformed input, 3 for domain violations, 4 for numerical failures.
int run_guarded(const std::function<int()>& body, std::ostream& err);

} // namespace mmc
