#include "mmc/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "mmc/mem.hpp"
#include "mmc/util.hpp"

namespace mmc {

OutputFormat format_from_string(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  throw parse_error("unknown --format '" + s + "' (expected text or csv)");
}

namespace {

constexpr const char* kPearlParam = "strip.pearl_over_w";

// Applies a dotted-path numeric override to a parsed scenario. Only knobs
// the scenario actually uses are scannable, so a wire-pair layout keeps its
// single gradient-or-geometry degree of freedom.
void apply_param(Scenario& sc, const std::string& path, double value) {
  const auto need = [&](bool ok) {
    if (!ok)
      throw parse_error("sweep: parameter '" + path +
                        "' is not applicable to this scenario");
  };
  if (path == "strip.L") sc.strip.L = value;
  else if (path == "strip.w") sc.strip.w = value;
  else if (path == "strip.t") sc.strip.t = value;
  else if (path == "strip.B_c") sc.strip.B_c = value;
  else if (path == "strip.rho") sc.strip.rho = value;
  else if (path == "strip.lambda_L") sc.strip.lambda_L = value;
  else if (path == "strip.xi") sc.strip.xi = value;
  else if (path == "cantilever.t0") sc.cant.t0 = value;
  else if (path == "cantilever.rho0") sc.cant.rho0 = value;
  else if (path == "cantilever.Omega") sc.cant.Omega = value;
  else if (path == "cantilever.gamma") sc.cant.gamma = value;
  else if (path == "cantilever.T") sc.cant.T = value;
  else if (path == "cantilever.z_m") sc.z_m = value;
  else if (path == "coil.w_c") sc.w_c = TokenOrValue::number(value);
  else if (path == "coil.z_c") sc.z_c = value;
  else if (path == "coil.L_c") sc.L_c = value;
  else if (path == "source.gradient") {
    need(sc.gradient.has_value());
    sc.gradient = TokenOrValue::number(value);
  } else if (path == "source.B_a") {
    need(sc.B_a.has_value());
    sc.B_a = TokenOrValue::number(value);
  } else if (path == "source.I_w") {
    need(sc.I_w.has_value());
    sc.I_w = value;
  } else if (path == "source.z_w") {
    need(sc.z_w.has_value());
    sc.z_w = value;
  } else if (path == "circuit.omega0") sc.omega0 = value;
  else if (path == "circuit.ej0_over_ec") sc.ej0_over_ec = value;
  else if (path == "circuit.flux_bias") sc.flux_bias = value;
  else if (path == "circuit.Q") sc.Q = value;
  else if (path == "noise.s_i_rel") sc.s_i_rel = value;
  else if (path == "noise.s_b_rel") sc.s_b_rel = value;
  else
    throw parse_error("sweep: unknown parameter path '" + path + "'");
}

} // namespace

void cmd_report(std::ostream& os, const ReportOptions& opt) {
  const Scenario sc = load_scenario(opt.scenario);
  const ResolvedScenario rs = resolve(sc);
  const ReportBundle b = build_report(rs);
  os << (opt.format == OutputFormat::Csv ? render_report_csv(b)
                                         : render_report_text(b));
}

void cmd_sweep(std::ostream& os, const SweepOptions& opt) {
  if (opt.steps < 0) throw parse_error("sweep: steps must be >= 0");
  const Scenario base = load_scenario(opt.scenario);
  const bool virt = opt.param == kPearlParam;
  if (!virt) {
    // Validate the path once up front so an unusable sweep fails before any
    // rows are computed.
    Scenario probe = base;
    apply_param(probe, opt.param, opt.from);
  }

  std::string out = opt.param +
      ",w_c_m,eta_star,eta,two_eta,g0_rad_s,g0_over_kappa,Gamma_rad_s,"
      "cooperativity,eta_lambda_ratio,eta_with_lambda,corner_field_T,"
      "safety\n";
  for (int i = 0; i < opt.steps; ++i) {
    const double x = opt.steps > 1
                         ? opt.from + (opt.to - opt.from) * i / (opt.steps - 1)
                         : opt.from;
    Scenario sc = base;
    std::optional<double> pearl;
    if (virt)
      pearl = x;
    else
      apply_param(sc, opt.param, x);
    const ResolvedScenario rs = resolve(sc);
    const ReportBundle b = build_report(rs, pearl);
    out += fmt_sci(x) + "," + fmt_sci(rs.coil.w_c) + "," +
           fmt_sci(b.coupling.eta_star) + "," + fmt_sci(b.coupling.eta) +
           "," + fmt_sci(2.0 * b.coupling.eta) + "," +
           fmt_sci(b.coupling.g0) + "," + fmt_sci(b.coupling.g0_over_kappa) +
           "," + fmt_sci(b.coupling.Gamma) + "," +
           fmt_sci(b.coupling.cooperativity) + "," +
           fmt_sci(b.lambda_ratio) + "," + fmt_sci(b.eta_with_lambda) + "," +
           fmt_sci(b.corner_field) + "," + safety_label(b.safety) + "\n";
  }
  os << out;
}

void cmd_fieldmap(std::ostream& os, const FieldmapOptions& opt) {
  const Scenario sc = load_scenario(opt.scenario);
  const ResolvedScenario rs = resolve(sc);
  const double w = rs.strip.w;
  FieldmapGrid g;
  g.y0 = opt.y0 ? *opt.y0 : -1.5 * w;
  g.y1 = opt.y1 ? *opt.y1 : 1.5 * w;
  g.z0 = opt.z0 ? *opt.z0 : rs.z_m - 1.5 * w;
  g.z1 = opt.z1 ? *opt.z1 : rs.z_m + 1.5 * w;
  g.ny = opt.ny;
  g.nz = opt.nz;
  os << render_fieldmap(rs, fieldmap_which_from_string(opt.which), g,
                        opt.threads);
}

namespace {

std::vector<int> parse_cell_targets(const std::string& spec) {
  std::vector<int> out;
  std::string cur;
  const auto flush = [&] {
    if (cur.empty()) throw parse_error("mem: empty cell-count entry");
    char* end = nullptr;
    const long v = std::strtol(cur.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0)
      throw parse_error("mem: bad cell count '" + cur + "'");
    out.push_back(static_cast<int>(v));
    cur.clear();
  };
  for (char c : spec) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  return out;
}

} // namespace

void cmd_mem(std::ostream& os, const MemOptions& opt) {
  if (opt.L_over_w.empty()) throw parse_error("mem: need at least one L/w");
  const Scenario sc = load_scenario(opt.scenario);
  const ResolvedScenario rs = resolve(sc);

  std::string out = "L_over_w,N,nx,ny,eta_L,eta_L_over_eta_analytic\n";
  std::vector<std::string> warnings;
  for (double low : opt.L_over_w) {
    if (!(low > 0.0)) throw std::domain_error("mem: require L/w > 0");
    std::vector<int> ny_list;
    if (opt.N_spec == "auto") {
      ny_list = {32, 48, 64};
    } else {
      const int nx = static_cast<int>(std::lround(3.0 * low));
      for (int N : parse_cell_targets(opt.N_spec)) {
        int ny = static_cast<int>(std::lround(double(N) / std::max(nx, 1)));
        if (ny < 4) ny = 4;
        ny_list.push_back(ny);
      }
    }

    // The ideal baseline for the scaled device: strip and coil length both
    // pinned to L_over_w * w, with the mass and zero-point motion refreshed.
    StripSpec strip = rs.strip;
    strip.L = low * strip.w;
    CoilSpec coil = rs.coil;
    coil.L_c = strip.L;
    const double eta_analytic =
        eta_value(strip, rs.cant, coil, rs.amplitude, rs.mode);

    const FiniteLengthResult r =
        eta_finite_length(low, rs.strip, rs.coil, ny_list);
    for (const auto& p : r.points)
      out += fmt_sci(low) + "," + std::to_string(p.N) + "," +
             std::to_string(p.nx) + "," + std::to_string(p.ny) + "," +
             fmt_sci(p.ratio * eta_analytic) + "," + fmt_sci(p.ratio) + "\n";
    if (r.extrapolation_valid)
      out += fmt_sci(low) + ",0,0,0," +
             fmt_sci(r.extrapolated * eta_analytic) + "," +
             fmt_sci(r.extrapolated) + "\n";
    for (const auto& wmsg : r.warnings)
      warnings.push_back("L/w = " + fmt_sci(low) + ": " + wmsg);
  }
  for (const auto& wmsg : warnings) out += "# " + wmsg + "\n";
  os << out;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace mmc
