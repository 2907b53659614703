#include "mmc/report.hpp"

#include <cmath>
#include <sstream>

#include "mmc/finite_lambda.hpp"
#include "mmc/util.hpp"

namespace mmc {

ReportBundle build_report(const ResolvedScenario& rs,
                          std::optional<double> pearl_override) {
  ReportBundle b;
  b.rs = rs;
  b.validation = validate_strip(rs.strip);

  const double u = rs.coil.w_c / rs.strip.w;
  const double v = rs.coil.z_c / rs.strip.w;

  double eta;
  double es;
  if (rs.mode == Mode::Quadrupole) {
    b.geom_factor = chi(u, v);
    es = eta_star(rs.z_zp, rs.amplitude, rs.coil.L_c, rs.strip.w);
    eta = es * b.geom_factor;
  } else {
    b.geom_factor = eta_homogeneous_factor(u, v);
    eta = eta_value(rs.strip, rs.cant, rs.coil, rs.amplitude,
                    Mode::Homogeneous);
    // baseline for comparison: the ideal quadrupole bound at this strip's
    // own gradient limit
    es = eta_star(rs.z_zp, max_gradient(rs.strip), rs.coil.L_c, rs.strip.w);
  }
  b.coupling =
      make_coupling_report(rs.circuit, rs.cant, eta, es, b.geom_factor,
                           rs.conv);

  b.corner_field = rs.mode == Mode::Quadrupole
                       ? corner_field_quadrupole(rs.strip, rs.amplitude)
                       : corner_field_homogeneous(rs.strip, rs.amplitude);
  b.safety = field_safety(b.corner_field, rs.strip.B_c);

  b.pearl_over_w = pearl_override ? *pearl_override
                                  : rs.strip.pearl_length() / rs.strip.w;
  b.lambda_ratio = eta_lambda_ratio(b.pearl_over_w, rs.coil, rs.strip);
  b.eta_with_lambda = eta * b.lambda_ratio;

  const double spring_b = rs.mode == Mode::Quadrupole ? rs.amplitude : 0.0;
  b.noise = make_noise_report(rs.coil, rs.strip,
                              rs.mode == Mode::Quadrupole ? b.geom_factor
                                                          : 0.0,
                              rs.wire, rs.noise, rs.M, spring_b,
                              rs.cant.Omega);

  if (rs.wire) {
    b.grad_inhom_est = gradient_inhomogeneity_estimate(*rs.wire, rs.strip.w);
    b.grad_inhom_exact = gradient_inhomogeneity(*rs.wire, rs.strip.w);
  }

  // -------------------------------------------------------------- flags
  const double rb = rs.circuit.ej_ratio_at_bias();
  if (rb < 40.0)
    b.flags.push_back("E_J(bias)/E_C = " + fmt_sci(rb) +
                      " is below 40; the charge-insensitive expansion is "
                      "marginal at this bias");
  if (rs.circuit.flux_bias == 0.0)
    b.flags.push_back("flux bias is zero, so phi = 0 and the transduction "
                      "is switched off (g0 = 0)");
  if (!b.validation.all_pass())
    b.flags.push_back(
        "one or more model-validity checks failed; see validation");
  if (b.safety == SafetyStatus::AtLimit)
    b.flags.push_back("the corner field sits at the critical field; any "
                      "increase of the drive exceeds it");
  if (b.safety == SafetyStatus::Exceeded)
    b.flags.push_back("the corner field exceeds the critical field; this "
                      "operating point is not superconducting");
  if (rs.wire && rs.raw.z_w_nominal) {
    const double rel =
        std::abs(*rs.raw.z_w_nominal - rs.wire->z_w) / rs.wire->z_w;
    if (rel > 0.01)
      b.flags.push_back(
          "the nominal layout wire distance z_w = " +
          fmt_sci(*rs.raw.z_w_nominal) +
          " m is inconsistent with the pinned gradient at the stated "
          "current (derived z_w = " +
          fmt_sci(rs.wire->z_w) + " m); the pinned gradient takes precedence");
  }
  if (rs.wire) {
    const double fI = b.noise.additive.a_I / b.noise.screened.a_I;
    const double fB = b.noise.additive.a_B / b.noise.screened.a_B;
    b.flags.push_back(
        "noise amplification depends on the screening convention: "
        "additive/screened = " +
        fmt_sci(fI) + " (current) and " + fmt_sci(fB) +
        " (bias); both are printed");
  }

  // -------------------------------------------------------- assumptions
  b.assumptions.push_back(
      "omega0 is defined from the single-junction energy, omega0 = "
      "sqrt(8 E_J1 E_C)/hbar, with the bias entering through E_J(f) = "
      "2 E_J1 cos(pi f)");
  b.assumptions.push_back(
      std::string("Gamma uses the ") +
      omega_convention_label(rs.conv) +
      " occupation convention: Omega_eff = " +
      (rs.conv == OmegaConvention::Cyclic ? "Omega/2pi" : "Omega"));
  b.assumptions.push_back(
      "the magnetic spring frequency is reported alongside but not folded "
      "into the mechanical mode used for z_zp and Gamma");
  b.assumptions.push_back(
      "coupling numbers assume ideal screening; the finite-screening "
      "reduction is listed under finite-pearl");
  if (rs.mode == Mode::Homogeneous)
    b.assumptions.push_back(
        "the comparison amplitude pins B_a = B_c sqrt(t/w), the edge-field "
        "limit divided by sqrt(2), and eta_star is the ideal quadrupole "
        "bound at this strip's own gradient limit");
  if (rs.wire)
    b.assumptions.push_back(
        "the wire scale z_w is derived from the pinned gradient at the "
        "stated current; a nominal z_w in the scenario is informational "
        "only");
  return b;
}

namespace {

// Free-text values (flags, assumptions) may contain commas.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

void emit_pairs(std::ostream& o, bool csv, const std::string& section,
                const std::vector<std::pair<std::string, std::string>>& rows) {
  if (!csv) o << "\n[" << section << "]\n";
  for (const auto& [k, val] : rows) {
    if (csv)
      o << section << "," << k << "," << csv_field(val) << "\n";
    else
      o << k << " = " << val << "\n";
  }
}

std::string render_report(const ReportBundle& b, bool csv) {
  std::ostringstream o;
  const ResolvedScenario& rs = b.rs;
  using Rows = std::vector<std::pair<std::string, std::string>>;

  if (csv)
    o << "section,key,value\n";
  else
    o << "report for scenario '" << rs.raw.name << "'\n";

  Rows meta = {{"scenario", rs.raw.name},
               {"source", source_type_label(rs.raw.source)},
               {"mode", rs.mode == Mode::Quadrupole ? "quadrupole"
                                                    : "homogeneous"}};
  emit_pairs(o, csv, "meta", meta);

  Rows val;
  for (const auto& c : b.validation.checks)
    val.push_back({c.name, std::string(c.pass ? "pass" : "FAIL") +
                               " (measured " + fmt_sci(c.measured) +
                               ", threshold " + fmt_sci(c.threshold) + ")"});
  emit_pairs(o, csv, "validation", val);

  if (!rs.notes.empty()) {
    Rows notes;
    for (std::size_t i = 0; i < rs.notes.size(); ++i)
      notes.push_back({"note" + std::to_string(i + 1), rs.notes[i]});
    emit_pairs(o, csv, "resolution", notes);
  }

  Rows der = {
      {"M_kg", fmt_sci(rs.M)},
      {"z_zp_m", fmt_sci(rs.z_zp)},
      {"pearl_length_m", fmt_sci(rs.strip.pearl_length())},
      {"pearl_over_w", fmt_sci(b.pearl_over_w)},
      {rs.mode == Mode::Quadrupole ? "b_T_per_m" : "B_a_T",
       fmt_sci(rs.amplitude)},
      {"corner_field_T", fmt_sci(b.corner_field)},
      {"safety", safety_label(b.safety)},
  };
  if (rs.wire) {
    der.push_back({"I_w_A", fmt_sci(rs.wire->I_w)});
    der.push_back({"z_w_m", fmt_sci(rs.wire->z_w)});
    der.push_back({"B_b_T", fmt_sci(rs.wire->bias_field())});
    der.push_back({"grad_inhom_estimate", fmt_sci(b.grad_inhom_est)});
    der.push_back({"grad_inhom_exact", fmt_sci(b.grad_inhom_exact)});
  }
  emit_pairs(o, csv, "derived", der);

  const CouplingReport& c = b.coupling;
  Rows cpl = {
      {rs.mode == Mode::Quadrupole ? "chi" : "geometry_factor",
       fmt_sci(b.geom_factor)},
      {"w_c_over_w", fmt_sci(rs.coil.w_c / rs.strip.w)},
      {"eta_star", fmt_sci(c.eta_star)},
      {"eta", fmt_sci(c.eta)},
      {"two_eta", fmt_sci(2.0 * c.eta)},
      {"eta_over_eta_star", fmt_sci(c.eta / c.eta_star)},
      {"phi", fmt_sci(c.phi)},
      {"omega0_rad_s", fmt_sci(c.omega0)},
      {"omega0_over_2pi_Hz", fmt_sci(c.omega0 / (2.0 * pi))},
      {"omega_at_bias_rad_s", fmt_sci(c.omega_at_bias)},
      {"kappa_rad_s", fmt_sci(c.kappa)},
      {"g0_rad_s", fmt_sci(c.g0)},
      {"g0_over_2pi_Hz", fmt_sci(c.g0 / (2.0 * pi))},
      {"g0_over_kappa", fmt_sci(c.g0_over_kappa)},
      {"Gamma_rad_s", fmt_sci(c.Gamma)},
      {"Gamma_over_2pi_Hz", fmt_sci(c.Gamma / (2.0 * pi))},
      {"Gamma_convention", omega_convention_label(c.gamma_convention)},
      {"cooperativity", fmt_sci(c.cooperativity)},
      {"ej0_over_ec", fmt_sci(rs.circuit.ej0_over_ec())},
      {"ej_bias_over_ec", fmt_sci(rs.circuit.ej_ratio_at_bias())},
  };
  emit_pairs(o, csv, "coupling", cpl);

  Rows fp = {
      {"eta_lambda_ratio", fmt_sci(b.lambda_ratio)},
      {"eta_with_lambda", fmt_sci(b.eta_with_lambda)},
  };
  emit_pairs(o, csv, "finite-pearl", fp);

  Rows nz;
  if (b.noise.has_wire) {
    nz.push_back({"zeta", fmt_sci(b.noise.zeta)});
    nz.push_back({"zeta_field", fmt_sci(b.noise.zeta_field)});
    nz.push_back({"a_I_screened", fmt_sci(b.noise.screened.a_I)});
    nz.push_back({"a_B_screened", fmt_sci(b.noise.screened.a_B)});
    nz.push_back({"a_I_additive", fmt_sci(b.noise.additive.a_I)});
    nz.push_back({"a_B_additive", fmt_sci(b.noise.additive.a_B)});
    nz.push_back({"S_Phi_rel_per_Hz", fmt_sci(b.noise.S_Phi_rel)});
    nz.push_back(
        {"sqrt_S_Phi_rel", fmt_sci(std::sqrt(b.noise.S_Phi_rel))});
  }
  nz.push_back({"Omega_m_rad_s", fmt_sci(b.noise.Omega_m)});
  nz.push_back({"Omega_m_over_2pi_Hz", fmt_sci(b.noise.Omega_m / (2.0 * pi))});
  nz.push_back({"R_02_rad_s", fmt_sci(b.noise.R_02)});
  nz.push_back({"R_02_over_2pi_Hz", fmt_sci(b.noise.R_02 / (2.0 * pi))});
  nz.push_back({"R_02_below_g0_over_100",
                b.noise.R_02 < 0.01 * b.coupling.g0 ? "yes" : "no"});
  emit_pairs(o, csv, "noise", nz);

  if (!b.flags.empty()) {
    Rows fl;
    for (std::size_t i = 0; i < b.flags.size(); ++i)
      fl.push_back({"flag" + std::to_string(i + 1), b.flags[i]});
    emit_pairs(o, csv, "flags", fl);
  }
  Rows as;
  for (std::size_t i = 0; i < b.assumptions.size(); ++i)
    as.push_back({"assumption" + std::to_string(i + 1), b.assumptions[i]});
  emit_pairs(o, csv, "assumptions", as);

  return o.str();
}

} // namespace

std::string render_report_text(const ReportBundle& b) {
  return render_report(b, false);
}

std::string render_report_csv(const ReportBundle& b) {
  return render_report(b, true);
}

} // namespace mmc
