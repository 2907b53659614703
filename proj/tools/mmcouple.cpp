// mmcouple: numerical design tool for magnetomechanical coupling between a
// superconducting strip on a cantilever and a flux-tunable microwave
// circuit. Subcommands compute single-point reports, parameter sweeps,
// field maps, and finite-length screening studies.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmc/runner.hpp"
#include "mmc/util.hpp"

namespace {

std::vector<double> parse_double_list(const std::string& spec) {
  std::vector<double> out;
  std::string cur;
  const auto flush = [&] {
    if (cur.empty()) throw mmc::parse_error("empty entry in list '" + spec + "'");
    char* end = nullptr;
    const double v = std::strtod(cur.c_str(), &end);
    if (end == nullptr || *end != '\0')
      throw mmc::parse_error("bad number '" + cur + "' in list");
    out.push_back(v);
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

int main(int argc, char** argv) {
  CLI::App app{
      "Magnetomechanical coupling designer: a superconducting strip on a "
      "cantilever read out through a pick-up loop by a flux-tunable "
      "microwave circuit."};
  app.require_subcommand(1);

  std::string scenario;
  std::string out_path;
  std::string format = "text";
  int threads = 1;
  app.add_option("--scenario", scenario,
                 "Bundled scenario name or path to a scenario file")
      ->required();
  app.add_option("--out", out_path, "Write output to this file (default stdout)");
  app.add_option("--threads", threads, "Worker threads for grid evaluation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  auto* rep = app.add_subcommand(
      "report", "Full design report for one scenario (text or csv)");
  rep->fallthrough();

  auto* swp = app.add_subcommand(
      "sweep", "Scan one scenario parameter and tabulate the key outputs");
  swp->fallthrough();
  std::string param;
  double from = 0.0, to = 0.0;
  int steps = 0;
  swp->add_option("--param", param,
                  "Dotted parameter path (e.g. coil.z_c, strip.w, "
                  "circuit.flux_bias, strip.pearl_over_w)")
      ->required();
  swp->add_option("--from", from, "First parameter value")->required();
  swp->add_option("--to", to, "Last parameter value")->required();
  swp->add_option("--steps", steps, "Number of rows (0 = header only)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* fmp = app.add_subcommand(
      "fieldmap", "Evaluate A_x, B_y, B_z on a rectangular grid");
  fmp->fallthrough();
  std::string which = "total";
  double y0 = 0.0, y1 = 0.0, z0 = 0.0, z1 = 0.0;
  int ny = 201, nz = 201;
  auto* oy0 = fmp->add_option("--y0", y0, "Lower y bound [m]");
  auto* oy1 = fmp->add_option("--y1", y1, "Upper y bound [m]");
  auto* oz0 = fmp->add_option("--z0", z0, "Lower z bound [m]");
  auto* oz1 = fmp->add_option("--z1", z1, "Upper z bound [m]");
  fmp->add_option("--ny", ny, "Grid nodes along y")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fmp->add_option("--nz", nz, "Grid nodes along z")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fmp->add_option("--which", which,
                  "Field combination: strip-response, applied or total")
      ->check(CLI::IsMember({"strip-response", "applied", "total"}))
      ->capture_default_str();

  auto* mem = app.add_subcommand(
      "mem", "Finite-length screening study on refined strip meshes");
  mem->fallthrough();
  std::string L_spec = "5,10,20,50";
  std::string N_spec = "auto";
  mem->add_option("--L", L_spec, "Comma-separated strip aspect ratios L/w")
      ->capture_default_str();
  mem->add_option("--N", N_spec,
                  "Cell-count targets: 'auto' for the standard refinement "
                  "ladder, or a comma-separated list")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return mmc::run_guarded(
      [&]() -> int {
        std::ostringstream buf;
        if (rep->parsed()) {
          mmc::ReportOptions o;
          o.scenario = scenario;
          o.format = mmc::format_from_string(format);
          mmc::cmd_report(buf, o);
        } else if (swp->parsed()) {
          mmc::SweepOptions o;
          o.scenario = scenario;
          o.param = param;
          o.from = from;
          o.to = to;
          o.steps = steps;
          mmc::cmd_sweep(buf, o);
        } else if (fmp->parsed()) {
          mmc::FieldmapOptions o;
          o.scenario = scenario;
          o.which = which;
          if (oy0->count()) o.y0 = y0;
          if (oy1->count()) o.y1 = y1;
          if (oz0->count()) o.z0 = z0;
          if (oz1->count()) o.z1 = z1;
          o.ny = ny;
          o.nz = nz;
          o.threads = threads;
          mmc::cmd_fieldmap(buf, o);
        } else {
          mmc::MemOptions o;
          o.scenario = scenario;
          o.L_over_w = parse_double_list(L_spec);
          o.N_spec = N_spec;
          mmc::cmd_mem(buf, o);
        }
        if (out_path.empty()) {
          std::cout << buf.str();
        } else {
          std::ofstream f(out_path, std::ios::binary);
          if (!f)
            throw mmc::parse_error("cannot open output file '" + out_path +
                                   "'");
          f << buf.str();
        }
        return 0;
      },
      std::cerr);
}
