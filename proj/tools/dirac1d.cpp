// dirac1d: energy scans, phase maps, point-limit convergence and oracle checks
// for 1D Dirac scattering off piecewise-constant scalar/vector potentials.
//
// Exit codes: 0 success, 1 invalid spec, 2 I/O error, 3 internal numeric error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dirac1d/dirac1d.hpp"

namespace
{

using namespace dirac1d;
using namespace dirac1d::scan;

struct IoError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path)
{
  if (path.empty() || path == "-")
  {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

Kinematics parse_kinematics(const std::string& s)
{
  if (s == "exact") return Kinematics::Exact;
  if (s == "nonrel" || s == "nonrelativistic") return Kinematics::NonRelativistic;
  throw SpecError("--kinematics", "expected exact or nonrel, got \"" + s + "\"");
}

struct Common
{
  Parameters params;
  std::string w_range;
  std::string out;
  std::string plot;
  std::string kinematics = "nonrel";
};

void add_potential(CLI::App* app, Common& c, bool with_width)
{
  app->add_option("--m", c.params.m, "rest mass (sets the energy scale)")->capture_default_str();
  app->add_option("--s", c.params.s, "scalar potential strength")->capture_default_str();
  app->add_option("--v", c.params.v, "vector potential strength")->capture_default_str();
  if (with_width) app->add_option("--L", c.params.L, "barrier width")->capture_default_str();
}

void add_outputs(CLI::App* app, Common& c)
{
  app->add_option("--out", c.out, "CSV output path (default stdout)");
  app->add_option("--plot", c.plot, "SVG plot output path");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"dirac1d - scattering of a 1D Dirac particle off scalar/vector potentials"};
  app.require_subcommand(1);

  // scan
  Common scan_opts;
  std::string scan_mode;
  auto* scan_cmd = app.add_subcommand("scan", "energy scan of R, T (step|barrier|point|effmass)");
  scan_cmd->add_option("mode", scan_mode, "step, barrier, point or effmass")->required();
  add_potential(scan_cmd, scan_opts, true);
  scan_cmd->add_option("--vbar", scan_opts.params.vbar, "vector volume integral (point mode)");
  scan_cmd->add_option("--sbar", scan_opts.params.sbar, "scalar volume integral (point mode)");
  scan_cmd->add_option("--w", scan_opts.w_range, "energy range [log:]min:max:count")->required();
  scan_cmd->add_option("--kinematics", scan_opts.kinematics, "effmass mode: exact or nonrel")->capture_default_str();
  add_outputs(scan_cmd, scan_opts);

  // phase-map
  PhaseMapSpec pm;
  std::string grid = "v=-1:5:121,w=-3:5:161";
  std::string pm_out, pm_plot;
  auto* pm_cmd = app.add_subcommand("phase-map", "spectral-region map over (v, w) or (s, v)");
  pm_cmd->add_option("--m", pm.m, "rest mass")->capture_default_str();
  pm_cmd->add_option("--grid", grid, "two axes, e.g. v=-1:5:121,w=-3:5:161 or s=-3:3:61,v=-3:3:61")
      ->capture_default_str();
  pm_cmd->add_option("--ratio", pm.ratio, "s = ratio * v on a (v, w) grid")->capture_default_str();
  pm_cmd->add_option("--at-w", pm.w, "fixed energy on an (s, v) grid")->capture_default_str();
  pm_cmd->add_option("--out", pm_out, "CSV output path (default stdout)");
  pm_cmd->add_option("--plot", pm_plot, "SVG region map output path");

  // converge
  ConvergenceSpec cv;
  std::string cv_out, cv_plot;
  auto* cv_cmd = app.add_subcommand("converge", "L -> 0 convergence of the barrier to the point interaction");
  cv_cmd->add_option("--m", cv.m, "rest mass")->capture_default_str();
  cv_cmd->add_option("--w", cv.w, "energy")->capture_default_str();
  cv_cmd->add_option("--vbar", cv.strengths.vbar, "vector volume integral")->capture_default_str();
  cv_cmd->add_option("--sbar", cv.strengths.sbar, "scalar volume integral")->capture_default_str();
  cv_cmd->add_option("--L0", cv.L0, "largest width")->capture_default_str();
  cv_cmd->add_option("--levels", cv.levels, "number of halvings + 1")->capture_default_str();
  cv_cmd->add_option("--out", cv_out, "CSV output path (default stdout)");
  cv_cmd->add_option("--plot", cv_plot, "SVG plot of err_T versus L");

  // point
  Common pt_opts;
  pt_opts.w_range = "log:1e-6:10:200";
  auto* pt_cmd = app.add_subcommand("point", "point-interaction parameters and amplitudes");
  pt_cmd->add_option("--m", pt_opts.params.m, "rest mass")->capture_default_str();
  pt_cmd->add_option("--vbar", pt_opts.params.vbar, "vector volume integral")->capture_default_str();
  pt_cmd->add_option("--sbar", pt_opts.params.sbar, "scalar volume integral")->capture_default_str();
  pt_cmd->add_option("--w", pt_opts.w_range, "energy range [log:]min:max:count")->capture_default_str();
  add_outputs(pt_cmd, pt_opts);

  // effmass-compare
  Common em_opts;
  auto* em_cmd = app.add_subcommand("effmass-compare", "Dirac barrier versus its effective-mass analogue");
  add_potential(em_cmd, em_opts, true);
  em_cmd->add_option("--w", em_opts.w_range, "energy range [log:]min:max:count")->required();
  em_cmd->add_option("--kinematics", em_opts.kinematics, "exact or nonrel")->capture_default_str();
  add_outputs(em_cmd, em_opts);

  // oracle-verify
  std::string profile_path, ov_w = "log:1e-3:10:100", ov_out;
  double ov_m = 1.0;
  int draws = 0;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  auto* ov_cmd = app.add_subcommand("oracle-verify", "transfer-matrix oracle on a profile file or random draws");
  ov_cmd->add_option("--profile", profile_path, "profile file, one \"s v L\" per line");
  ov_cmd->add_option("--m", ov_m, "rest mass (profile mode)")->capture_default_str();
  ov_cmd->add_option("--w", ov_w, "energy range (profile mode)")->capture_default_str();
  ov_cmd->add_option("--draws", draws, "random single-segment comparisons against the closed form");
  ov_cmd->add_option("--seed", seed, "seed for --draws")->capture_default_str();
  ov_cmd->add_option("--tolerance", tolerance, "max |difference| accepted in --draws mode")->capture_default_str();
  ov_cmd->add_option("--out", ov_out, "CSV output path (default stdout)");

  // ramp-probe
  double rp_m = 1.0, rp_w = 1.0;
  RampProbeSpec rp{PotentialSegment{0.0, 4.0}};
  std::string rp_out;
  auto* rp_cmd = app.add_subcommand("ramp-probe", "|phi/chi| at the foot of a steepening ramp into the Dirac sea");
  rp_cmd->add_option("--m", rp_m, "rest mass")->capture_default_str();
  rp_cmd->add_option("--w", rp_w, "energy")->capture_default_str();
  rp_cmd->add_option("--s", rp.target.s, "target scalar potential")->capture_default_str();
  rp_cmd->add_option("--v", rp.target.v, "target vector potential")->capture_default_str();
  rp_cmd->add_option("--width", rp.initial_width, "initial ramp width")->capture_default_str();
  rp_cmd->add_option("--doublings", rp.doublings, "steepness doublings")->capture_default_str();
  rp_cmd->add_option("--steps", rp.steps, "slabs per ramp")->capture_default_str();
  rp_cmd->add_option("--out", rp_out, "CSV output path (default stdout)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e);
    return 1;
  }

  try
  {
    if (*scan_cmd)
    {
      ScanSpec spec{parse_mode(scan_mode), scan_opts.params, parse_range(scan_opts.w_range, "--w")};
      spec.params.kinematics = parse_kinematics(scan_opts.kinematics);
      const Table t = run_scan(spec);
      emit(to_csv(t), scan_opts.out);
      if (!scan_opts.plot.empty())
      {
        PlotSpec plot{"w", {"T_abs2", "R_abs2"}, spec.w.log, "dirac1d " + to_string(spec.mode) + " scan"};
        plot.y_label = spec.mode == Mode::Step ? "|T|^2 (penetration amplitude in the gap), |R|^2" : "|T|^2, |R|^2";
        emit(to_svg(t, plot), scan_opts.plot);
      }
    }
    else if (*pm_cmd)
    {
      parse_grid(grid, pm);
      const Table t = run_phase_map(pm);
      emit(to_csv(t), pm_out);
      if (!pm_plot.empty()) emit(phase_map_svg(t, pm), pm_plot);
    }
    else if (*cv_cmd)
    {
      const Table t = run_convergence(cv);
      emit(to_csv(t), cv_out);
      if (!cv_plot.empty())
        emit(to_svg(t, PlotSpec{"L", {"err_T", "err_R"}, true, "|T(L) - T_point|", "error"}), cv_plot);
    }
    else if (*pt_cmd)
    {
      const PointInteraction pi = point_from_volume_integrals({pt_opts.params.vbar, pt_opts.params.sbar});
      const BetaParameter beta = beta_parameter({pt_opts.params.vbar, pt_opts.params.sbar});
      ScanSpec spec{Mode::Point, pt_opts.params, parse_range(pt_opts.w_range, "--w")};
      Table t = run_scan(spec);
      t.meta.push_back("beta_squared=" + format_number(beta.beta_squared) + " alpha=" + format_number(pi.alpha) +
                       " u_plus=" + format_number(pi.u_plus) + " u_minus=" + format_number(pi.u_minus) +
                       " blocked=" + (pi.blocked ? "1" : "0"));
      emit(to_csv(t), pt_opts.out);
      if (!pt_opts.plot.empty())
        emit(to_svg(t, PlotSpec{"w", {"T_abs2", "R_abs2"}, spec.w.log, "point interaction", "|T|^2, |R|^2"}),
             pt_opts.plot);
    }
    else if (*em_cmd)
    {
      ScanSpec spec{Mode::Effmass, em_opts.params, parse_range(em_opts.w_range, "--w")};
      spec.params.kinematics = parse_kinematics(em_opts.kinematics);
      const Table t = run_effmass_compare(spec);
      emit(to_csv(t), em_opts.out);
      if (!em_opts.plot.empty())
        emit(to_svg(t, PlotSpec{"w", {"T_abs2_dirac", "T_abs2_effmass"}, spec.w.log, "Dirac vs effective mass",
                                "|T|^2"}),
             em_opts.plot);
    }
    else if (*ov_cmd)
    {
      if (profile_path.empty() == (draws == 0))
        throw SpecError("oracle-verify", "give exactly one of --profile or --draws");
      if (!profile_path.empty())
      {
        std::ifstream in(profile_path);
        if (!in) throw IoError("cannot open profile " + profile_path);
        ProfileSpec profile;
        try
        {
          profile = parse_profile(in);
        }
        catch (const ProfileParseError& e)
        {
          throw SpecError(profile_path, e.what());
        }
        emit(to_csv(run_oracle_profile(ov_m, profile, parse_range(ov_w, "--w"))), ov_out);
      }
      else
      {
        const OracleSweep sweep = run_oracle_random(draws, seed);
        emit(to_csv(sweep.table), ov_out);
        std::cerr << "max |analytic - oracle| = " << format_number(sweep.max_diff) << "\n";
        if (!(sweep.max_diff < tolerance)) return 3;
      }
    }
    else if (*rp_cmd)
    {
      emit(to_csv(run_ramp_probe(Particle{rp_m, rp_w}, rp)), rp_out);
    }
  }
  catch (const SpecError& e)
  {
    std::cerr << "dirac1d: invalid spec: " << e.what() << "\n";
    return 1;
  }
  catch (const std::invalid_argument& e)
  {
    std::cerr << "dirac1d: invalid spec: " << e.what() << "\n";
    return 1;
  }
  catch (const IoError& e)
  {
    std::cerr << "dirac1d: " << e.what() << "\n";
    return 2;
  }
  catch (const std::exception& e)
  {
    std::cerr << "dirac1d: internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
