#pragma once

/** @file dirac1d/scan.hpp
    @brief Parameter sweeps, CSV tables and SVG plots behind the dirac1d CLI.

    Every sweep produces a Table; CSV and SVG are both rendered from the same
    Table so a plot never shows values that are not in its CSV. Numbers are
    written with 17 significant digits and rows are ordered by sweep index, so
    identical specs give byte-identical files regardless of thread count.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dirac1d/barrier.hpp"
#include "dirac1d/effmass.hpp"
#include "dirac1d/kinematics.hpp"
#include "dirac1d/point.hpp"
#include "dirac1d/step.hpp"
#include "dirac1d/transfer.hpp"

namespace dirac1d::scan
{

/// Invalid user input; `field` names the offending flag or spec entry.
class SpecError : public std::invalid_argument
{
public:
  SpecError(std::string field, const std::string& what)
    : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

inline std::string format_number(double x)
{
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// -- ranges -----------------------------------------------------------------

struct Range
{
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  bool log = false;

  std::vector<double> values() const
  {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
    {
      const double t = static_cast<double>(i) / (count - 1);
      out[i] = log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                   : min + t * (max - min);
    }
    out.front() = min;
    out.back() = max;
    return out;
  }

  std::string to_string() const
  {
    return std::string(log ? "log:" : "") + format_number(min) + ":" + format_number(max) + ":" +
           std::to_string(count);
  }
};

/// Parses "min:max:count" or "log:min:max:count".
inline Range parse_range(const std::string& text, const std::string& field)
{
  std::string body = text;
  Range r;
  if (body.rfind("log:", 0) == 0)
  {
    r.log = true;
    body = body.substr(4);
  }
  std::vector<std::string> parts;
  std::stringstream ss(body);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3)
    throw SpecError(field, "expected [log:]min:max:count, got \"" + text + "\"");
  try
  {
    std::size_t used = 0;
    r.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("min");
    r.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("max");
    r.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  }
  catch (const std::exception&)
  {
    throw SpecError(field, "malformed range \"" + text + "\"");
  }
  if (r.count < 2) throw SpecError(field, "count must be >= 2");
  if (!(r.max > r.min)) throw SpecError(field, "range must satisfy min < max");
  if (r.log && !(r.min > 0.0)) throw SpecError(field, "log range needs positive endpoints");
  return r;
}

// -- tables -----------------------------------------------------------------

struct Table
{
  std::vector<std::string> meta;      ///< written as "# " lines
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const
  {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::out_of_range("no column " + name);
    return static_cast<std::size_t>(it - columns.begin());
  }

  std::vector<double> numeric(const std::string& name) const
  {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(std::strtod(row[c].c_str(), nullptr));
    return out;
  }
};

inline std::string to_csv(const Table& t)
{
  std::string out;
  for (const auto& m : t.meta) out += "# " + m + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += "\n";
  for (const auto& row : t.rows)
  {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

// -- parallel rows ----------------------------------------------------------

/// Worker count: hardware concurrency, capped by DIRAC1D_THREADS when set.
inline unsigned worker_count()
{
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DIRAC1D_THREADS"))
  {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// Fills out[i] = fn(i); the result does not depend on the worker count.
template <typename Fn>
std::vector<std::vector<std::string>> parallel_rows(std::size_t count, Fn fn)
{
  std::vector<std::vector<std::string>> out(count);
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1)
  {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += workers) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

// -- energy scans -----------------------------------------------------------

struct Parameters
{
  double m = 1.0;
  double s = 0.0;
  double v = 0.0;
  double L = 1.0;
  double vbar = 0.0;
  double sbar = 0.0;
  Kinematics kinematics = Kinematics::NonRelativistic;   ///< effmass mode only
};

enum class Mode { Step, Barrier, Point, Effmass };

inline Mode parse_mode(const std::string& s)
{
  if (s == "step") return Mode::Step;
  if (s == "barrier") return Mode::Barrier;
  if (s == "point") return Mode::Point;
  if (s == "effmass") return Mode::Effmass;
  throw SpecError("mode", "unknown scan mode \"" + s + "\" (step|barrier|point|effmass)");
}

inline std::string to_string(Mode m)
{
  switch (m)
  {
    case Mode::Step: return "step";
    case Mode::Barrier: return "barrier";
    case Mode::Point: return "point";
    case Mode::Effmass: return "effmass";
  }
  return "?";
}

struct ScanSpec
{
  Mode mode = Mode::Barrier;
  Parameters params;
  Range w;
};

inline void validate(const ScanSpec& spec)
{
  if (!(spec.params.m > 0.0)) throw SpecError("--m", "mass must be > 0");
  if (spec.mode == Mode::Barrier || spec.mode == Mode::Effmass)
    if (!(spec.params.L > 0.0) || std::isinf(spec.params.L)) throw SpecError("--L", "width must be finite and > 0");
  if (spec.w.count < 2) throw SpecError("--w", "count must be >= 2");
  if (!(spec.w.max > spec.w.min)) throw SpecError("--w", "range must satisfy min < max");
  if (spec.w.log && !(spec.w.min > 0.0)) throw SpecError("--w", "log range needs positive endpoints");
}

inline const std::vector<std::string>& scan_columns()
{
  static const std::vector<std::string> cols{"w",      "R_re",   "R_im",   "T_re",  "T_im",
                                             "R_abs2", "T_abs2", "region", "defect", "error"};
  return cols;
}

struct ScanRow
{
  double w;
  complex R{NAN, NAN};
  complex T{NAN, NAN};
  std::string region;
  double defect = NAN;
  std::string error;

  std::vector<std::string> cells() const
  {
    return {format_number(w),           format_number(R.real()), format_number(R.imag()),
            format_number(T.real()),    format_number(T.imag()), format_number(std::norm(R)),
            format_number(std::norm(T)), region,                 format_number(defect),
            error};
  }
};

inline ScanRow scan_point(const ScanSpec& spec, double w)
{
  const Parameters& p = spec.params;
  const Particle pt{p.m, w};
  const PotentialSegment seg{p.s, p.v, p.L};
  ScanRow row;
  row.w = w;
  try
  {
    switch (spec.mode)
    {
      case Mode::Step:
      {
        const ScatterAmplitudes a = step_amplitudes(pt, PotentialSegment{p.s, p.v});
        row.R = a.R; row.T = a.T;
        row.region = std::string(to_string(a.region));
        row.defect = flux_unitarity_defect(a);
        break;
      }
      case Mode::Barrier:
      {
        const BarrierSolution a = barrier_amplitudes(pt, seg);
        row.R = a.R; row.T = a.T;
        row.region = std::string(to_string(a.region));
        row.defect = unitarity_defect(a);
        break;
      }
      case Mode::Point:
      {
        const PointInteraction pi = point_from_volume_integrals({p.vbar, p.sbar});
        const Amplitudes a = point_amplitudes(pi, pt);
        row.R = a.R; row.T = a.T;
        row.region = pi.blocked ? "blocked" : "open";
        row.defect = unitarity_defect(a);
        break;
      }
      case Mode::Effmass:
      {
        row.region = std::string(to_string(classify_region(pt, seg)));
        const MediumOptions opts{p.kinematics};
        const EffectiveMedium outside = effective_medium(pt, PotentialSegment{}, opts);
        const MediumSlab slab{effective_medium(pt, seg, opts), p.L};
        const Amplitudes a = effmass_barrier_amplitudes(outside.m_star, w, slab);
        row.R = a.R; row.T = a.T;
        row.defect = unitarity_defect(a);
        break;
      }
    }
  }
  catch (const NonexistentAnalogue&)
  {
    row.error = "nonexistent-analogue";
  }
  catch (const std::exception&)
  {
    row.error = "invalid-input";
  }
  return row;
}

inline std::vector<std::string> describe(const ScanSpec& spec)
{
  const Parameters& p = spec.params;
  std::vector<std::string> meta{"dirac1d scan", "mode=" + to_string(spec.mode)};
  switch (spec.mode)
  {
    case Mode::Step:
      meta.push_back("m=" + format_number(p.m) + " s=" + format_number(p.s) + " v=" + format_number(p.v));
      break;
    case Mode::Barrier:
      meta.push_back("m=" + format_number(p.m) + " s=" + format_number(p.s) + " v=" + format_number(p.v) +
                     " L=" + format_number(p.L));
      break;
    case Mode::Point:
      meta.push_back("m=" + format_number(p.m) + " vbar=" + format_number(p.vbar) +
                     " sbar=" + format_number(p.sbar));
      break;
    case Mode::Effmass:
      meta.push_back("m=" + format_number(p.m) + " s=" + format_number(p.s) + " v=" + format_number(p.v) +
                     " L=" + format_number(p.L) + " kinematics=" +
                     (p.kinematics == Kinematics::Exact ? "exact" : "nonrelativistic"));
      break;
  }
  meta.push_back("w=" + spec.w.to_string());
  return meta;
}

inline Table run_scan(const ScanSpec& spec)
{
  validate(spec);
  const std::vector<double> ws = spec.w.values();
  Table t{describe(spec), scan_columns(), {}};
  t.rows = parallel_rows(ws.size(), [&](std::size_t i) { return scan_point(spec, ws[i]).cells(); });
  return t;
}

// -- phase map --------------------------------------------------------------

/** Region map over two of (s, v, w).
    With axes v and w the scalar follows s = ratio * v;
    with axes s and v the energy is fixed at `w`.
 */
struct PhaseMapSpec
{
  double m = 1.0;
  std::string x_name = "v";
  Range x{-1.0, 5.0, 121, false};
  std::string y_name = "w";
  Range y{-3.0, 5.0, 161, false};
  double ratio = 0.0;
  double w = 0.5;
};

/// Parses "v=min:max:count,w=min:max:count" (or s/v axes).
inline void parse_grid(const std::string& text, PhaseMapSpec& spec)
{
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw SpecError("--grid", "expected two axes \"x=range,y=range\"");
  auto axis = [&](const std::string& part, std::string& name, Range& range) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw SpecError("--grid", "axis \"" + part + "\" lacks '='");
    name = part.substr(0, eq);
    if (name != "s" && name != "v" && name != "w") throw SpecError("--grid", "unknown axis \"" + name + "\"");
    range = parse_range(part.substr(eq + 1), "--grid " + name);
  };
  axis(text.substr(0, comma), spec.x_name, spec.x);
  axis(text.substr(comma + 1), spec.y_name, spec.y);
  const bool vw = spec.x_name == "v" && spec.y_name == "w";
  const bool sv = spec.x_name == "s" && spec.y_name == "v";
  if (!vw && !sv) throw SpecError("--grid", "supported axis pairs are v,w and s,v");
}

inline Table run_phase_map(const PhaseMapSpec& spec)
{
  if (!(spec.m > 0.0)) throw SpecError("--m", "mass must be > 0");
  const std::vector<double> xs = spec.x.values();
  const std::vector<double> ys = spec.y.values();
  const bool vw = spec.x_name == "v";

  Table t;
  t.meta = {"dirac1d phase-map", "m=" + format_number(spec.m),
            spec.x_name + "=" + spec.x.to_string(), spec.y_name + "=" + spec.y.to_string(),
            vw ? "s=ratio*v ratio=" + format_number(spec.ratio) : "w=" + format_number(spec.w)};
  t.columns = {"s", "v", "w", "region", "Q"};
  t.rows = parallel_rows(xs.size() * ys.size(), [&](std::size_t idx) {
    const double x = xs[idx / ys.size()];
    const double y = ys[idx % ys.size()];
    const double v = vw ? x : y;
    const double s = vw ? spec.ratio * x : x;
    const double w = vw ? y : spec.w;
    const Particle pt{spec.m, w};
    const PotentialSegment seg{s, v};
    return std::vector<std::string>{format_number(s), format_number(v), format_number(w),
                                    std::string(to_string(classify_region(pt, seg))),
                                    std::to_string(sea_exclusion_factor(pt, seg))};
  });
  return t;
}

// -- L -> 0 convergence -----------------------------------------------------

struct ConvergenceSpec
{
  double m = 1.0;
  double w = 1.0;
  VolumeStrengths strengths;
  double L0 = 0.1;
  int levels = 7;
};

/// Least-squares slope of log(err) against log(L); NaN if any error is zero.
inline double fitted_order(const std::vector<double>& Ls, const std::vector<double>& errs)
{
  const std::size_t n = Ls.size();
  if (n < 2) return NAN;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (!(errs[i] > 0.0)) return NAN;
    const double x = std::log(Ls[i]);
    const double y = std::log(errs[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct ConvergenceResult
{
  Amplitudes point;
  std::vector<double> L;
  std::vector<double> error_T;
  std::vector<double> error_R;
  double order;
};

inline ConvergenceResult convergence_study(const ConvergenceSpec& spec)
{
  if (!(spec.m > 0.0)) throw SpecError("--m", "mass must be > 0");
  if (!(spec.w > 0.0)) throw SpecError("--w", "energy must be > 0");
  if (!(spec.L0 > 0.0)) throw SpecError("--L0", "initial width must be > 0");
  if (spec.levels < 2) throw SpecError("--levels", "need at least 2 levels");

  const Particle pt{spec.m, spec.w};
  ConvergenceResult out;
  out.point = point_amplitudes(point_from_volume_integrals(spec.strengths), pt);
  double L = spec.L0;
  for (int n = 0; n < spec.levels; ++n, L *= 0.5)
  {
    const BarrierSolution b = shrinking_barrier_amplitudes(spec.strengths, pt, L);
    out.L.push_back(L);
    out.error_T.push_back(std::abs(b.T - out.point.T));
    out.error_R.push_back(std::abs(b.R - out.point.R));
  }
  out.order = fitted_order(out.L, out.error_T);
  return out;
}

inline Table run_convergence(const ConvergenceSpec& spec)
{
  const ConvergenceResult r = convergence_study(spec);
  Table t;
  t.meta = {"dirac1d converge",
            "m=" + format_number(spec.m) + " w=" + format_number(spec.w) + " vbar=" +
                format_number(spec.strengths.vbar) + " sbar=" + format_number(spec.strengths.sbar),
            "T_point=" + format_number(r.point.T.real()) + "," + format_number(r.point.T.imag()),
            "order=" + format_number(r.order)};
  t.columns = {"L", "err_T", "err_R", "ratio"};
  for (std::size_t i = 0; i < r.L.size(); ++i)
  {
    const double ratio = i == 0 ? NAN : r.error_T[i - 1] / r.error_T[i];
    t.rows.push_back({format_number(r.L[i]), format_number(r.error_T[i]), format_number(r.error_R[i]),
                      format_number(ratio)});
  }
  return t;
}

// -- effective-mass comparison ----------------------------------------------

inline Table run_effmass_compare(const ScanSpec& spec)
{
  validate(spec);
  const Parameters& p = spec.params;
  const std::vector<double> ws = spec.w.values();
  Table t;
  t.meta = describe(spec);
  t.meta[0] = "dirac1d effmass-compare";
  t.columns = {"w", "T_abs2_dirac", "T_abs2_effmass", "rel_diff", "m_star", "error"};
  t.rows = parallel_rows(ws.size(), [&](std::size_t i) {
    const double w = ws[i];
    const Particle pt{p.m, w};
    const PotentialSegment seg{p.s, p.v, p.L};
    std::vector<std::string> row{format_number(w)};
    try
    {
      const double dirac = std::norm(barrier_amplitudes(pt, seg).T);
      const MediumOptions opts{p.kinematics};
      const EffectiveMedium inside = effective_medium(pt, seg, opts);
      const double outside = effective_medium(pt, PotentialSegment{}, opts).m_star;
      const double eff = std::norm(effmass_barrier_amplitudes(outside, w, MediumSlab{inside, p.L}).T);
      row.insert(row.end(), {format_number(dirac), format_number(eff),
                             format_number(std::abs(dirac - eff) / dirac), format_number(inside.m_star), ""});
    }
    catch (const NonexistentAnalogue& e)
    {
      row.insert(row.end(), {"nan", "nan", "nan", format_number(e.m_star()), "nonexistent-analogue"});
    }
    return row;
  });
  return t;
}

// -- oracle verification ----------------------------------------------------

/// Oracle amplitudes for a profile over an energy range; single-segment
/// profiles are also compared with the closed-form barrier.
inline Table run_oracle_profile(double m, const ProfileSpec& profile, const Range& w)
{
  if (!(m > 0.0)) throw SpecError("--m", "mass must be > 0");
  validate_profile(profile.segments);
  const std::vector<double> ws = w.values();
  const bool single = profile.segments.size() == 1;
  Table t;
  t.meta = {"dirac1d oracle-verify", "m=" + format_number(m), "w=" + w.to_string(),
            "segments=" + std::to_string(profile.segments.size())};
  for (const auto& s : profile.segments)
    t.meta.push_back("segment s=" + format_number(s.s) + " v=" + format_number(s.v) + " L=" + format_number(s.L));
  t.columns = {"w", "R_re", "R_im", "T_re", "T_im", "R_abs2", "T_abs2", "blocked", "defect", "diff_analytic"};
  t.rows = parallel_rows(ws.size(), [&](std::size_t i) {
    const Particle pt{m, ws[i]};
    try
    {
      const OracleResult o = profile_scatter(pt, profile);
      double diff = NAN;
      if (single)
      {
        const BarrierSolution b = barrier_amplitudes(pt, profile.segments.front());
        diff = std::max(std::abs(b.R - o.R), std::abs(b.T - o.T));
      }
      return std::vector<std::string>{
          format_number(ws[i]),        format_number(o.R.real()),    format_number(o.R.imag()),
          format_number(o.T.real()),   format_number(o.T.imag()),    format_number(std::norm(o.R)),
          format_number(std::norm(o.T)), o.blocked ? "1" : "0",
          format_number(std::norm(o.R) + std::norm(o.T) - 1.0), format_number(diff)};
    }
    catch (const std::exception&)
    {
      return std::vector<std::string>{format_number(ws[i]), "nan", "nan", "nan", "nan", "nan", "nan", "", "nan", "nan"};
    }
  });
  return t;
}

struct RandomDraw
{
  Particle particle;
  PotentialSegment segment;
};

/// The draw domain used for oracle sweeps: m in [0.1, 10], |s|, |v| <= 10 m,
/// L in [1e-3, 10], w in (0, 20 m].
inline RandomDraw random_draw(std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double m = 0.1 + 9.9 * unit(rng);
  const double s = (2.0 * unit(rng) - 1.0) * 10.0 * m;
  const double v = (2.0 * unit(rng) - 1.0) * 10.0 * m;
  const double L = 1e-3 + (10.0 - 1e-3) * unit(rng);
  const double w = 20.0 * m * (1.0 - unit(rng));
  return {{m, w}, {s, v, L}};
}

struct OracleSweep
{
  Table table;
  double max_diff = 0.0;
};

inline OracleSweep run_oracle_random(int draws, std::uint64_t seed)
{
  if (draws < 1) throw SpecError("--draws", "need at least one draw");
  std::mt19937_64 rng(seed);
  std::vector<RandomDraw> cases;
  for (int i = 0; i < draws; ++i) cases.push_back(random_draw(rng));

  OracleSweep out;
  out.table.columns = {"m", "w", "s", "v", "L", "region", "diff_R", "diff_T"};
  out.table.rows = parallel_rows(cases.size(), [&](std::size_t i) {
    const RandomDraw& d = cases[i];
    const BarrierSolution b = barrier_amplitudes(d.particle, d.segment);
    const OracleResult o = profile_scatter(d.particle, ProfileSpec{{d.segment}});
    return std::vector<std::string>{format_number(d.particle.m), format_number(d.particle.w),
                                    format_number(d.segment.s),  format_number(d.segment.v),
                                    format_number(d.segment.L),  std::string(to_string(b.region)),
                                    format_number(std::abs(b.R - o.R)), format_number(std::abs(b.T - o.T))};
  });
  for (const auto& row : out.table.rows)
    out.max_diff = std::max({out.max_diff, std::strtod(row[6].c_str(), nullptr), std::strtod(row[7].c_str(), nullptr)});
  out.table.meta = {"dirac1d oracle-verify random", "draws=" + std::to_string(draws) + " seed=" + std::to_string(seed),
                    "max_diff=" + format_number(out.max_diff)};
  return out;
}

// -- ramp probe -------------------------------------------------------------

inline Table run_ramp_probe(const Particle& pt, const RampProbeSpec& spec)
{
  const std::vector<RampProbePoint> pts = ramp_boundary_probe(pt, spec);
  Table t;
  t.meta = {"dirac1d ramp-probe",
            "m=" + format_number(pt.m) + " w=" + format_number(pt.w) + " s=" + format_number(spec.target.s) +
                " v=" + format_number(spec.target.v),
            "initial_width=" + format_number(spec.initial_width) + " steps=" + std::to_string(spec.steps)};
  t.columns = {"width", "steepness", "ratio"};
  for (const auto& p : pts)
    t.rows.push_back({format_number(p.width), format_number(p.steepness), format_number(p.ratio)});
  return t;
}

// -- SVG --------------------------------------------------------------------

struct PlotSpec
{
  std::string x_column = "w";
  std::vector<std::string> y_columns{"T_abs2"};
  bool log_x = false;
  std::string title;
  std::string y_label = "|T|^2";
};

namespace detail
{
  inline std::string xml_escape(const std::string& s)
  {
    std::string out;
    for (char c : s)
    {
      switch (c)
      {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
      }
    }
    return out;
  }

  inline std::string fixed(double x, int digits = 2)
  {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
  }
} // namespace detail

/// Line plot of table columns. Rows with non-finite values are skipped.
inline std::string to_svg(const Table& t, const PlotSpec& plot)
{
  constexpr double W = 640, H = 420, left = 70, right = 20, top = 40, bottom = 60;
  static const char* colors[] = {"#1f4e9c", "#c23b22", "#2b8a3e", "#7048a8"};

  const std::vector<double> xs_raw = t.numeric(plot.x_column);
  auto xmap = [&](double x) { return plot.log_x ? std::log10(x) : x; };

  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  std::vector<std::vector<double>> ys;
  for (const auto& c : plot.y_columns) ys.push_back(t.numeric(c));
  for (std::size_t i = 0; i < xs_raw.size(); ++i)
  {
    if (!std::isfinite(xs_raw[i]) || (plot.log_x && xs_raw[i] <= 0)) continue;
    x0 = std::min(x0, xmap(xs_raw[i]));
    x1 = std::max(x1, xmap(xs_raw[i]));
    for (const auto& col : ys)
      if (std::isfinite(col[i])) { y0 = std::min(y0, col[i]); y1 = std::max(y1, col[i]); }
  }
  if (!(x1 > x0)) { x0 = 0; x1 = 1; }
  y0 = std::min(y0, 0.0);
  y1 = std::max(y1, 1.0);

  auto px = [&](double x) { return left + (xmap(x) - x0) / (x1 - x0) * (W - left - right); };
  auto py = [&](double y) { return H - bottom - (y - y0) / (y1 - y0) * (H - top - bottom); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" viewBox=\"0 0 640 420\">\n";
  svg += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         detail::xml_escape(plot.title) + "</text>\n";
  // axes
  svg += "<path d=\"M" + detail::fixed(left) + " " + detail::fixed(top) + " V" + detail::fixed(H - bottom) + " H" +
         detail::fixed(W - right) + "\" stroke=\"black\" fill=\"none\"/>\n";
  for (int k = 0; k <= 4; ++k)
  {
    const double yv = y0 + (y1 - y0) * k / 4.0;
    svg += "<text x=\"" + detail::fixed(left - 6) + "\" y=\"" + detail::fixed(py(yv) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + detail::fixed(yv) + "</text>\n";
    const double xv = x0 + (x1 - x0) * k / 4.0;
    const double xlabel = plot.log_x ? std::pow(10.0, xv) : xv;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", xlabel);
    svg += "<text x=\"" + detail::fixed(left + (xv - x0) / (x1 - x0) * (W - left - right)) + "\" y=\"" +
           detail::fixed(H - bottom + 18) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           buf + "</text>\n";
  }
  svg += "<text x=\"" + detail::fixed((left + W - right) / 2) + "\" y=\"" + detail::fixed(H - 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         detail::xml_escape(plot.x_column + (plot.log_x ? " (log scale)" : "")) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + detail::fixed((top + H - bottom) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " +
         detail::fixed((top + H - bottom) / 2) + ")\">" + detail::xml_escape(plot.y_label) + "</text>\n";

  for (std::size_t c = 0; c < ys.size(); ++c)
  {
    std::string d;
    for (std::size_t i = 0; i < xs_raw.size(); ++i)
    {
      if (!std::isfinite(xs_raw[i]) || !std::isfinite(ys[c][i]) || (plot.log_x && xs_raw[i] <= 0)) continue;
      d += (d.empty() ? "M" : " L") + detail::fixed(px(xs_raw[i])) + " " + detail::fixed(py(ys[c][i]));
    }
    svg += "<path d=\"" + d + "\" stroke=\"" + colors[c % 4] + "\" stroke-width=\"1.5\" fill=\"none\"/>\n";
    svg += "<text x=\"" + detail::fixed(W - right - 4) + "\" y=\"" + detail::fixed(top + 14 + 14.0 * c) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + colors[c % 4] + "\">" +
           detail::xml_escape(plot.y_columns[c]) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

/// Region map for a phase-map table; separatrices w = v + s and w = v - s - 2m
/// are overlaid for the (v, w) layout.
inline std::string phase_map_svg(const Table& t, const PhaseMapSpec& spec)
{
  constexpr double W = 640, H = 480, left = 60, right = 20, top = 40, bottom = 50;
  const bool vw = spec.x_name == "v";
  const std::vector<double> xs = t.numeric(vw ? "v" : "s");
  const std::vector<double> ys = t.numeric(vw ? "w" : "v");
  const std::size_t region_col = t.column("region");

  auto px = [&](double x) { return left + (x - spec.x.min) / (spec.x.max - spec.x.min) * (W - left - right); };
  auto py = [&](double y) { return H - bottom - (y - spec.y.min) / (spec.y.max - spec.y.min) * (H - top - bottom); };
  const double cw = (W - left - right) / (spec.x.count - 1);
  const double ch = (H - top - bottom) / (spec.y.count - 1);

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i)
  {
    const std::string& r = t.rows[i][region_col];
    const char* fill = r == "upper" ? "#5b8fd9" : r == "sea" ? "#d9534f" : r == "gap" ? "#ffffff" : "#888888";
    svg += "<rect x=\"" + detail::fixed(px(xs[i]) - cw / 2) + "\" y=\"" + detail::fixed(py(ys[i]) - ch / 2) +
           "\" width=\"" + detail::fixed(cw + 0.3) + "\" height=\"" + detail::fixed(ch + 0.3) + "\" fill=\"" + fill +
           "\"/>\n";
  }
  if (vw)
  {
    // w = v (1 + ratio): g = infinity;  w = v (1 - ratio) - 2m: g = 0
    const double a = spec.x.min, b = spec.x.max;
    svg += "<line x1=\"" + detail::fixed(px(a)) + "\" y1=\"" + detail::fixed(py(a * (1 + spec.ratio))) + "\" x2=\"" +
           detail::fixed(px(b)) + "\" y2=\"" + detail::fixed(py(b * (1 + spec.ratio))) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + detail::fixed(px(a)) + "\" y1=\"" + detail::fixed(py(a * (1 - spec.ratio) - 2 * spec.m)) +
           "\" x2=\"" + detail::fixed(px(b)) + "\" y2=\"" + detail::fixed(py(b * (1 - spec.ratio) - 2 * spec.m)) +
           "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
  }
  svg += "<rect x=\"" + detail::fixed(left) + "\" y=\"" + detail::fixed(top) + "\" width=\"" +
         detail::fixed(W - left - right) + "\" height=\"" + detail::fixed(H - top - bottom) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + detail::fixed((left + W - right) / 2) + "\" y=\"" + detail::fixed(H - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + spec.x_name + " [" +
         format_number(spec.x.min) + ", " + format_number(spec.x.max) + "]</text>\n";
  svg += "<text x=\"16\" y=\"" + detail::fixed((top + H - bottom) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 " +
         detail::fixed((top + H - bottom) / 2) + ")\">" + spec.y_name + " [" + format_number(spec.y.min) + ", " +
         format_number(spec.y.max) + "]</text>\n";
  svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
         "blue: upper continuum, red: Dirac sea, white: gap</text>\n";
  svg += "</svg>\n";
  return svg;
}

} // namespace dirac1d::scan
