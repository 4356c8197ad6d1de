#pragma once

/** @file dirac1d/transfer.hpp
    @brief Transfer-matrix propagation of (phi, chi) through piecewise-constant
    (S, V) profiles.

    This is the verification engine for the closed forms: it never uses the
    g-factor or the analytic amplitudes. A constant segment propagates by the
    exact exponential of its coefficient matrix C = [[0, a], [-b, 0]],

        exp(L C) = cos(pL) 1 + L sinc(pL) C,    p^2 = a b,

    and a profile by the ordered product. Matrices are carried with a separate
    log-scale so evanescent segments with kappa L beyond ~700 stay finite.
 */

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "dirac1d/detail/functions.hpp"
#include "dirac1d/kinematics.hpp"

namespace dirac1d
{

/// Maps (phi, chi) at the entry of a region to (phi, chi) at its exit.
struct TransferMatrix
{
  complex m11{1.0, 0.0}, m12{0.0, 0.0};
  complex m21{0.0, 0.0}, m22{1.0, 0.0};

  static TransferMatrix identity() { return {}; }

  complex det() const { return m11 * m22 - m12 * m21; }

  Spinor apply(const Spinor& s) const
  {
    return {m11 * s.phi + m12 * s.chi, m21 * s.phi + m22 * s.chi};
  }

  /// Adjugate; the inverse when det = 1.
  TransferMatrix adjugate() const { return {m22, -m12, -m21, m11}; }

  double max_abs() const
  {
    return std::max({std::abs(m11), std::abs(m12), std::abs(m21), std::abs(m22)});
  }

  friend TransferMatrix operator*(const TransferMatrix& x, const TransferMatrix& y)
  {
    return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
            x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
  }

  friend TransferMatrix operator*(const complex& f, const TransferMatrix& x)
  {
    return {f * x.m11, f * x.m12, f * x.m21, f * x.m22};
  }
};

/// The matrix exp(log_scale) * matrix.
struct ScaledTransfer
{
  TransferMatrix matrix;
  double log_scale = 0.0;

  TransferMatrix expanded() const { return complex{std::exp(log_scale), 0.0} * matrix; }
};

inline ScaledTransfer compose(const ScaledTransfer& later, const ScaledTransfer& earlier)
{
  ScaledTransfer out{later.matrix * earlier.matrix, later.log_scale + earlier.log_scale};
  const double norm = out.matrix.max_abs();
  if (norm > 0.0 && std::isfinite(norm))
  {
    out.matrix = complex{1.0 / norm, 0.0} * out.matrix;
    out.log_scale += std::log(norm);
  }
  return out;
}

/// kappa L above which plain cosh/sinh entries are no longer representable.
inline constexpr double overflow_kappa_L = 700.0;

namespace detail
{
  /// exp(L [[0, a], [-b, 0]]) in scaled form.
  inline ScaledTransfer constant_coefficient_transfer(double a, double b, double L)
  {
    const double p2 = a * b;
    if (p2 >= 0.0)
    {
      const CosSinc cs = cos_sinc(p2, L);
      return {{complex{cs.cos}, complex{a * cs.L_sinc}, complex{-b * cs.L_sinc}, complex{cs.cos}}, 0.0};
    }
    const double kappa = std::sqrt(-p2);
    const double kL = kappa * L;
    if (kL < 20.0)
    {
      const CosSinc cs = cos_sinc(p2, L);
      return {{complex{cs.cos}, complex{a * cs.L_sinc}, complex{-b * cs.L_sinc}, complex{cs.cos}}, 0.0};
    }
    // divide by cosh(kL) = e^{kL} (1 + e^{-2kL}) / 2
    const double th = std::tanh(kL) / kappa;
    return {{complex{1.0}, complex{a * th}, complex{-b * th}, complex{1.0}},
            kL + std::log1p(std::exp(-2.0 * kL)) - std::log(2.0)};
  }

  /** Solves M (1 - R, zeta (1 + R)) = t (1, zeta) for a unit-determinant M
      given in scaled form; zeta = i k / (m_eff + ...) is the free-medium
      ratio chi/phi of the forward wave. T = t e^{-i k length}.
   */
  inline Amplitudes amplitudes_from_transfer(const ScaledTransfer& st, complex zeta, double k, double length)
  {
    const TransferMatrix& M = st.matrix;
    const complex den = zeta * (M.m11 + M.m22) - zeta * zeta * M.m12 - M.m21;
    const complex num = M.m21 - zeta * M.m11 + zeta * M.m22 - zeta * zeta * M.m12;
    const complex R = -num / den;
    const complex t = 2.0 * zeta * std::exp(-st.log_scale) / den;
    return {R, t * std::exp(complex{0.0, -k * length})};
  }
} // namespace detail

/// Segment transfer in scaled form; never overflows.
inline ScaledTransfer segment_transfer_scaled(const Particle& pt, const PotentialSegment& seg)
{
  if (!(seg.L >= 0.0) || std::isinf(seg.L))
    throw std::invalid_argument("dirac1d: segment width must be finite and >= 0");
  const Couplings c = couplings(pt, seg);
  return detail::constant_coefficient_transfer(c.a, c.b, seg.L);
}

/// Plain transfer matrix; entries overflow once kappa L exceeds ~710.
inline TransferMatrix segment_transfer(const Particle& pt, const PotentialSegment& seg)
{
  return segment_transfer_scaled(pt, seg).expanded();
}

inline bool exceeds_overflow_guard(const Particle& pt, const PotentialSegment& seg)
{
  const double p2 = couplings(pt, seg).p_squared();
  return p2 < 0.0 && std::sqrt(-p2) * seg.L > overflow_kappa_L;
}

/// Segments between two semi-infinite vacuum regions, listed left to right.
struct ProfileSpec
{
  std::vector<PotentialSegment> segments;

  double width() const
  {
    double total = 0.0;
    for (const auto& s : segments) total += s.L;
    return total;
  }
};

struct OracleResult
{
  complex R;
  complex T;
  bool blocked = false;           ///< some segment lies in the Dirac sea
  bool overflow_guarded = false;  ///< some segment had kappa L > overflow_kappa_L
};

inline void validate_profile(std::span<const PotentialSegment> segments)
{
  if (segments.empty())
    throw std::invalid_argument("dirac1d: profile has no segments");
  for (const auto& s : segments)
    if (!(s.L > 0.0) || std::isinf(s.L))
      throw std::invalid_argument("dirac1d: profile segment widths must be finite and > 0");
}

inline ScaledTransfer profile_transfer(const Particle& pt, std::span<const PotentialSegment> segments)
{
  ScaledTransfer total;
  for (const auto& seg : segments)
    total = compose(segment_transfer_scaled(pt, seg), total);
  return total;
}

inline OracleResult profile_scatter(const Particle& pt, const ProfileSpec& profile)
{
  detail::require_scattering(pt);
  validate_profile(profile.segments);

  OracleResult out;
  for (const auto& seg : profile.segments)
  {
    out.overflow_guarded = out.overflow_guarded || exceeds_overflow_guard(pt, seg);
    if (sea_exclusion_factor(pt, seg) == 0) out.blocked = true;
  }
  if (out.blocked)
  {
    out.R = {1.0, 0.0};
    out.T = {0.0, 0.0};
    return out;
  }

  const ScaledTransfer total = profile_transfer(pt, profile.segments);
  const complex zeta{0.0, kinematic_factor(pt)};
  const Amplitudes a = detail::amplitudes_from_transfer(total, zeta, free_momentum(pt), profile.width());
  out.R = a.R;
  out.T = a.T;
  return out;
}

// -- steep-ramp probe of the interface condition at a Dirac-sea boundary ----

struct RampProbePoint
{
  double width;       ///< ramp width l
  double steepness;   ///< target depth / l, in units of the first entry
  double ratio;       ///< |phi| / |chi| at the ramp foot
};

/** @brief |phi/chi| at the foot of a linear ramp from vacuum to `target`.

    The ramp occupies [-width, 0], sliced into `steps` constant slabs sampled
    at their midpoints. Beyond x = 0 the target medium carries the single
    outgoing wave: e^{ipx} in the upper continuum, e^{-kappa x} in the gap and,
    in the Dirac sea, the negative-energy wave with p -> -p.
 */
inline double ramp_interface_ratio(const Particle& pt, const PotentialSegment& target, double width, int steps)
{
  if (!(width > 0.0) || steps < 1)
    throw std::invalid_argument("dirac1d: ramp needs width > 0 and at least one slab");
  const Couplings c = couplings(pt, target);
  if (c.a == 0.0)
    throw std::invalid_argument("dirac1d: ramp target sits on a threshold (a = 0)");

  const SpectralRegion region = classify_region(pt, target);
  const double p2 = c.p_squared();
  complex p;
  if (region == SpectralRegion::Gap) p = {0.0, std::sqrt(-p2)};
  else if (region == SpectralRegion::DiracSea) p = {-std::sqrt(std::max(p2, 0.0)), 0.0};
  else p = {std::sqrt(std::max(p2, 0.0)), 0.0};
  const Spinor edge{complex{1.0, 0.0}, complex{0.0, 1.0} * p / c.a};

  const double h = width / steps;
  ScaledTransfer ramp;
  for (int j = 0; j < steps; ++j)
  {
    const double f = (j + 0.5) / steps;
    ramp = compose(segment_transfer_scaled(pt, {f * target.s, f * target.v, h}), ramp);
  }
  // det = 1 up to the scale, so the adjugate maps the edge spinor back to the
  // foot up to a common factor, which the ratio does not see.
  const Spinor foot = ramp.matrix.adjugate().apply(edge);
  return std::abs(foot.phi) / std::abs(foot.chi);
}

struct RampProbeSpec
{
  PotentialSegment target;
  double initial_width = 1.0;
  int doublings = 6;
  int steps = 200;   ///< slabs per ramp
};

/// Ratio sequence over widths initial_width / 2^n, n = 0..doublings.
inline std::vector<RampProbePoint> ramp_boundary_probe(const Particle& pt, const RampProbeSpec& spec)
{
  detail::require_scattering(pt);
  if (classify_region(pt, spec.target) != SpectralRegion::DiracSea)
    throw std::invalid_argument("dirac1d: ramp probe target must lie in the Dirac sea");
  if (spec.doublings < 0)
    throw std::invalid_argument("dirac1d: ramp probe needs doublings >= 0");

  std::vector<RampProbePoint> out;
  double width = spec.initial_width;
  for (int n = 0; n <= spec.doublings; ++n, width *= 0.5)
    out.push_back({width, spec.initial_width / width, ramp_interface_ratio(pt, spec.target, width, spec.steps)});
  return out;
}

} // namespace dirac1d
