#pragma once

/** @file dirac1d/step.hpp
    @brief Scattering off the semi-infinite step (s, v) Theta(x).
 */

#include "dirac1d/kinematics.hpp"

namespace dirac1d
{

struct ScatterAmplitudes
{
  complex R;
  complex T;
  SpectralRegion region;
  GFactor g;
};

enum class BoundaryKind
{
  Dirichlet,   ///< g -> 0, R -> 1, phi(0-) = 0
  Neumann,     ///< g -> infinity, R -> -1, chi(0-) = 0
  Degenerate   ///< |m + s| = 0, the gap is closed
};

struct StepThresholds
{
  double upper;
  double sea;
  BoundaryKind upper_kind;
  BoundaryKind sea_kind;
};

inline StepThresholds step_thresholds(double m, const PotentialSegment& seg)
{
  const Thresholds th = thresholds(m, seg);
  if (seg.s > -m)
    return {th.upper, th.sea, BoundaryKind::Neumann, BoundaryKind::Dirichlet};
  if (seg.s < -m)
    return {th.upper, th.sea, BoundaryKind::Dirichlet, BoundaryKind::Neumann};
  return {th.upper, th.sea, BoundaryKind::Degenerate, BoundaryKind::Degenerate};
}

namespace detail
{
  inline ScatterAmplitudes amplitudes_from_g(SpectralRegion region, const GFactor& g)
  {
    if (g.infinite())
      return {complex{-1.0, 0.0}, complex{2.0, 0.0}, region, g};
    if (g.q == 0)
      return {complex{1.0, 0.0}, complex{0.0, 0.0}, region, g};
    const complex one{1.0, 0.0};
    return {(one - g.value) / (one + g.value), 2.0 * g.value / (one + g.value), region, g};
  }
} // namespace detail

/// R = (1 - g)/(1 + g), T = 2g/(1 + g); the segment width is ignored.
inline ScatterAmplitudes step_amplitudes(const Particle& pt, const PotentialSegment& seg)
{
  detail::require_scattering(pt);
  return detail::amplitudes_from_g(classify_region(pt, seg), g_factor(pt, seg));
}

/** @brief The w -> 0 limit of the step amplitudes.

    Generic potentials reflect perfectly (R = 1, T = 0). When s + v = 0 the
    g-factor stays finite and R, T follow from its w = 0 value; if that value
    is imaginary the reflection is total with a nontrivial phase.
 */
inline ScatterAmplitudes step_zero_energy_limit(double m, const PotentialSegment& seg)
{
  const Particle rest{m, 0.0};
  const SpectralRegion region = classify_region(rest, seg);
  if (!detail::anomalous(m, seg))
    return {complex{1.0, 0.0}, complex{0.0, 0.0}, region,
            GFactor{GFactor::Kind::Finite, complex{0.0, 0.0}, sea_exclusion_factor(rest, seg)}};
  return detail::amplitudes_from_g(region, g_factor(rest, seg));
}

/// |R|^2 + |T|^2 - 1; nonzero whenever the two asymptotic media differ.
inline double raw_unitarity_defect(const ScatterAmplitudes& a)
{
  return std::norm(a.R) + std::norm(a.T) - 1.0;
}

/// |R|^2 + Re(1/g) |T|^2 - 1, the probability-current balance across the step.
inline double flux_unitarity_defect(const ScatterAmplitudes& a)
{
  if (a.g.infinite() || a.g.q == 0 || a.g.value == complex{0.0, 0.0})
    return std::norm(a.R) - 1.0;
  return std::norm(a.R) + std::real(1.0 / a.g.value) * std::norm(a.T) - 1.0;
}

} // namespace dirac1d
