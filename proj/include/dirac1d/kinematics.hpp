#pragma once

/** @file dirac1d/kinematics.hpp
    @brief Shared kinematics of a 1D Dirac particle in constant scalar/vector potentials.

    Natural units (hbar = c = 1). The two-component system is

        phi' = (m + eps + S - V) chi,    chi' = (m - eps + S + V) phi,

    with eps = m + w. Inside a constant segment we write the two couplings as
    a = w + 2m + s - v and b = w - s - v, so that phi' = a chi, chi' = -b phi and
    p^2 = a b.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <variant>

namespace dirac1d
{

using complex = std::complex<double>;

/// Threshold tags fire only when |w - w_threshold| is below this (energy units).
inline constexpr double threshold_tolerance = 1e-12;

/// Relative size of |s + v| below which the cancelled g-factor form is used.
inline constexpr double cancellation_tolerance = 1e-9;

inline constexpr double infinity = std::numeric_limits<double>::infinity();

struct Particle
{
  double m = 1.0;   ///< rest mass, m >= 0
  double w = 0.0;   ///< mass-excluded kinetic energy, eps = m + w

  double energy() const { return m + w; }
};

/// Constant (s, v) over a width L; L = infinity marks a semi-infinite step.
struct PotentialSegment
{
  double s = 0.0;
  double v = 0.0;
  double L = infinity;

  bool semi_infinite() const { return std::isinf(L); }
};

/// Two-component spinor (large component phi, small component chi).
struct Spinor
{
  complex phi;
  complex chi;
};

/// Reflection and transmission amplitudes in the phase convention
///   psi_left = u_k e^{ikx} - R u_{-k} e^{-ikx},   psi_right = T u e^{i q x}.
struct Amplitudes
{
  complex R;
  complex T;
};

enum class SpectralRegion
{
  UpperContinuum,
  Gap,
  DiracSea,
  UpperThreshold,
  SeaThreshold
};

inline std::string_view to_string(SpectralRegion r)
{
  switch (r)
  {
    case SpectralRegion::UpperContinuum: return "upper";
    case SpectralRegion::Gap:            return "gap";
    case SpectralRegion::DiracSea:       return "sea";
    case SpectralRegion::UpperThreshold: return "upper-threshold";
    case SpectralRegion::SeaThreshold:   return "sea-threshold";
  }
  return "unknown";
}

struct Propagating { double p; };
struct Evanescent  { double kappa; };

using InteriorWavenumber = std::variant<Propagating, Evanescent>;

/// Boundary-matching ratio between the interior and free spinor components.
/// `Infinite` is the Neumann-limit sentinel and never carries a numeric value.
struct GFactor
{
  enum class Kind { Finite, Infinite };

  Kind kind = Kind::Finite;
  complex value{0.0, 0.0};
  int q = 1;   ///< Dirac-sea exclusion factor, 0 or 1

  bool infinite() const { return kind == Kind::Infinite; }
};

/// Couplings of the constant-coefficient system inside a segment.
struct Couplings
{
  double a;   ///< w + 2m + s - v, coefficient of chi in phi'
  double b;   ///< w - s - v, minus the coefficient of phi in chi'

  double p_squared() const { return a * b; }
};

inline Couplings couplings(const Particle& pt, const PotentialSegment& seg)
{
  return {pt.w + 2.0 * pt.m + seg.s - seg.v, pt.w - seg.s - seg.v};
}

namespace detail
{
  inline void require_on_shell(const Particle& pt)
  {
    if (!(pt.m >= 0.0))
      throw std::invalid_argument("dirac1d: mass must be non-negative");
    if (!(pt.w >= 0.0))
      throw std::invalid_argument("dirac1d: w < 0 lies below the mass shell");
  }

  inline void require_scattering(const Particle& pt)
  {
    require_on_shell(pt);
    if (!(pt.w > 0.0))
      throw std::invalid_argument("dirac1d: scattering requires w > 0");
  }

  inline bool anomalous(double m, const PotentialSegment& seg)
  {
    const double scale = std::max({std::abs(seg.s), std::abs(seg.v), m});
    return std::abs(seg.s + seg.v) <= cancellation_tolerance * scale;
  }
} // namespace detail

/// k = sqrt(w (w + 2m)).
inline double free_momentum(const Particle& pt)
{
  detail::require_on_shell(pt);
  return std::sqrt(pt.w * (pt.w + 2.0 * pt.m));
}

/// K = sqrt(w / (w + 2m)) = k / (m + eps); tends to k/(2m) for w << m.
inline double kinematic_factor(const Particle& pt)
{
  detail::require_on_shell(pt);
  if (pt.m == 0.0 && pt.w == 0.0)
    throw std::invalid_argument("dirac1d: kinematic factor undefined for m = w = 0");
  return std::sqrt(pt.w / (pt.w + 2.0 * pt.m));
}

struct Thresholds
{
  double upper;   ///< v - m + |m + s|
  double sea;     ///< v - m - |m + s|
};

inline Thresholds thresholds(double m, const PotentialSegment& seg)
{
  const double gap_half = std::abs(m + seg.s);
  return {seg.v - m + gap_half, seg.v - m - gap_half};
}

inline SpectralRegion classify_region(const Particle& pt, const PotentialSegment& seg)
{
  const Thresholds th = thresholds(pt.m, seg);
  if (std::abs(pt.w - th.upper) <= threshold_tolerance) return SpectralRegion::UpperThreshold;
  if (std::abs(pt.w - th.sea) <= threshold_tolerance)   return SpectralRegion::SeaThreshold;
  if (pt.w > th.upper) return SpectralRegion::UpperContinuum;
  if (pt.w < th.sea)   return SpectralRegion::DiracSea;
  return SpectralRegion::Gap;
}

inline InteriorWavenumber interior_wavenumber(const Particle& pt, const PotentialSegment& seg)
{
  const double p2 = couplings(pt, seg).p_squared();
  if (classify_region(pt, seg) == SpectralRegion::Gap)
    return Evanescent{std::sqrt(std::max(-p2, 0.0))};
  return Propagating{std::sqrt(std::max(p2, 0.0))};
}

/// Giachetti-Sorace factor Q = 1 - Theta(v - s - 2m - w) Theta(s + v - w).
/// At the threshold tags Q = 1; the thresholds are resolved by their limits.
inline int sea_exclusion_factor(const Particle& pt, const PotentialSegment& seg)
{
  const SpectralRegion r = classify_region(pt, seg);
  if (r == SpectralRegion::UpperThreshold || r == SpectralRegion::SeaThreshold)
    return 1;
  const bool below_lower_line = seg.v - seg.s - 2.0 * pt.m - pt.w > 0.0;
  const bool below_upper_line = seg.s + seg.v - pt.w > 0.0;
  return (below_lower_line && below_upper_line) ? 0 : 1;
}

/** @brief The g-factor of the junction between vacuum and the segment.

    Equals K a / p with p on the decaying branch (p = i kappa) in the gap.
    Real positive in the upper continuum; purely imaginary in the gap; zero
    with q = 0 under the Dirac sea. At the upper/sea thresholds the limit is
    taken: g -> 0 when a vanishes (Dirichlet), Infinite when b vanishes
    (Neumann), and g = K on the degenerate line s = -m where both vanish.
    When s + v is negligible the w-cancelled form sqrt((w + 2m + s - v)/(w + 2m))
    is used, which stays finite at w = 0.
 */
inline GFactor g_factor(const Particle& pt, const PotentialSegment& seg)
{
  detail::require_on_shell(pt);
  const SpectralRegion region = classify_region(pt, seg);
  if (region == SpectralRegion::DiracSea)
    return {GFactor::Kind::Finite, complex{0.0, 0.0}, 0};

  const Couplings c = couplings(pt, seg);
  const double two_m_w = pt.w + 2.0 * pt.m;

  if (detail::anomalous(pt.m, seg))
  {
    if (two_m_w == 0.0)
      throw std::invalid_argument("dirac1d: g-factor undefined for m = w = 0");
    const double ratio = c.a / two_m_w;
    if (ratio >= 0.0) return {GFactor::Kind::Finite, complex{std::sqrt(ratio), 0.0}, 1};
    return {GFactor::Kind::Finite, complex{0.0, std::sqrt(-ratio)}, 1};
  }

  const double K = kinematic_factor(pt);

  if (region == SpectralRegion::UpperThreshold || region == SpectralRegion::SeaThreshold)
  {
    const bool a_zero = std::abs(c.a) <= threshold_tolerance;
    const bool b_zero = std::abs(c.b) <= threshold_tolerance;
    if (a_zero && b_zero) return {GFactor::Kind::Finite, complex{K, 0.0}, 1};
    if (b_zero) return {GFactor::Kind::Infinite, complex{0.0, 0.0}, 1};
    return {GFactor::Kind::Finite, complex{0.0, 0.0}, 1};
  }

  if (pt.w == 0.0)
    return {GFactor::Kind::Finite, complex{0.0, 0.0}, 1};

  // |g| = sqrt(w |a| / ((w + 2m) |b|)), phase fixed by the region.
  const double magnitude = std::sqrt(pt.w * std::abs(c.a) / (two_m_w * std::abs(c.b)));
  if (region == SpectralRegion::UpperContinuum)
    return {GFactor::Kind::Finite, complex{magnitude, 0.0}, 1};
  // gap: a > 0 > b gives -i, b > 0 > a gives +i
  return {GFactor::Kind::Finite, complex{0.0, c.a > 0.0 ? -magnitude : magnitude}, 1};
}

} // namespace dirac1d
