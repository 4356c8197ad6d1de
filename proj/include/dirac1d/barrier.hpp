#pragma once

/** @file dirac1d/barrier.hpp
    @brief Scattering off the square barrier (s, v) on 0 < x < L.

    The closed form is written through (1/g +- g) sin pL = L sinc(pL) (b/K +- K a),
    which is regular at p = 0 and at both threshold sentinels of g. In the gap
    the hyperbolic form is normalized by cosh(kappa L) so that thick barriers
    underflow to T = 0 instead of overflowing.
 */

#include <optional>

#include "dirac1d/detail/functions.hpp"
#include "dirac1d/kinematics.hpp"

namespace dirac1d
{

/// Interior amplitudes: psi = A u_p e^{ipx} - B u_{-p} e^{-ipx} for 0 < x < L.
struct InteriorAmplitudes
{
  complex A;
  complex B;
};

struct BarrierSolution
{
  complex R;
  complex T;
  std::optional<InteriorAmplitudes> interior;   ///< absent when blocked or at a threshold
  SpectralRegion region;
  complex phase;                                ///< pL, or i kappa L in the gap
};

namespace detail
{
  inline void require_finite_width(const PotentialSegment& seg)
  {
    if (!(seg.L > 0.0) || std::isinf(seg.L))
      throw std::invalid_argument("dirac1d: barrier width must be finite and > 0");
  }

  /// Interior wave number p on the decaying branch (p = i kappa in the gap).
  inline complex interior_p(SpectralRegion region, double p_squared)
  {
    if (region == SpectralRegion::Gap)
      return {0.0, std::sqrt(std::max(-p_squared, 0.0))};
    return {std::sqrt(std::max(p_squared, 0.0)), 0.0};
  }
} // namespace detail

inline BarrierSolution barrier_amplitudes(const Particle& pt, const PotentialSegment& seg)
{
  detail::require_scattering(pt);
  detail::require_finite_width(seg);

  const SpectralRegion region = classify_region(pt, seg);
  const Couplings c = couplings(pt, seg);
  const double p2 = c.p_squared();
  const complex p = detail::interior_p(region, p2);
  const complex phase = p * seg.L;

  if (region == SpectralRegion::DiracSea)
    return {complex{1.0, 0.0}, complex{0.0, 0.0}, std::nullopt, region, phase};

  const double K = kinematic_factor(pt);
  const double k = free_momentum(pt);
  const complex I{0.0, 1.0};
  const double sum = c.b / K + K * c.a;    // (1/g + g) sin pL / (L sinc pL)
  const double diff = c.b / K - K * c.a;   // (1/g - g) sin pL / (L sinc pL)
  const complex advance = std::exp(complex{0.0, -k * seg.L});

  complex R, T;
  if (region == SpectralRegion::Gap)
  {
    const double kappa = p.imag();
    const double kL = kappa * seg.L;
    const double scaled_sinh = seg.L * detail::tanhc(kL);   // sinh(kL)/(kappa cosh(kL))
    const complex den = 1.0 - 0.5 * I * sum * scaled_sinh;
    T = advance * detail::sech(kL) / den;
    R = -0.5 * I * diff * scaled_sinh / den;
  }
  else
  {
    const double pL = p.real() * seg.L;
    const double L_sinc = seg.L * detail::sinc(pL);
    const complex den = std::cos(pL) - 0.5 * I * sum * L_sinc;
    T = advance / den;
    R = -0.5 * I * diff * L_sinc / den;
  }

  std::optional<InteriorAmplitudes> interior;
  if (std::abs(p) > 0.0 && c.a != 0.0)
  {
    const complex g = K * c.a / p;
    interior = InteriorAmplitudes{0.5 * ((1.0 - R) + g * (1.0 + R)),
                                  0.5 * (g * (1.0 + R) - (1.0 - R))};
  }
  return {R, T, interior, region, phase};
}

/// The interior (A, B) alone; nullopt when there is no interior plane wave.
inline std::optional<InteriorAmplitudes> barrier_interior(const Particle& pt, const PotentialSegment& seg)
{
  return barrier_amplitudes(pt, seg).interior;
}

/// Interior spinor at 0 <= x <= L, reconstructed from (A, B).
inline std::optional<Spinor> barrier_interior_spinor(const Particle& pt, const PotentialSegment& seg, double x)
{
  const BarrierSolution sol = barrier_amplitudes(pt, seg);
  if (!sol.interior) return std::nullopt;
  const Couplings c = couplings(pt, seg);
  const complex p = detail::interior_p(sol.region, c.p_squared());
  const complex I{0.0, 1.0};
  const complex fwd = sol.interior->A * std::exp(I * p * x);
  const complex bwd = sol.interior->B * std::exp(-I * p * x);
  return Spinor{fwd - bwd, I * p / c.a * (fwd + bwd)};
}

/// w -> 0: perfect reflection unless s + v = 0, which is fully transparent for any L.
inline Amplitudes barrier_zero_energy_limit(double m, const PotentialSegment& seg)
{
  if (detail::anomalous(m, seg))
    return {complex{0.0, 0.0}, complex{1.0, 0.0}};
  return {complex{1.0, 0.0}, complex{0.0, 0.0}};
}

inline double unitarity_defect(const Amplitudes& a)
{
  return std::norm(a.R) + std::norm(a.T) - 1.0;
}

inline double unitarity_defect(const BarrierSolution& s)
{
  return std::norm(s.R) + std::norm(s.T) - 1.0;
}

} // namespace dirac1d
