#pragma once

/** @file dirac1d/point.hpp
    @brief Zero-range (point) interactions of the 1D Dirac particle.

    A point interaction links the spinor on both sides of x = 0 by

        (phi+, chi+) = [[alpha, u_minus], [u_plus, alpha]] (phi-, chi-),

    with alpha^2 - u_plus u_minus = 1. The L -> 0 limit of a barrier with fixed
    volume integrals vbar = v L, sbar = s L realizes alpha = cos(beta),
    u_plus = (sbar + vbar) sin(beta)/beta, u_minus = (sbar - vbar) sin(beta)/beta,
    beta^2 = vbar^2 - sbar^2.

    Blocking: the Dirac-sea exclusion of the finite barrier survives the limit
    exactly when vbar > |sbar|. The boundary cases vbar = +-sbar (delta and
    delta-prime) are not blocked.
 */

#include <stdexcept>

#include "dirac1d/barrier.hpp"
#include "dirac1d/kinematics.hpp"

namespace dirac1d
{

struct VolumeStrengths
{
  double vbar = 0.0;
  double sbar = 0.0;
};

/// beta^2 with sin(beta)/beta and cos(beta), continued to sinh/cosh for beta^2 < 0.
struct BetaParameter
{
  double beta_squared;
  double sinc;
  double cos;
};

inline constexpr double beta_series_cutoff = 1e-8;

inline BetaParameter beta_parameter(const VolumeStrengths& vs)
{
  const double b2 = vs.vbar * vs.vbar - vs.sbar * vs.sbar;
  if (std::abs(b2) < beta_series_cutoff)
    return {b2, 1.0 - b2 / 6.0 + b2 * b2 / 120.0, 1.0 - b2 / 2.0 + b2 * b2 / 24.0};
  if (b2 > 0.0)
  {
    const double beta = std::sqrt(b2);
    return {b2, std::sin(beta) / beta, std::cos(beta)};
  }
  const double beta = std::sqrt(-b2);
  return {b2, std::sinh(beta) / beta, std::cosh(beta)};
}

struct PointInteraction
{
  double alpha = 1.0;
  double u_plus = 0.0;
  double u_minus = 0.0;
  bool blocked = false;

  double constraint() const { return alpha * alpha - u_plus * u_minus; }
};

class BlockedJunction : public std::logic_error
{
public:
  BlockedJunction() : std::logic_error("dirac1d: blocked point interaction has no transfer map") {}
};

inline PointInteraction point_from_volume_integrals(const VolumeStrengths& vs)
{
  const BetaParameter beta = beta_parameter(vs);
  return {beta.cos,
          (vs.sbar + vs.vbar) * beta.sinc,
          (vs.sbar - vs.vbar) * beta.sinc,
          vs.vbar > std::abs(vs.sbar)};
}

inline Amplitudes point_amplitudes(const PointInteraction& pi, const Particle& pt)
{
  detail::require_scattering(pt);
  if (pi.blocked)
    return {complex{1.0, 0.0}, complex{0.0, 0.0}};
  const double K = kinematic_factor(pt);
  const complex I{0.0, 1.0};
  const complex den = pi.alpha + 0.5 * I * (pi.u_plus / K - pi.u_minus * K);
  return {0.5 * I * (pi.u_plus / K + pi.u_minus * K) / den, 1.0 / den};
}

inline Spinor apply_boundary(const PointInteraction& pi, const Spinor& left)
{
  if (pi.blocked) throw BlockedJunction{};
  return {pi.alpha * left.phi + pi.u_minus * left.chi,
          pi.u_plus * left.phi + pi.alpha * left.chi};
}

/// Inverse map; uses alpha^2 - u_plus u_minus = 1.
inline Spinor apply_boundary_inverse(const PointInteraction& pi, const Spinor& right)
{
  if (pi.blocked) throw BlockedJunction{};
  return {pi.alpha * right.phi - pi.u_minus * right.chi,
          -pi.u_plus * right.phi + pi.alpha * right.chi};
}

/// Delta interaction (sbar = vbar): T = 1/(1 + i vbar/K). A high-pass filter.
inline Amplitudes delta_amplitudes(double vbar, const Particle& pt)
{
  const double K = kinematic_factor(pt);
  const complex x{0.0, vbar / K};
  return {x / (1.0 + x), 1.0 / (1.0 + x)};
}

/// Delta-prime interaction (sbar = -vbar): T = 1/(1 + i vbar K). A low-pass filter.
inline Amplitudes delta_prime_amplitudes(double vbar, const Particle& pt)
{
  const double K = kinematic_factor(pt);
  const complex x{0.0, vbar * K};
  return {-x / (1.0 + x), 1.0 / (1.0 + x)};
}

/// The finite-L barrier with s = sbar/L, v = vbar/L.
inline BarrierSolution shrinking_barrier_amplitudes(const VolumeStrengths& vs, const Particle& pt, double L)
{
  if (!(L > 0.0))
    throw std::invalid_argument("dirac1d: shrinking barrier requires L > 0");
  return barrier_amplitudes(pt, PotentialSegment{vs.sbar / L, vs.vbar / L, L});
}

} // namespace dirac1d
