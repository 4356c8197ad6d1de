#pragma once

/** @file dirac1d/effmass.hpp
    @brief Schroedinger-form rewrite of the Dirac system.

    Eliminating chi gives  -(d/dx) (1/2m*) (d/dx) phi + U phi = w phi  with
    m* = m + w/2 + (S - V)/2 and U = S + V. Across a junction phi and
    phi'/(2m*) (which is chi) are continuous.
 */

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

#include "dirac1d/kinematics.hpp"
#include "dirac1d/transfer.hpp"

namespace dirac1d
{

/// Raised when m* <= 0: the analogue does not exist for that medium.
class NonexistentAnalogue : public std::domain_error
{
public:
  explicit NonexistentAnalogue(double m_star)
    : std::domain_error("dirac1d: effective mass " + std::to_string(m_star) + " <= 0, no Schroedinger analogue"),
      m_star_(m_star) {}

  double m_star() const { return m_star_; }

private:
  double m_star_;
};

struct EffectiveMedium
{
  double m_star;
  double U;
  bool nonrelativistic_regime = false;   ///< w and |s - v| both below the regime fraction of m
};

enum class Kinematics
{
  Exact,            ///< m* = m + w/2 + (s - v)/2
  NonRelativistic   ///< m* = m + (s - v)/2, the w << m form
};

struct MediumOptions
{
  Kinematics kinematics = Kinematics::Exact;
  double regime_fraction = 0.01;
};

inline EffectiveMedium effective_medium(const Particle& pt, const PotentialSegment& seg,
                                        const MediumOptions& opts = {})
{
  const double kinetic = opts.kinematics == Kinematics::Exact ? 0.5 * pt.w : 0.0;
  const double m_star = pt.m + kinetic + 0.5 * (seg.s - seg.v);
  if (!(m_star > 0.0)) throw NonexistentAnalogue(m_star);
  const double cut = opts.regime_fraction * pt.m;
  return {m_star, seg.s + seg.v, pt.w < cut && std::abs(seg.s - seg.v) < cut};
}

struct MediumSlab
{
  EffectiveMedium medium;
  double L;
};

/** @brief Far-field (R, T) of the effective-mass equation through a stack of slabs.

    Both outer regions have mass m_outside and U = 0. The phase convention
    matches the Dirac modules: phi_left = e^{ikx} - R e^{-ikx},
    phi_right = T e^{ikx}, with x = 0 at the first slab.
 */
inline Amplitudes effmass_barrier_amplitudes(double m_outside, double w, std::span<const MediumSlab> slabs)
{
  if (!(m_outside > 0.0)) throw NonexistentAnalogue(m_outside);
  if (!(w > 0.0)) throw std::invalid_argument("dirac1d: effective-mass scattering requires w > 0");
  if (slabs.empty()) throw std::invalid_argument("dirac1d: no slabs given");

  // (phi, phi'/(2m*)) obeys phi' = 2m* J, J' = (U - w) phi.
  ScaledTransfer total;
  double length = 0.0;
  for (const auto& slab : slabs)
  {
    if (!(slab.medium.m_star > 0.0)) throw NonexistentAnalogue(slab.medium.m_star);
    if (!(slab.L > 0.0) || std::isinf(slab.L))
      throw std::invalid_argument("dirac1d: slab widths must be finite and > 0");
    total = compose(detail::constant_coefficient_transfer(2.0 * slab.medium.m_star, w - slab.medium.U, slab.L),
                    total);
    length += slab.L;
  }

  const double k = std::sqrt(2.0 * m_outside * w);
  const complex zeta{0.0, k / (2.0 * m_outside)};
  return detail::amplitudes_from_transfer(total, zeta, k, length);
}

inline Amplitudes effmass_barrier_amplitudes(double m_outside, double w, const MediumSlab& slab)
{
  return effmass_barrier_amplitudes(m_outside, w, std::span<const MediumSlab>(&slab, 1));
}

} // namespace dirac1d
