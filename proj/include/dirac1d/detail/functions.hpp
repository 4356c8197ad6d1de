#pragma once

#include <cmath>

namespace dirac1d::detail
{

// Below this |x| the ratios use their Taylor series; truncation error ~x^6.
inline constexpr double series_cutoff = 1e-4;

/// sin(x)/x
inline double sinc(double x)
{
  if (std::abs(x) < series_cutoff)
  {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// sinh(x)/x
inline double sinhc(double x)
{
  if (std::abs(x) < series_cutoff)
  {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

/// tanh(x)/x
inline double tanhc(double x)
{
  if (std::abs(x) < series_cutoff)
  {
    const double x2 = x * x;
    return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0;
  }
  return std::tanh(x) / x;
}

/// 1/cosh(x) without overflow.
inline double sech(double x)
{
  const double ax = std::abs(x);
  if (ax > 700.0) return 2.0 * std::exp(-ax);
  return 1.0 / std::cosh(ax);
}

/** cos(pL) and L*sin(pL)/(pL) as functions of p^2, continued to cosh and
    L*sinh(kL)/(kL) for p^2 = -k^2 < 0. Entire in p^2, so the p = 0 point is
    regular. Overflows for kL > ~710; callers needing that range use the
    normalized forms.
 */
struct CosSinc
{
  double cos;
  double L_sinc;
};

inline CosSinc cos_sinc(double p_squared, double L)
{
  if (p_squared >= 0.0)
  {
    const double pL = std::sqrt(p_squared) * L;
    return {std::cos(pL), L * sinc(pL)};
  }
  const double kL = std::sqrt(-p_squared) * L;
  return {std::cosh(kL), L * sinhc(kL)};
}

} // namespace dirac1d::detail
