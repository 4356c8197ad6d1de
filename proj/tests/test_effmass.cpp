#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "dirac1d/barrier.hpp"
#include "dirac1d/effmass.hpp"

using namespace dirac1d;
using Catch::Approx;

namespace
{
Amplitudes exact_medium(const Particle& pt, const PotentialSegment& seg)
{
  const MediumOptions exact{Kinematics::Exact};
  const double outside = effective_medium(pt, PotentialSegment{}, exact).m_star;
  return effmass_barrier_amplitudes(outside, pt.w, MediumSlab{effective_medium(pt, seg, exact), seg.L});
}
} // namespace

TEST_CASE("effective medium parameters", "[effmass]")
{
  const EffectiveMedium vac = effective_medium({1.0, 0.0}, {0.0, 0.0});
  CHECK(vac.m_star == 1.0);
  CHECK(vac.U == 0.0);
  CHECK(vac.nonrelativistic_regime);

  const EffectiveMedium cancelled = effective_medium({1.0, 0.0}, {-0.3, 0.3});
  CHECK(cancelled.m_star == Approx(0.7).epsilon(1e-15));
  CHECK(cancelled.U == 0.0);
  CHECK_FALSE(cancelled.nonrelativistic_regime);

  const EffectiveMedium moving = effective_medium({1.0, 0.4}, {0.2, 0.6});
  CHECK(moving.m_star == Approx(1.0).epsilon(1e-15));
  CHECK(moving.U == Approx(0.8).epsilon(1e-15));
  CHECK(effective_medium({1.0, 0.4}, {0.2, 0.6}, {Kinematics::NonRelativistic}).m_star == Approx(0.8));

  SECTION("no analogue once m* <= 0")
  {
    CHECK_THROWS_AS(effective_medium({1.0, 0.0}, {-1.5, 1.5}), NonexistentAnalogue);
    // boundary s - v = -2m - w gives m* = 0 exactly
    try
    {
      effective_medium({1.0, 0.5}, {-1.25, 1.25});
      FAIL("expected NonexistentAnalogue");
    }
    catch (const NonexistentAnalogue& e)
    {
      CHECK(e.m_star() == 0.0);
    }
    CHECK_NOTHROW(effective_medium({1.0, 0.5}, {-1.2, 1.25}));
  }
}

TEST_CASE("homogeneous medium is transparent", "[effmass]")
{
  const Amplitudes a = effmass_barrier_amplitudes(1.0, 0.3, MediumSlab{{1.0, 0.0}, 2.5});
  CHECK(std::abs(a.R) < 1e-14);
  CHECK(std::abs(a.T - 1.0) < 1e-14);
}

TEST_CASE("exact medium reproduces the Dirac barrier", "[effmass][property]")
{
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int compared = 0;
  for (int i = 0; i < 3000; ++i)
  {
    const Particle pt{1.0, 1e-3 + 3 * u(rng)};
    const PotentialSegment seg{-2 + 4 * u(rng), -2 + 4 * u(rng), 0.1 + 4 * u(rng)};
    const auto dirac = barrier_amplitudes(pt, seg);
    if (dirac.region == SpectralRegion::DiracSea) continue;
    Amplitudes eff;
    try { eff = exact_medium(pt, seg); }
    catch (const NonexistentAnalogue&) { continue; }
    REQUIRE(std::abs(dirac.T - eff.T) < 1e-10);
    REQUIRE(std::abs(dirac.R - eff.R) < 1e-10);
    ++compared;
  }
  CHECK(compared > 1500);
}

TEST_CASE("non-relativistic analogue tracks the Dirac barrier at low energy", "[effmass]")
{
  const MediumOptions nr{Kinematics::NonRelativistic};
  const PotentialSegment seg{0.0, 0.3, 1.0};
  double previous = 1.0;
  for (double w : {1e-1, 1e-2, 1e-3})
  {
    const Particle pt{1.0, w};
    const double dirac = std::norm(barrier_amplitudes(pt, seg).T);
    const double eff = std::norm(effmass_barrier_amplitudes(1.0, w, MediumSlab{effective_medium(pt, seg, nr), seg.L}).T);
    const double rel = std::abs(dirac - eff) / dirac;
    CHECK(rel < previous);
    previous = rel;
  }
  CHECK(previous < 5e-2);
}

TEST_CASE("cancelled potential gives a transparent analogue at low energy", "[effmass]")
{
  const MediumOptions nr{Kinematics::NonRelativistic};
  const PotentialSegment seg{-0.3, 0.3, 2.0};
  const Particle pt{1.0, 1e-9};
  const Amplitudes a = effmass_barrier_amplitudes(1.0, pt.w, MediumSlab{effective_medium(pt, seg, nr), seg.L});
  CHECK(std::abs(a.T - 1.0) < 1e-3);
}

TEST_CASE("effective-mass stacks", "[effmass]")
{
  const std::vector<MediumSlab> halves{{{0.8, 0.5}, 0.75}, {{0.8, 0.5}, 0.75}};
  const Amplitudes split = effmass_barrier_amplitudes(1.0, 0.2, halves);
  const Amplitudes whole = effmass_barrier_amplitudes(1.0, 0.2, MediumSlab{{0.8, 0.5}, 1.5});
  CHECK(std::abs(split.T - whole.T) < 1e-13);
  CHECK(std::abs(split.R - whole.R) < 1e-13);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i)
  {
    std::vector<MediumSlab> stack;
    for (int j = 0; j < 4; ++j) stack.push_back({{0.2 + 2 * u(rng), -1 + 2 * u(rng)}, 0.1 + u(rng)});
    const Amplitudes a = effmass_barrier_amplitudes(1.0, 1e-2 + 2 * u(rng), stack);
    REQUIRE(std::abs(std::norm(a.R) + std::norm(a.T) - 1.0) < 1e-10);
  }

  CHECK_THROWS_AS(effmass_barrier_amplitudes(1.0, 0.0, halves), std::invalid_argument);
  CHECK_THROWS_AS(effmass_barrier_amplitudes(-1.0, 0.2, halves), NonexistentAnalogue);
  CHECK_THROWS_AS(effmass_barrier_amplitudes(1.0, 0.2, std::vector<MediumSlab>{}), std::invalid_argument);
  CHECK_THROWS_AS(effmass_barrier_amplitudes(1.0, 0.2, MediumSlab{{-0.1, 0.0}, 1.0}), NonexistentAnalogue);
}
