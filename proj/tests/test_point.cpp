#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dirac1d/point.hpp"
#include "dirac1d/transfer.hpp"

using namespace dirac1d;
using Catch::Approx;

TEST_CASE("beta parameter is smooth through the series cutoff", "[point]")
{
  for (double sign : {1.0, -1.0})
  {
    const double lo = sign * beta_series_cutoff * (1 - 1e-6);
    const double hi = sign * beta_series_cutoff * (1 + 1e-6);
    const BetaParameter a = beta_parameter({std::sqrt(std::max(lo, 0.0)), std::sqrt(std::max(-lo, 0.0))});
    const BetaParameter b = beta_parameter({std::sqrt(std::max(hi, 0.0)), std::sqrt(std::max(-hi, 0.0))});
    // across the cutoff the values move only by the first-order change in beta^2
    const double db2 = b.beta_squared - a.beta_squared;
    CHECK(std::abs((b.sinc - a.sinc) + db2 / 6.0) < 1e-15);
    CHECK(std::abs((b.cos - a.cos) + db2 / 2.0) < 1e-15);
  }
  const BetaParameter zero = beta_parameter({0.0, 0.0});
  CHECK(zero.sinc == 1.0);
  CHECK(zero.cos == 1.0);
}

TEST_CASE("point interaction from volume integrals", "[point]")
{
  const PointInteraction identity = point_from_volume_integrals({0.0, 0.0});
  CHECK(identity.alpha == 1.0);
  CHECK(identity.u_plus == 0.0);
  CHECK(identity.u_minus == 0.0);
  CHECK_FALSE(identity.blocked);

  const PointInteraction delta = point_from_volume_integrals({1.0, 1.0});
  CHECK(delta.alpha == 1.0);
  CHECK(delta.u_plus == 2.0);
  CHECK(delta.u_minus == 0.0);
  CHECK_FALSE(delta.blocked);

  const PointInteraction scalar = point_from_volume_integrals({0.0, 2.0});
  CHECK(scalar.alpha == Approx(std::cosh(2.0)).epsilon(1e-15));
  CHECK(scalar.u_plus == Approx(std::sinh(2.0)).epsilon(1e-15));
  CHECK(scalar.u_minus == Approx(std::sinh(2.0)).epsilon(1e-15));

  CHECK(point_from_volume_integrals({2.0, 0.0}).blocked);
  CHECK(point_from_volume_integrals({2.0, 1.0}).blocked);
  CHECK_FALSE(point_from_volume_integrals({2.0, -2.5}).blocked);

  SECTION("unit determinant over a random grid")
  {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 10000; ++i)
    {
      const PointInteraction pi = point_from_volume_integrals({u(rng), u(rng)});
      const double scale = std::max({1.0, pi.alpha * pi.alpha, std::abs(pi.u_plus * pi.u_minus)});
      REQUIRE(std::abs(pi.constraint() - 1.0) < 1e-12 * scale);
    }
  }
}

TEST_CASE("thin-slab transfer matrix tends to the point map", "[point]")
{
  const Particle pt{1.0, 0.6};
  for (const VolumeStrengths vs : {VolumeStrengths{0.7, 0.2}, VolumeStrengths{0.3, -1.1}, VolumeStrengths{1.0, 1.0}})
  {
    const PointInteraction pi = point_from_volume_integrals(vs);
    double previous = 1.0;
    for (double L = 1e-2; L > 1e-6; L /= 10)
    {
      const TransferMatrix M = segment_transfer(pt, {vs.sbar / L, vs.vbar / L, L});
      const double err = std::abs(M.m11 - pi.alpha) + std::abs(M.m22 - pi.alpha) +
                         std::abs(M.m12 - pi.u_minus) + std::abs(M.m21 - pi.u_plus);
      CHECK(err < previous);
      previous = err;
    }
    CHECK(previous < 1e-5);
  }
}

TEST_CASE("point amplitudes", "[point]")
{
  const Particle pt{1.0, 0.8};
  const double K = kinematic_factor(pt);

  const Amplitudes id = point_amplitudes(point_from_volume_integrals({0.0, 0.0}), pt);
  CHECK(std::abs(id.R) == 0.0);
  CHECK(id.T == complex{1.0, 0.0});

  const Amplitudes delta = point_amplitudes(point_from_volume_integrals({0.5, 0.5}), pt);
  const Amplitudes delta_closed = delta_amplitudes(0.5, pt);
  CHECK(std::abs(delta.T - delta_closed.T) < 1e-15);
  CHECK(std::abs(delta.R - delta_closed.R) < 1e-15);

  const Amplitudes prime = point_amplitudes(point_from_volume_integrals({0.5, -0.5}), pt);
  const Amplitudes prime_closed = delta_prime_amplitudes(0.5, pt);
  CHECK(std::abs(prime.T - prime_closed.T) < 1e-15);
  CHECK(std::abs(prime.R - prime_closed.R) < 1e-15);

  // vbar K = 1 halves the transmitted flux
  CHECK(std::norm(delta_prime_amplitudes(1.0 / K, pt).T) == Approx(0.5).epsilon(1e-14));
  CHECK(std::norm(delta_amplitudes(K, pt).T) == Approx(0.5).epsilon(1e-14));

  const Amplitudes blocked = point_amplitudes(point_from_volume_integrals({2.0, 0.5}), pt);
  CHECK(blocked.R == complex{1.0, 0.0});
  CHECK(blocked.T == complex{0.0, 0.0});
}

TEST_CASE("delta is a high-pass and delta-prime a low-pass filter", "[point]")
{
  double last_delta = 0.0, last_prime = 2.0;
  for (double w = 1e-4; w < 1e3; w *= 3)
  {
    const double td = std::norm(delta_amplitudes(0.7, {1.0, w}).T);
    const double tp = std::norm(delta_prime_amplitudes(0.7, {1.0, w}).T);
    CHECK(td > last_delta);
    CHECK(tp < last_prime);
    last_delta = td;
    last_prime = tp;
  }
}

TEST_CASE("point amplitudes conserve flux", "[point][property]")
{
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> w(1e-3, 10.0);
  for (int i = 0; i < 10000; ++i)
  {
    const PointInteraction pi = point_from_volume_integrals({u(rng), u(rng)});
    const Amplitudes a = point_amplitudes(pi, {1.0, w(rng)});
    REQUIRE(std::abs(std::norm(a.R) + std::norm(a.T) - 1.0) < 1e-12);
  }
}

TEST_CASE("boundary map", "[point]")
{
  const Spinor s{complex{0.3, -0.2}, complex{1.1, 0.4}};
  const Spinor same = apply_boundary(point_from_volume_integrals({0.0, 0.0}), s);
  CHECK(same.phi == s.phi);
  CHECK(same.chi == s.chi);

  const Spinor kicked = apply_boundary(point_from_volume_integrals({0.5, 0.5}), {complex{1.0}, complex{0.0}});
  CHECK(kicked.phi == complex{1.0, 0.0});
  CHECK(kicked.chi == complex{1.0, 0.0});

  const PointInteraction pi = point_from_volume_integrals({0.9, -1.7});
  const Spinor back = apply_boundary_inverse(pi, apply_boundary(pi, s));
  CHECK(std::abs(back.phi - s.phi) < 1e-14);
  CHECK(std::abs(back.chi - s.chi) < 1e-14);

  CHECK_THROWS_AS(apply_boundary(point_from_volume_integrals({3.0, 1.0}), s), BlockedJunction);
  CHECK_THROWS_AS(apply_boundary_inverse(point_from_volume_integrals({3.0, 1.0}), s), BlockedJunction);
}

TEST_CASE("shrinking barrier converges to the point interaction", "[point]")
{
  const Particle pt{1.0, 0.4};
  const auto trivial = shrinking_barrier_amplitudes({0.0, 0.0}, pt, 0.3);
  CHECK(std::abs(trivial.T - 1.0) < 1e-14);

  for (const VolumeStrengths vs : {VolumeStrengths{1.0, 1.0}, VolumeStrengths{0.5, -0.5}, VolumeStrengths{0.2, 1.3}})
  {
    const Amplitudes target = point_amplitudes(point_from_volume_integrals(vs), pt);
    const double e1 = std::abs(shrinking_barrier_amplitudes(vs, pt, 1e-3).T - target.T);
    const double e2 = std::abs(shrinking_barrier_amplitudes(vs, pt, 5e-4).T - target.T);
    CHECK(e2 < 1e-2);
    CHECK(e1 / e2 == Approx(2.0).margin(0.1));
  }

  SECTION("a blocked point interaction is the limit of sea barriers")
  {
    const double T = std::abs(shrinking_barrier_amplitudes({2.0, 0.5}, pt, 1e-4).T);
    CHECK(T == 0.0);
  }

  CHECK_THROWS_AS(shrinking_barrier_amplitudes({1.0, 0.0}, pt, 0.0), std::invalid_argument);
}
