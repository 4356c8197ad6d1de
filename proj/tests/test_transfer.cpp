#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dirac1d/barrier.hpp"
#include "dirac1d/profile_io.hpp"
#include "dirac1d/transfer.hpp"

using namespace dirac1d;
using Catch::Approx;

TEST_CASE("segment transfer basics", "[transfer]")
{
  const Particle pt{1.0, 0.7};
  const TransferMatrix zero = segment_transfer(pt, {0.3, 1.2, 0.0});
  CHECK(zero.m11 == complex{1.0});
  CHECK(zero.m12 == complex{0.0});
  CHECK(zero.m21 == complex{0.0});
  CHECK(zero.m22 == complex{1.0});

  SECTION("a free slab advances the forward wave by e^{ikL}")
  {
    const double k = free_momentum(pt), K = kinematic_factor(pt), L = 1.7;
    const Spinor out = segment_transfer(pt, {0.0, 0.0, L}).apply({complex{1.0}, complex{0.0, K}});
    const complex phase = std::exp(complex{0.0, k * L});
    CHECK(std::abs(out.phi - phase) < 1e-14);
    CHECK(std::abs(out.chi - complex{0.0, K} * phase) < 1e-14);
  }

  CHECK_THROWS_AS(segment_transfer(pt, {0.0, 1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(segment_transfer(pt, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("unit determinant", "[transfer][property]")
{
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i)
  {
    const Particle pt{0.2 + 2 * u(rng), 5 * u(rng)};
    const PotentialSegment seg{-4 + 8 * u(rng), -4 + 8 * u(rng), 3 * u(rng)};
    const ScaledTransfer st = segment_transfer_scaled(pt, seg);
    // the determinant of the normalised matrix is e^{-2 log_scale}; compare
    // relative to the size of the entries it was built from
    const double scale = std::max(1.0, st.matrix.max_abs() * st.matrix.max_abs());
    REQUIRE(std::abs(st.matrix.det() - std::exp(-2 * st.log_scale)) < 1e-12 * scale);
  }
}

TEST_CASE("splitting a segment does not change the transfer", "[transfer][property]")
{
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i)
  {
    const Particle pt{1.0, 4 * u(rng)};
    const double s = -3 + 6 * u(rng), v = -3 + 6 * u(rng), L = 0.1 + 2 * u(rng), f = u(rng);
    const TransferMatrix whole = segment_transfer(pt, {s, v, L});
    const TransferMatrix split = segment_transfer(pt, {s, v, (1 - f) * L}) * segment_transfer(pt, {s, v, f * L});
    const double scale = std::max(1.0, whole.max_abs());
    REQUIRE(std::abs(whole.m11 - split.m11) < 1e-12 * scale);
    REQUIRE(std::abs(whole.m12 - split.m12) < 1e-12 * scale);
    REQUIRE(std::abs(whole.m21 - split.m21) < 1e-12 * scale);
    REQUIRE(std::abs(whole.m22 - split.m22) < 1e-12 * scale);
  }
}

TEST_CASE("oracle agrees with the closed-form barrier", "[transfer][property]")
{
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5000; ++i)
  {
    const Particle pt{1.0, 1e-3 + 5 * u(rng)};
    const PotentialSegment seg{-3 + 6 * u(rng), -3 + 6 * u(rng), 0.1 + 5 * u(rng)};
    const auto closed = barrier_amplitudes(pt, seg);
    ProfileSpec profile;
    profile.segments = {seg};
    const OracleResult oracle = profile_scatter(pt, profile);
    REQUIRE(std::abs(closed.R - oracle.R) < 1e-10);
    REQUIRE(std::abs(closed.T - oracle.T) < 1e-10);
  }
}

TEST_CASE("multi-segment profiles conserve flux", "[transfer][property]")
{
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int scattered = 0;
  for (int i = 0; i < 2000; ++i)
  {
    const Particle pt{1.0, 1e-2 + 4 * u(rng)};
    ProfileSpec profile;
    const int n = 1 + static_cast<int>(6 * u(rng));
    for (int j = 0; j < n; ++j)
      profile.segments.push_back({-2 + 4 * u(rng), -2 + 4 * u(rng), 0.05 + u(rng)});
    const OracleResult r = profile_scatter(pt, profile);
    if (r.blocked)
    {
      REQUIRE(r.T == complex{0.0, 0.0});
      continue;
    }
    REQUIRE(std::abs(std::norm(r.R) + std::norm(r.T) - 1.0) < 1e-10);
    ++scattered;
  }
  CHECK(scattered > 500);
}

TEST_CASE("a profile split into identical halves matches the single segment", "[transfer]")
{
  const Particle pt{1.0, 0.9};
  ProfileSpec one, two;
  one.segments = {{0.4, 1.3, 2.0}};
  two.segments = {{0.4, 1.3, 1.0}, {0.4, 1.3, 1.0}};
  const OracleResult a = profile_scatter(pt, one), b = profile_scatter(pt, two);
  CHECK(std::abs(a.R - b.R) < 1e-13);
  CHECK(std::abs(a.T - b.T) < 1e-13);
}

TEST_CASE("overflow guard", "[transfer]")
{
  const Particle pt{1.0, 0.5};
  const PotentialSegment thick{0.0, 2.0, 2000.0};   // kappa L ~ 1732
  CHECK(exceeds_overflow_guard(pt, thick));
  CHECK_FALSE(exceeds_overflow_guard(pt, {0.0, 2.0, 10.0}));

  ProfileSpec profile;
  profile.segments = {thick, {0.0, 0.0, 1.0}, thick};
  const OracleResult r = profile_scatter(pt, profile);
  CHECK(r.overflow_guarded);
  CHECK(std::isfinite(std::abs(r.R)));
  CHECK(std::abs(r.T) == 0.0);
  CHECK(std::abs(r.R) == Approx(1.0).epsilon(1e-12));

  const ScaledTransfer st = segment_transfer_scaled(pt, thick);
  CHECK(st.log_scale > 700.0);
  CHECK(std::isfinite(st.matrix.max_abs()));
}

TEST_CASE("profile validation and parsing", "[transfer][io]")
{
  const Particle pt{1.0, 1.0};
  CHECK_THROWS_AS(profile_scatter(pt, ProfileSpec{}), std::invalid_argument);
  ProfileSpec bad;
  bad.segments = {{0.0, 1.0, 0.0}};
  CHECK_THROWS_AS(profile_scatter(pt, bad), std::invalid_argument);

  const ProfileSpec parsed = parse_profile("# two slabs\n0 1.5 2\n\n  -0.5 0.25 1e-1  # thin\n");
  REQUIRE(parsed.segments.size() == 2);
  CHECK(parsed.segments[1].s == -0.5);
  CHECK(parsed.segments[1].v == 0.25);
  CHECK(parsed.segments[1].L == 0.1);
  CHECK(parsed.width() == Approx(2.1));

  auto line_of = [](const std::string& text) {
    try { parse_profile(text); }
    catch (const ProfileParseError& e) { return e.line(); }
    return -1;
  };
  CHECK(line_of("0 1 1\n0 1\n") == 2);
  CHECK(line_of("0 1 1\n0 1 1 7\n") == 2);
  CHECK(line_of("x 1 1\n") == 1);
  CHECK(line_of("0 1 -1\n") == 1);
  CHECK(line_of("# nothing\n\n") == 2);
}

TEST_CASE("ramp probe", "[transfer][ramp]")
{
  const Particle pt{1.0, 1.0};
  const PotentialSegment target{0.0, 4.0};
  const double sharp = std::sqrt(3.0 / 1.0) / 3.0;   // sqrt(|a| / |b|), a = -1, b = -3

  SECTION("resolution-converged")
  {
    const double coarse = ramp_interface_ratio(pt, target, 0.5, 200);
    const double fine = ramp_interface_ratio(pt, target, 0.5, 400);
    CHECK(std::abs(coarse - fine) < 1e-2 * fine);
  }

  SECTION("steep ramps approach the sharp step")
  {
    const auto seq = ramp_boundary_probe(pt, {target, 1.0, 6, 200});
    REQUIRE(seq.size() == 7);
    CHECK(seq.front().steepness == 1.0);
    CHECK(seq.back().steepness == 64.0);
    CHECK(std::abs(seq.back().ratio - sharp) < 1e-3);
  }

  SECTION("a vacuum target is trivially matched")
  {
    const double r = ramp_interface_ratio(pt, {0.0, 0.0}, 1.0, 50);
    CHECK(r == Approx(1.0 / kinematic_factor(pt)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(ramp_boundary_probe(pt, {{0.0, 0.5}, 1.0, 3, 50}), std::invalid_argument);
  CHECK_THROWS_AS(ramp_interface_ratio(pt, target, 0.0, 50), std::invalid_argument);
}
