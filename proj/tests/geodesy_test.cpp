#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trajaug/error.hpp"
#include "trajaug/geodesy.hpp"

namespace trajaug {
namespace {

constexpr double kR = 6'371'000.0;

GeoPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lat(-85.0, 85.0), lon(-180.0, 180.0);
  return {lat(rng), lon(rng)};
}

TEST(Haversine, IdenticalPointsAreZero) {
  const GeoPoint p{45.0L, -118.5L};
  EXPECT_EQ(haversine_distance(p, p).meters, 0.0);
}

TEST(Haversine, OneDegreeOfEquator) {
  // Closed form: R * pi / 180.
  const double expected = kR * std::numbers::pi / 180.0;
  EXPECT_NEAR(expected, 111'194.93, 0.01);
  EXPECT_NEAR(haversine_distance({0, 0}, {0, 1}).meters, expected, 0.01);
}

TEST(Haversine, EquatorToPole) {
  const double expected = kR * std::numbers::pi / 2.0;
  EXPECT_NEAR(expected, 10'007'543.4, 0.1);
  EXPECT_NEAR(haversine_distance({0, 0}, {90, 0}).meters, expected, 0.1);
}

TEST(Haversine, SymmetricAndTriangular) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const GeoPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    EXPECT_EQ(haversine_distance(a, b).meters, haversine_distance(b, a).meters);
    EXPECT_LE(haversine_distance(a, c).meters,
              haversine_distance(a, b).meters + haversine_distance(b, c).meters + 1e-9);
  }
}

TEST(Haversine, HandlesAntimeridian) {
  EXPECT_NEAR(haversine_distance({0, 179.5L}, {0, -179.5L}).meters, kR * std::numbers::pi / 180.0, 1e-6);
}

TEST(Bearing, NormalizesIntoRange) {
  EXPECT_EQ(Bearing(360.0).degrees(), 0.0);
  EXPECT_EQ(Bearing(-90.0).degrees(), 270.0);
  EXPECT_EQ(Bearing(725.0).degrees(), 5.0);
  EXPECT_EQ(Bearing(-1e-18).degrees(), 0.0);
  EXPECT_EQ(Bearing(10.0).reversed().degrees(), 190.0);
}

TEST(DestinationPoint, ZeroDistanceIsIdentity) {
  const GeoPoint p{12.345L, 67.89L};
  EXPECT_EQ(destination_point(p, Bearing(123.0), {0.0}), p);
}

TEST(DestinationPoint, MeridianArcClosedForm) {
  for (double d : {1.0, 100.0, 12'345.0, 1'000'000.0}) {
    const GeoPoint q = destination_point({0, 0}, Bearing(0.0), {d});
    EXPECT_NEAR(static_cast<double>(q.lat), d / kR * 180.0 / std::numbers::pi, 1e-12);
    EXPECT_NEAR(static_cast<double>(q.lon), 0.0, 1e-15);
  }
}

TEST(DestinationPoint, WrapsLongitude) {
  const GeoPoint q = destination_point({0, 179.9999L}, Bearing(90.0), {100.0});
  EXPECT_LT(q.lon, -179.0L);
  EXPECT_TRUE(q.valid());
}

TEST(DestinationPoint, RoundTripsThroughHaversine) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> theta(0.0, 360.0), dist(0.0, 100'000.0);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint o = random_point(rng);
    const double d = dist(rng);
    const GeoPoint q = destination_point(o, Bearing(theta(rng)), {d});
    EXPECT_NEAR(haversine_distance(o, q).meters, d, 1e-9 * d) << i;
  }
}

TEST(DestinationPoint, ReverseBearingReturnsToOrigin) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> theta(0.0, 360.0), dist(0.0, 100'000.0);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint o = random_point(rng);
    const double d = dist(rng);
    const Bearing forward(theta(rng));
    const GeoPoint q = destination_point(o, forward, {d});
    // The return leg starts from q with the back azimuth measured at q.
    const GeoPoint back = destination_point(q, initial_bearing(q, o), {d});
    EXPECT_NEAR(static_cast<double>(back.lat), static_cast<double>(o.lat), 1e-6);
    EXPECT_NEAR(static_cast<double>(back.lon), static_cast<double>(o.lon), 1e-6);
  }
}

TEST(DestinationPoint, NaiveReversalReturnsAtStretchScale) {
  // Reversing with theta + 180 ignores meridian convergence; the error grows
  // like d^2 tan(lat) / 2R, so it is only tight for short legs.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> theta(0.0, 360.0), dist(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint o = random_point(rng);
    const double d = dist(rng);
    const Bearing forward(theta(rng));
    const GeoPoint back = destination_point(destination_point(o, forward, {d}), forward.reversed(), {d});
    EXPECT_NEAR(static_cast<double>(back.lat), static_cast<double>(o.lat), 1e-6);
    EXPECT_NEAR(static_cast<double>(back.lon), static_cast<double>(o.lon), 1e-6);
  }
}

TEST(InitialBearing, CardinalDirections) {
  EXPECT_NEAR(initial_bearing({0, 0}, {1, 0}).degrees(), 0.0, 1e-12);
  EXPECT_NEAR(initial_bearing({0, 0}, {0, 1}).degrees(), 90.0, 1e-12);
  EXPECT_NEAR(initial_bearing({0, 0}, {-1, 0}).degrees(), 180.0, 1e-12);
  EXPECT_NEAR(initial_bearing({0, 0}, {0, -1}).degrees(), 270.0, 1e-12);
}

TEST(InitialBearing, DegenerateWhenEqual) {
  try {
    initial_bearing({1, 2}, {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateBearing);
  }
}

TEST(InitialBearing, ConsistentWithDirectProblem) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> theta(0.0, 360.0), dist(1.0, 100'000.0);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint a = random_point(rng);
    const GeoPoint b = destination_point(a, Bearing(theta(rng)), {dist(rng)});
    const GeoPoint c = destination_point(a, initial_bearing(a, b), haversine_distance(a, b));
    EXPECT_NEAR(static_cast<double>(c.lat), static_cast<double>(b.lat), 1e-6);
    EXPECT_NEAR(static_cast<double>(c.lon), static_cast<double>(b.lon), 1e-6);
  }
}

}  // namespace
}  // namespace trajaug
