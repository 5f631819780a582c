#include "trajaug/geodesy.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trajaug/error.hpp"

namespace trajaug {
namespace {

using Real = long double;

constexpr Real kPi = std::numbers::pi_v<Real>;
constexpr Real kRadius = kEarthRadiusMeters;

constexpr Real to_radians(Real degrees) { return degrees * (kPi / 180); }
constexpr Real to_degrees(Real radians) { return radians * (180 / kPi); }

Real wrap_longitude(Real lon) {
  if (lon >= -180 && lon <= 180) return lon;
  Real wrapped = std::fmod(lon + 180, Real{360});
  if (wrapped < 0) wrapped += 360;
  return wrapped - 180;
}

}  // namespace

Bearing::Bearing(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d < 0) d += 360.0;
  // fmod of a tiny negative value can round up to exactly 360.
  degrees_ = d >= 360.0 ? 0.0 : d;
}

DistanceMeters haversine_distance(const GeoPoint& a, const GeoPoint& b) {
  // Differences are taken in degrees first: subtracting nearby values is
  // exact, while converting each coordinate separately would not be.
  const Real dlat = to_radians(b.lat - a.lat);
  const Real dlon = to_radians(b.lon - a.lon);
  const Real sin_dlat = std::sin(dlat / 2);
  const Real sin_dlon = std::sin(dlon / 2);
  const Real h = sin_dlat * sin_dlat +
                 std::cos(to_radians(a.lat)) * std::cos(to_radians(b.lat)) * sin_dlon * sin_dlon;
  const Real central = 2 * std::asin(std::sqrt(std::clamp(h, Real{0}, Real{1})));
  return {static_cast<double>(kRadius * central)};
}

GeoPoint destination_point(const GeoPoint& origin, Bearing bearing, DistanceMeters distance) {
  if (distance.meters == 0.0) return origin;
  const Real lat1 = to_radians(origin.lat);
  const Real theta = to_radians(static_cast<Real>(bearing.degrees()));
  const Real delta = static_cast<Real>(distance.meters) / kRadius;

  const Real sin_lat1 = std::sin(lat1);
  const Real cos_lat1 = std::cos(lat1);
  const Real sin_delta = std::sin(delta);
  const Real cos_delta = std::cos(delta);

  const Real sin_lat2 =
      std::clamp(sin_lat1 * cos_delta + cos_lat1 * sin_delta * std::cos(theta), Real{-1}, Real{1});
  const Real lat2 = std::asin(sin_lat2);
  const Real dlon = std::atan2(std::sin(theta) * sin_delta * cos_lat1, cos_delta - sin_lat1 * sin_lat2);

  return {to_degrees(lat2), wrap_longitude(origin.lon + to_degrees(dlon))};
}

Bearing initial_bearing(const GeoPoint& a, const GeoPoint& b) {
  if (a == b) {
    throw Error(ErrorCode::DegenerateBearing,
                fmt::format("bearing undefined between identical points ({}, {})",
                            static_cast<double>(a.lat), static_cast<double>(a.lon)));
  }
  const Real lat1 = to_radians(a.lat);
  const Real lat2 = to_radians(b.lat);
  const Real dlon = to_radians(b.lon - a.lon);
  const Real y = std::sin(dlon) * std::cos(lat2);
  const Real x = std::cos(lat1) * std::sin(lat2) - std::sin(lat1) * std::cos(lat2) * std::cos(dlon);
  return Bearing(static_cast<double>(to_degrees(std::atan2(y, x))));
}

}  // namespace trajaug
