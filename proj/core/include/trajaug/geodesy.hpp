#pragma once

#include "trajaug/trajectory.hpp"

namespace trajaug {

/// Mean earth radius used for all spherical computations.
inline constexpr double kEarthRadiusMeters = 6'371'000.0;

/// Direction in degrees clockwise from north, always in [0, 360).
class Bearing {
 public:
  constexpr Bearing() = default;
  explicit Bearing(double degrees);

  double degrees() const { return degrees_; }
  Bearing reversed() const { return Bearing(degrees_ + 180.0); }

 private:
  double degrees_ = 0.0;
};

struct DistanceMeters {
  double meters = 0.0;
};

/// Great-circle distance on the sphere. Exactly symmetric in its arguments.
DistanceMeters haversine_distance(const GeoPoint& a, const GeoPoint& b);

/// Point reached by travelling `distance` from `origin` along the great
/// circle with the given initial bearing. Longitude is wrapped to
/// [-180, 180]. Distances at or beyond half the circumference are not
/// supported.
GeoPoint destination_point(const GeoPoint& origin, Bearing bearing, DistanceMeters distance);

/// Forward azimuth from a to b. Throws Error(DegenerateBearing) when a == b.
Bearing initial_bearing(const GeoPoint& a, const GeoPoint& b);

}  // namespace trajaug
