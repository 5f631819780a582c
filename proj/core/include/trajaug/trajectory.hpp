#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trajaug/timestamp.hpp"

namespace trajaug {

/// Coordinates are held in extended precision so that sub-metre
/// displacements applied by the modification strategies are represented
/// without rounding loss (a double ulp near 180 degrees is about 1.5 nm).
using Degrees = long double;

struct GeoPoint {
  Degrees lat = 0;
  Degrees lon = 0;

  bool valid() const;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// Column names that carry point data and never appear among the extras.
inline constexpr std::array<std::string_view, 4> kReservedColumns = {"traj_id", "DateTime", "lat",
                                                                     "lon"};

bool is_reserved_column(std::string_view name);

struct TrajectoryPoint {
  Timestamp time;
  GeoPoint position;
  /// Pass-through attributes (Species, UTME, ...) copied verbatim.
  std::map<std::string, std::string, std::less<>> extras;

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct Trajectory {
  std::string id;
  std::vector<TrajectoryPoint> points;
  std::optional<std::string> label;

  std::size_t size() const { return points.size(); }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

}  // namespace trajaug
