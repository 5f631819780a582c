#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trajaug/dataset.hpp"

namespace trajaug {

/// Per-point kinematic series, one entry per trajectory point. Entries
/// whose backward difference is undefined (index 0 of distance and speed,
/// 0..1 of acceleration, 0..2 of jerk) are 0.
struct KinematicSeries {
  std::vector<double> distance;      ///< m, from the previous point
  std::vector<double> displacement;  ///< m, from the first point
  std::vector<double> speed;         ///< m/s
  std::vector<double> acceleration;  ///< m/s^2
  std::vector<double> jerk;          ///< m/s^3
};

KinematicSeries point_kinematics(const Trajectory& traj);

enum class KinematicFamily { Distance, Displacement, Speed, Acceleration, Jerk };
enum class FeatureStatistic { P10, P25, P50, P75, P90, Min, Max, Mean, Std };

inline constexpr std::size_t kFamilyCount = 5;
inline constexpr std::size_t kStatisticCount = 9;
inline constexpr std::size_t kFeatureCount = kFamilyCount * kStatisticCount;

/// Column index of (family, statistic). Columns are family-major:
/// 10%_Distance, 25%_Distance, ..., std_Distance, 10%_Displacement, ...,
/// std_Jerk.
constexpr std::size_t feature_index(KinematicFamily family, FeatureStatistic stat) {
  return static_cast<std::size_t>(family) * kStatisticCount + static_cast<std::size_t>(stat);
}

/// The 45 column names in column order.
const std::array<std::string, kFeatureCount>& feature_columns();

/// Index of a column name, or nullopt.
std::optional<std::size_t> feature_column_index(std::string_view name);

/// One trajectory summarised as statistics of its kinematic series.
struct SegmentFeatureRow {
  std::string traj_id;
  std::optional<std::string> label;
  std::array<double, kFeatureCount> values{};

  double value(KinematicFamily family, FeatureStatistic stat) const {
    return values[feature_index(family, stat)];
  }
  /// Throws std::out_of_range for an unknown column name.
  double value(std::string_view column) const;

  friend bool operator==(const SegmentFeatureRow&, const SegmentFeatureRow&) = default;
};

/// Linear-interpolation percentile at rank q * (n - 1) of an ascending
/// sorted sample; q in [0, 1].
double percentile_sorted(std::span<const double> sorted, double q);

SegmentFeatureRow segment_features(const Trajectory& traj);

/// One row per trajectory in id order. Rows may be computed on up to
/// `workers` threads (0 = hardware concurrency); the output does not
/// depend on the worker count.
std::vector<SegmentFeatureRow> dataset_features(const TrajectoryDataset& ds, unsigned workers = 1);

}  // namespace trajaug
