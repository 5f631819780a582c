#include "trajaug/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "trajaug/geodesy.hpp"
#include "trajaug/parallel.hpp"

namespace trajaug {
namespace {

constexpr std::array<std::string_view, kFamilyCount> kFamilyNames = {
    "Distance", "Displacement", "Speed", "Acceleration", "Jerk"};
constexpr std::array<std::string_view, kStatisticCount> kStatisticNames = {
    "10%", "25%", "50%", "75%", "90%", "min", "max", "mean", "std"};
constexpr std::array<double, 5> kPercentiles = {0.10, 0.25, 0.50, 0.75, 0.90};

// Leading entries of each family that are fixed at 0 rather than computed.
constexpr std::array<std::size_t, kFamilyCount> kSeedEntries = {1, 1, 1, 2, 3};

void summarise(std::span<const double> series, std::size_t seed_entries, double* out) {
  std::vector<double> sorted(series.begin(), series.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < kPercentiles.size(); ++i) {
    out[i] = percentile_sorted(sorted, kPercentiles[i]);
  }
  const double n = static_cast<double>(series.size());
  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / n;
  out[5] = sorted.front();
  out[6] = sorted.back();
  out[7] = mean;

  double stddev = 0.0;
  if (series.size() >= seed_entries + 2) {
    double ss = 0.0;
    for (double v : series) ss += (v - mean) * (v - mean);
    stddev = std::sqrt(ss / (n - 1.0));
  }
  out[8] = stddev;
}

}  // namespace

KinematicSeries point_kinematics(const Trajectory& traj) {
  const std::size_t n = traj.points.size();
  KinematicSeries k;
  k.distance.assign(n, 0.0);
  k.displacement.assign(n, 0.0);
  k.speed.assign(n, 0.0);
  k.acceleration.assign(n, 0.0);
  k.jerk.assign(n, 0.0);
  if (n == 0) return k;

  const GeoPoint& first = traj.points.front().position;
  for (std::size_t i = 1; i < n; ++i) {
    const auto& prev = traj.points[i - 1];
    const auto& cur = traj.points[i];
    const double dt = seconds_between(prev.time, cur.time);
    k.distance[i] = haversine_distance(prev.position, cur.position).meters;
    k.displacement[i] = haversine_distance(first, cur.position).meters;
    k.speed[i] = k.distance[i] / dt;
    if (i >= 2) k.acceleration[i] = (k.speed[i] - k.speed[i - 1]) / dt;
    if (i >= 3) k.jerk[i] = (k.acceleration[i] - k.acceleration[i - 1]) / dt;
  }
  return k;
}

const std::array<std::string, kFeatureCount>& feature_columns() {
  static const auto columns = [] {
    std::array<std::string, kFeatureCount> names;
    for (std::size_t f = 0; f < kFamilyCount; ++f) {
      for (std::size_t s = 0; s < kStatisticCount; ++s) {
        names[f * kStatisticCount + s] =
            std::string(kStatisticNames[s]) + "_" + std::string(kFamilyNames[f]);
      }
    }
    return names;
  }();
  return columns;
}

std::optional<std::size_t> feature_column_index(std::string_view name) {
  const auto& columns = feature_columns();
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

double SegmentFeatureRow::value(std::string_view column) const {
  auto index = feature_column_index(column);
  if (!index) throw std::out_of_range("unknown feature column: " + std::string(column));
  return values[*index];
}

double percentile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double rank = q * static_cast<double>(sorted.size() - 1);
  const auto lower = static_cast<std::size_t>(std::floor(rank));
  const std::size_t upper = std::min(lower + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(lower);
  // std::lerp is monotonic in frac and never leaves [a, b].
  return std::lerp(sorted[lower], sorted[upper], frac);
}

SegmentFeatureRow segment_features(const Trajectory& traj) {
  SegmentFeatureRow row;
  row.traj_id = traj.id;
  row.label = traj.label;
  if (traj.points.empty()) return row;

  const KinematicSeries k = point_kinematics(traj);
  const std::array<const std::vector<double>*, kFamilyCount> families = {
      &k.distance, &k.displacement, &k.speed, &k.acceleration, &k.jerk};
  for (std::size_t f = 0; f < kFamilyCount; ++f) {
    summarise(*families[f], kSeedEntries[f], row.values.data() + f * kStatisticCount);
  }
  return row;
}

std::vector<SegmentFeatureRow> dataset_features(const TrajectoryDataset& ds, unsigned workers) {
  std::vector<const Trajectory*> order;
  order.reserve(ds.size());
  for (const auto& [id, traj] : ds) order.push_back(&traj);

  std::vector<SegmentFeatureRow> rows(order.size());
  parallel_for(order.size(), workers, [&](std::size_t i) { rows[i] = segment_features(*order[i]); });
  return rows;
}

}  // namespace trajaug
