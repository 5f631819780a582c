#include "trajaug/dataset.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "trajaug/error.hpp"

namespace trajaug {

bool GeoPoint::valid() const {
  return std::isfinite(lat) && std::isfinite(lon) && lat >= -90 && lat <= 90 && lon >= -180 &&
         lon <= 180;
}

bool is_reserved_column(std::string_view name) {
  return std::find(kReservedColumns.begin(), kReservedColumns.end(), name) !=
         kReservedColumns.end();
}

void TrajectoryDataset::insert(Trajectory trajectory) {
  auto id = trajectory.id;
  auto [it, inserted] = trajectories_.try_emplace(std::move(id), std::move(trajectory));
  if (!inserted) throw Error(ErrorCode::DuplicateId, it->first);
}

const Trajectory* TrajectoryDataset::find(std::string_view id) const {
  auto it = trajectories_.find(id);
  return it == trajectories_.end() ? nullptr : &it->second;
}

const Trajectory& TrajectoryDataset::at(std::string_view id) const {
  if (const Trajectory* t = find(id)) return *t;
  throw Error(ErrorCode::UnknownCandidate, std::string(id));
}

std::map<std::string, std::vector<std::string>> TrajectoryDataset::ids_by_label() const {
  if (!label_column_) throw Error(ErrorCode::MissingLabelColumn, "dataset has no label column");
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [id, traj] : trajectories_) {
    if (!traj.label) throw Error(ErrorCode::MissingLabel, id);
    groups[*traj.label].push_back(id);
  }
  return groups;
}

Trajectory validate_trajectory(Trajectory raw, bool require_label) {
  if (raw.points.size() < 2) {
    throw Error(ErrorCode::TooFewPoints,
                fmt::format("trajectory '{}' has {} point(s)", raw.id, raw.points.size()));
  }
  if (require_label && (!raw.label || raw.label->empty())) {
    throw Error(ErrorCode::MissingLabel, fmt::format("trajectory '{}'", raw.id));
  }
  std::stable_sort(raw.points.begin(), raw.points.end(),
                   [](const TrajectoryPoint& a, const TrajectoryPoint& b) { return a.time < b.time; });
  for (std::size_t i = 0; i < raw.points.size(); ++i) {
    const auto& p = raw.points[i];
    if (!p.position.valid()) {
      throw Error(ErrorCode::InvalidCoordinate,
                  fmt::format("trajectory '{}' point {}", raw.id, i));
    }
    if (i > 0 && raw.points[i - 1].time == p.time) {
      throw Error(ErrorCode::DuplicateTimestamp,
                  fmt::format("trajectory '{}' at {}", raw.id, p.time.to_string()));
    }
    for (const auto& [column, value] : p.extras) {
      if (is_reserved_column(column)) {
        throw Error(ErrorCode::ReservedColumn,
                    fmt::format("trajectory '{}' extra column '{}'", raw.id, column));
      }
    }
  }
  return raw;
}

TrajectoryDataset validate_dataset(TrajectoryDataset raw) {
  TrajectoryDataset out(raw.label_column());
  out.set_extra_columns(raw.extra_columns());
  const bool require_label = raw.label_column().has_value();
  for (const auto& [id, traj] : raw) {
    out.insert(validate_trajectory(traj, require_label));
  }
  return out;
}

}  // namespace trajaug
