#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trajaug/trajectory.hpp"

namespace trajaug {

/// Trajectories keyed by id. Iteration is in lexicographic id order, which
/// is the canonical order for every dataset-level output.
class TrajectoryDataset {
 public:
  using Map = std::map<std::string, Trajectory, std::less<>>;
  using const_iterator = Map::const_iterator;

  TrajectoryDataset() = default;
  explicit TrajectoryDataset(std::optional<std::string> label_column)
      : label_column_(std::move(label_column)) {}

  /// Throws Error(DuplicateId) if the id is already present.
  void insert(Trajectory trajectory);

  const Trajectory* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }
  const Trajectory& at(std::string_view id) const;

  std::size_t size() const { return trajectories_.size(); }
  bool empty() const { return trajectories_.empty(); }
  const_iterator begin() const { return trajectories_.begin(); }
  const_iterator end() const { return trajectories_.end(); }

  const std::optional<std::string>& label_column() const { return label_column_; }
  void set_label_column(std::optional<std::string> column) { label_column_ = std::move(column); }

  /// Extra column names in first-seen order; used as the CSV column order.
  const std::vector<std::string>& extra_columns() const { return extra_columns_; }
  void set_extra_columns(std::vector<std::string> columns) { extra_columns_ = std::move(columns); }

  /// Ids grouped by label, both levels in lexicographic order. Requires a
  /// label column (Error(MissingLabelColumn)).
  std::map<std::string, std::vector<std::string>> ids_by_label() const;

  friend bool operator==(const TrajectoryDataset&, const TrajectoryDataset&) = default;

 private:
  Map trajectories_;
  std::optional<std::string> label_column_;
  std::vector<std::string> extra_columns_;
};

/// Sorts each trajectory's points by time and checks every dataset
/// invariant. Idempotent.
///
/// Errors: DuplicateTimestamp, TooFewPoints, InvalidCoordinate, MissingLabel,
/// ReservedColumn.
TrajectoryDataset validate_dataset(TrajectoryDataset raw);

/// Single-trajectory form of validate_dataset; `require_label` enforces a
/// non-empty label.
Trajectory validate_trajectory(Trajectory raw, bool require_label);

}  // namespace trajaug
