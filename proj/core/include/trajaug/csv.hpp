#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trajaug/dataset.hpp"
#include "trajaug/kinematics.hpp"
#include "trajaug/selection.hpp"

namespace trajaug {

/// Splits one comma-separated record. Double-quoted fields may contain
/// commas, doubled quotes and newlines. Returns false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields);

/// Quotes a field if it contains a comma, quote, or line break.
std::string escape_csv_field(std::string_view field);

/// Point-based trajectory CSV. Required columns: traj_id, DateTime, lat,
/// lon. If `label_column` is given it must exist and hold a single value
/// per trajectory; every other column is kept as a pass-through extra.
/// Rows of one trajectory need not be contiguous. The result is validated.
///
/// Errors: MissingColumn, ParseError, InconsistentLabel, IoError, plus the
/// validate_dataset errors.
TrajectoryDataset read_trajectories_csv(std::istream& in,
                                        const std::optional<std::string>& label_column);
TrajectoryDataset load_csv(const std::filesystem::path& path,
                           const std::optional<std::string>& label_column);

/// Writes traj_id, DateTime, lat, lon, [label], extras (first-seen order).
/// Trajectories are grouped by original id with synthetic copies
/// ("{id}#aug{k}", by ascending k) directly after their original; points
/// in time order; coordinates with 9 decimals.
void write_trajectories_csv(const TrajectoryDataset& ds, std::ostream& out);
void write_csv(const TrajectoryDataset& ds, const std::filesystem::path& path);

/// Ids in the row order used by write_trajectories_csv.
std::vector<std::string> output_order(const TrajectoryDataset& ds);

/// Header "traj_id[,label],10%_Distance,...,std_Jerk"; values in shortest
/// round-trip form.
void write_features_csv(std::span<const SegmentFeatureRow> rows, bool with_label, std::ostream& out);

/// One id per line.
void write_candidates(const CandidateSet& candidates, std::ostream& out);
std::vector<std::string> read_candidates(std::istream& in);

}  // namespace trajaug
