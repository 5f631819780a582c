#include "trajaug/selection.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "trajaug/error.hpp"
#include "trajaug/kinematics.hpp"

namespace trajaug {
namespace {

void check_proportion(double proportion) {
  if (!(proportion > 0.0 && proportion <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter,
                fmt::format("proportion must be in (0, 1], got {}", proportion));
  }
}

void require_nonempty(const TrajectoryDataset& ds) {
  if (ds.empty()) throw Error(ErrorCode::EmptyDataset, "no trajectories to select from");
}

// Draws `count` distinct entries uniformly (partial Fisher-Yates).
std::vector<std::string> sample_without_replacement(std::vector<std::string> pool, std::size_t count,
                                                    RandomStream& stream) {
  count = std::min(count, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + stream.uniform_index(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

std::vector<std::string> all_ids(const TrajectoryDataset& ds) {
  std::vector<std::string> ids;
  ids.reserve(ds.size());
  for (const auto& [id, traj] : ds) ids.push_back(id);
  return ids;
}

}  // namespace

void check_parameters(const SelectionStrategy& strategy) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RepresentativeSelection>) {
          if (!(s.cutoff > 0.0 && s.cutoff <= 1.0)) {
            throw Error(ErrorCode::InvalidParameter,
                        fmt::format("cutoff must be in (0, 1], got {}", s.cutoff));
          }
          if (!(s.tolerance > 0.0) || !std::isfinite(s.tolerance)) {
            throw Error(ErrorCode::InvalidParameter,
                        fmt::format("tolerance must be positive, got {}", s.tolerance));
          }
        } else {
          check_proportion(s.proportion);
        }
      },
      strategy);
}

std::size_t selection_count(std::size_t n, double proportion) {
  const double raw = std::floor(static_cast<double>(n) * proportion + 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
}

CandidateSet select_random(const TrajectoryDataset& ds, double proportion, RandomStream& stream) {
  check_proportion(proportion);
  require_nonempty(ds);
  auto ids = sample_without_replacement(all_ids(ds), selection_count(ds.size(), proportion), stream);
  std::sort(ids.begin(), ids.end());
  return {std::move(ids), RandomSelection{proportion}};
}

CandidateSet select_proportional(const TrajectoryDataset& ds, double proportion,
                                 RandomStream& stream) {
  check_proportion(proportion);
  if (!ds.label_column()) {
    throw Error(ErrorCode::MissingLabelColumn, "proportional selection needs class labels");
  }
  std::vector<std::string> chosen;
  // Classes are visited in label order so the stream is consumed identically
  // on every run.
  for (auto& [label, ids] : ds.ids_by_label()) {
    const std::size_t count = selection_count(ids.size(), proportion);
    auto picked = sample_without_replacement(std::move(ids), count, stream);
    chosen.insert(chosen.end(), picked.begin(), picked.end());
  }
  std::sort(chosen.begin(), chosen.end());
  return {std::move(chosen), ProportionalSelection{proportion}};
}

CandidateSet select_fewest(const TrajectoryDataset& ds, double proportion) {
  check_proportion(proportion);
  require_nonempty(ds);
  std::vector<const Trajectory*> order;
  order.reserve(ds.size());
  for (const auto& [id, traj] : ds) order.push_back(&traj);
  // Map iteration is already id-ordered; a stable sort on length keeps the
  // id tie-break.
  std::stable_sort(order.begin(), order.end(), [](const Trajectory* a, const Trajectory* b) {
    return a->points.size() < b->points.size();
  });
  const std::size_t count = selection_count(ds.size(), proportion);
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ids.push_back(order[i]->id);
  std::sort(ids.begin(), ids.end());
  return {std::move(ids), FewestSelection{proportion}};
}

CandidateSet select_representative(const TrajectoryDataset& ds, double cutoff, double tolerance,
                                   unsigned workers) {
  const RepresentativeSelection params{cutoff, tolerance};
  check_parameters(params);
  require_nonempty(ds);

  const auto rows = dataset_features(ds, workers);
  std::array<double, kFeatureCount> reference{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < kFeatureCount; ++c) reference[c] += row.values[c];
  }
  for (double& r : reference) r /= static_cast<double>(rows.size());

  std::vector<std::string> ids;
  for (const auto& row : rows) {
    std::size_t considered = 0;
    std::size_t close = 0;
    for (std::size_t c = 0; c < kFeatureCount; ++c) {
      if (!std::isfinite(reference[c])) continue;
      ++considered;
      if (is_close_to_reference(row.values[c], reference[c], tolerance)) ++close;
    }
    if (considered > 0 &&
        static_cast<double>(close) / static_cast<double>(considered) >= cutoff) {
      ids.push_back(row.traj_id);
    }
  }
  return {std::move(ids), params};
}

CandidateSet select_candidates(const TrajectoryDataset& ds, const SelectionStrategy& strategy,
                               RandomStream& stream, unsigned workers) {
  return std::visit(
      [&](const auto& s) -> CandidateSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RandomSelection>) {
          return select_random(ds, s.proportion, stream);
        } else if constexpr (std::is_same_v<T, ProportionalSelection>) {
          return select_proportional(ds, s.proportion, stream);
        } else if constexpr (std::is_same_v<T, FewestSelection>) {
          return select_fewest(ds, s.proportion);
        } else {
          return select_representative(ds, s.cutoff, s.tolerance, workers);
        }
      },
      strategy);
}

}  // namespace trajaug
