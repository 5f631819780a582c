#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "trajaug/dataset.hpp"
#include "trajaug/random.hpp"

namespace trajaug {

struct RandomSelection {
  double proportion = 0.2;
};
struct ProportionalSelection {
  double proportion = 0.2;
};
struct FewestSelection {
  double proportion = 0.2;
};
/// A trajectory is representative when at least `cutoff` of its feature
/// columns lie within `tolerance` (relative) of the dataset-wide column mean.
struct RepresentativeSelection {
  double cutoff = 0.6;
  double tolerance = 0.5;
};

using SelectionStrategy =
    std::variant<RandomSelection, ProportionalSelection, FewestSelection, RepresentativeSelection>;

/// Throws Error(InvalidParameter) when a parameter is out of range.
void check_parameters(const SelectionStrategy& strategy);

/// Ids chosen for augmentation, sorted lexicographically, no duplicates.
struct CandidateSet {
  std::vector<std::string> traj_ids;
  SelectionStrategy strategy;
};

/// max(1, floor(n * proportion)), with a 1e-9 allowance so that products
/// such as 100 * 0.29 land on the intended integer.
std::size_t selection_count(std::size_t n, double proportion);

CandidateSet select_random(const TrajectoryDataset& ds, double proportion, RandomStream& stream);
CandidateSet select_proportional(const TrajectoryDataset& ds, double proportion,
                                 RandomStream& stream);
/// Shortest trajectories by point count; ties go to the smaller id.
CandidateSet select_fewest(const TrajectoryDataset& ds, double proportion);
/// May return an empty set or every id.
CandidateSet select_representative(const TrajectoryDataset& ds, double cutoff, double tolerance,
                                   unsigned workers = 1);

/// Dispatches on the strategy. `stream` is consumed only by the random and
/// proportional strategies.
CandidateSet select_candidates(const TrajectoryDataset& ds, const SelectionStrategy& strategy,
                               RandomStream& stream, unsigned workers = 1);

/// Relative closeness test used by representative selection.
inline bool is_close_to_reference(double value, double reference, double tolerance) {
  return std::abs(value - reference) <= tolerance * (std::abs(reference) + 1e-9);
}

}  // namespace trajaug
