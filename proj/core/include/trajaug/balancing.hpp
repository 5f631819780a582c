#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "trajaug/dataset.hpp"
#include "trajaug/modification.hpp"

namespace trajaug {

struct BalancePlan {
  /// floor(largest class count * multiplier)
  std::size_t target = 0;
  /// target - class count, per class.
  std::map<std::string, std::size_t> per_class_deficit;
};

/// Errors: MissingLabelColumn, MultiplierBelowOne, EmptyDataset.
BalancePlan plan_balance(const TrajectoryDataset& ds, double multiplier);

/// Tops every class up to the plan's target with synthetic trajectories.
/// Within a class the sources cycle through a seed-shuffled ordering of the
/// class members, so per-source multiplicities differ by at most one. Copy
/// indices for a source continue after any "#aug{k}" ids already present.
TrajectoryDataset balance_dataset(const TrajectoryDataset& ds, double multiplier,
                                  const ModificationStrategy& strategy, const RandomnessSpec& spec,
                                  unsigned workers = 1);

}  // namespace trajaug
