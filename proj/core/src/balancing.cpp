#include "trajaug/balancing.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "trajaug/error.hpp"
#include "trajaug/parallel.hpp"

namespace trajaug {

BalancePlan plan_balance(const TrajectoryDataset& ds, double multiplier) {
  if (!ds.label_column()) throw Error(ErrorCode::MissingLabelColumn, "balancing needs class labels");
  if (!(multiplier >= 1.0) || !std::isfinite(multiplier)) {
    throw Error(ErrorCode::MultiplierBelowOne, fmt::format("multiplier {} is below 1", multiplier));
  }
  if (ds.empty()) throw Error(ErrorCode::EmptyDataset, "nothing to balance");

  const auto groups = ds.ids_by_label();
  std::size_t largest = 0;
  for (const auto& [label, ids] : groups) largest = std::max(largest, ids.size());

  BalancePlan plan;
  plan.target = static_cast<std::size_t>(std::floor(static_cast<double>(largest) * multiplier + 1e-9));
  for (const auto& [label, ids] : groups) plan.per_class_deficit[label] = plan.target - ids.size();
  return plan;
}

TrajectoryDataset balance_dataset(const TrajectoryDataset& ds, double multiplier,
                                  const ModificationStrategy& strategy, const RandomnessSpec& spec,
                                  unsigned workers) {
  check_parameters(strategy);
  const BalancePlan plan = plan_balance(ds, multiplier);

  std::map<std::string, std::uint64_t, std::less<>> last_copy;
  for (const auto& [id, traj] : ds) {
    if (auto parts = parse_synthetic_id(id)) {
      auto& k = last_copy[std::string(parts->original_id)];
      k = std::max(k, parts->copy_index);
    }
  }

  struct Task {
    const Trajectory* source;
    std::uint64_t copy_index;
  };
  std::vector<Task> tasks;
  for (auto& [label, ids] : ds.ids_by_label()) {
    const std::size_t deficit = plan.per_class_deficit.at(label);
    if (deficit == 0) continue;
    RandomStream order_stream = derive_stream(spec, "\x1f" "balance\x1f" + label, 0);
    order_stream.shuffle(std::span<std::string>(ids));
    for (std::size_t j = 0; j < deficit; ++j) {
      const std::string& source = ids[j % ids.size()];
      tasks.push_back({&ds.at(source), ++last_copy[source]});
    }
  }

  std::vector<Trajectory> synthetics(tasks.size());
  parallel_for(tasks.size(), workers, [&](std::size_t i) {
    synthetics[i] = make_synthetic(*tasks[i].source, strategy, spec, tasks[i].copy_index);
  });

  TrajectoryDataset out = ds;
  for (auto& synthetic : synthetics) {
    if (out.contains(synthetic.id)) throw Error(ErrorCode::IdCollision, synthetic.id);
    out.insert(std::move(synthetic));
  }
  return out;
}

}  // namespace trajaug
