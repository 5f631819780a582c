#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trajaug/classifier.hpp"
#include "trajaug/dataset.hpp"
#include "trajaug/modification.hpp"
#include "trajaug/random.hpp"
#include "trajaug/selection.hpp"

namespace trajaug {

enum class TrainingSource { Base, Random, Proportional, Fewest, Representative, Balanced };
enum class ModificationKind { On, In, Stretch, Drop };

inline constexpr std::array<ModificationKind, 4> kModificationKinds = {
    ModificationKind::On, ModificationKind::In, ModificationKind::Stretch, ModificationKind::Drop};

/// One cell of the strategy grid: "base", "{random|proportional|fewest|
/// representative}-selected-{on|in|stretch|drop}" or "balanced-{...}".
struct StrategyLabel {
  TrainingSource source = TrainingSource::Base;
  std::optional<ModificationKind> modification;

  std::string name() const;
  static std::optional<StrategyLabel> parse(std::string_view name);

  friend bool operator==(const StrategyLabel&, const StrategyLabel&) = default;
};

/// The 21 labels in grid order: base, the four selections crossed with the
/// four modifications, then the four balanced variants.
const std::vector<StrategyLabel>& all_strategy_labels();

struct ExperimentConfig {
  std::vector<std::uint64_t> seeds;
  double test_fraction = 0.2;
  std::uint32_t copies = 3;

  double proportion = 0.2;
  double cutoff = 0.6;
  double tolerance = 0.5;

  double max_stretch_m = 20.0;
  double bearing_deg = 0.0;
  StretchMode stretch_mode = StretchMode::RandomInRange;
  double drop_probability = 0.2;

  double multiplier = 1.1;
  std::size_t k = 5;

  /// 0 selects the hardware concurrency. Results never depend on it.
  unsigned workers = 0;

  /// Throws Error(InvalidParameter) on out-of-range values.
  void validate() const;

  ModificationStrategy modification(ModificationKind kind) const;
  SelectionStrategy selection(TrainingSource source) const;
};

struct ExperimentResultRow {
  std::uint64_t seed = 0;
  std::string strategy;
  std::string model;
  double accuracy = 0.0;
  double f1 = 0.0;

  friend bool operator==(const ExperimentResultRow&, const ExperimentResultRow&) = default;
};

/// Stratified whole-trajectory split. Each class contributes
/// round(n_c * test_fraction) test trajectories, clamped to [1, n_c - 1].
/// Errors: MissingLabelColumn, ClassTooSmall, InvalidParameter.
std::pair<TrajectoryDataset, TrajectoryDataset> train_test_split(const TrajectoryDataset& ds,
                                                                 double test_fraction,
                                                                 RandomStream& stream);

/// Everything precomputed for one seed before the grid is evaluated.
struct SeedPlan {
  std::uint64_t seed = 0;
  TrajectoryDataset train;
  TrajectoryDataset test;
  /// Indexed by TrainingSource::Random .. Representative (minus one).
  std::array<CandidateSet, 4> candidates;
  /// Indexed by ModificationKind.
  std::array<TrajectoryDataset, 4> balanced;
};

SeedPlan prepare_seed(const TrajectoryDataset& ds, const ExperimentConfig& cfg, std::uint64_t seed,
                      unsigned workers = 1);

/// Training partition for one grid cell. Only `plan.train` is ever
/// augmented.
TrajectoryDataset training_set(const SeedPlan& plan, const StrategyLabel& label,
                               const ExperimentConfig& cfg, unsigned workers = 1);

/// Runs the full grid: rows ordered by seed (config order), strategy (grid
/// order), model (argument order).
std::vector<ExperimentResultRow> run_experiment(const TrajectoryDataset& ds,
                                                const ExperimentConfig& cfg,
                                                std::span<const Classifier* const> models);

/// Same, with the built-in k-NN baseline (k = cfg.k) as the only model.
std::vector<ExperimentResultRow> run_experiment(const TrajectoryDataset& ds,
                                                const ExperimentConfig& cfg);

inline constexpr std::string_view kResultsHeader = "seed,strategy,model,accuracy,f1_score";

void write_results_csv(std::span<const ExperimentResultRow> rows, std::ostream& out);

}  // namespace trajaug
