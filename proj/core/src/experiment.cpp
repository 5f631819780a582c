#include "trajaug/experiment.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <ostream>

#include "trajaug/balancing.hpp"
#include "trajaug/error.hpp"
#include "trajaug/kinematics.hpp"
#include "trajaug/metrics.hpp"
#include "trajaug/parallel.hpp"

namespace trajaug {
namespace {

constexpr std::array<std::string_view, 4> kModificationNames = {"on", "in", "stretch", "drop"};
constexpr std::array<std::string_view, 6> kSourceNames = {
    "base", "random-selected", "proportional-selected", "fewest-selected",
    "representative-selected", "balanced"};

// Stream keys for seed-level draws. The leading unit separator keeps them
// apart from trajectory ids.
constexpr std::string_view kSplitKey = "\x1fsplit";
constexpr std::string_view kRandomSelectKey = "\x1fselect-random";
constexpr std::string_view kProportionalSelectKey = "\x1fselect-proportional";

std::size_t candidate_slot(TrainingSource source) {
  return static_cast<std::size_t>(source) - static_cast<std::size_t>(TrainingSource::Random);
}

}  // namespace

std::string StrategyLabel::name() const {
  std::string out(kSourceNames[static_cast<std::size_t>(source)]);
  if (modification) {
    out += '-';
    out += kModificationNames[static_cast<std::size_t>(*modification)];
  }
  return out;
}

std::optional<StrategyLabel> StrategyLabel::parse(std::string_view name) {
  for (const auto& label : all_strategy_labels()) {
    if (label.name() == name) return label;
  }
  return std::nullopt;
}

const std::vector<StrategyLabel>& all_strategy_labels() {
  static const std::vector<StrategyLabel> labels = [] {
    std::vector<StrategyLabel> out{{TrainingSource::Base, std::nullopt}};
    for (auto source : {TrainingSource::Random, TrainingSource::Proportional, TrainingSource::Fewest,
                        TrainingSource::Representative, TrainingSource::Balanced}) {
      for (auto kind : kModificationKinds) out.push_back({source, kind});
    }
    return out;
  }();
  return labels;
}

void ExperimentConfig::validate() const {
  if (seeds.empty()) throw Error(ErrorCode::InvalidParameter, "at least one seed is required");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidParameter,
                fmt::format("test fraction must be in (0, 1), got {}", test_fraction));
  }
  if (copies < 1) throw Error(ErrorCode::InvalidParameter, "copies must be at least 1");
  if (k == 0 || k % 2 == 0) {
    throw Error(ErrorCode::InvalidParameter, fmt::format("k must be a positive odd integer, got {}", k));
  }
  for (auto source : {TrainingSource::Random, TrainingSource::Representative}) {
    check_parameters(selection(source));
  }
  for (auto kind : kModificationKinds) check_parameters(modification(kind));
  if (!(multiplier >= 1.0)) {
    throw Error(ErrorCode::MultiplierBelowOne, fmt::format("multiplier {} is below 1", multiplier));
  }
}

ModificationStrategy ExperimentConfig::modification(ModificationKind kind) const {
  switch (kind) {
    case ModificationKind::On: return OnCircle{};
    case ModificationKind::In: return InCircle{};
    case ModificationKind::Stretch:
      return Stretch{stretch_mode, DistanceMeters{max_stretch_m}, Bearing(bearing_deg)};
    case ModificationKind::Drop: return Drop{drop_probability};
  }
  return OnCircle{};
}

SelectionStrategy ExperimentConfig::selection(TrainingSource source) const {
  switch (source) {
    case TrainingSource::Proportional: return ProportionalSelection{proportion};
    case TrainingSource::Fewest: return FewestSelection{proportion};
    case TrainingSource::Representative: return RepresentativeSelection{cutoff, tolerance};
    default: return RandomSelection{proportion};
  }
}

std::pair<TrajectoryDataset, TrajectoryDataset> train_test_split(const TrajectoryDataset& ds,
                                                                 double test_fraction,
                                                                 RandomStream& stream) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw Error(ErrorCode::InvalidParameter,
                fmt::format("test fraction must be in (0, 1), got {}", test_fraction));
  }
  if (!ds.label_column()) throw Error(ErrorCode::MissingLabelColumn, "split is stratified by label");

  TrajectoryDataset train(ds.label_column());
  TrajectoryDataset test(ds.label_column());
  train.set_extra_columns(ds.extra_columns());
  test.set_extra_columns(ds.extra_columns());

  for (auto& [label, ids] : ds.ids_by_label()) {
    const std::size_t n = ids.size();
    if (n < 2) {
      throw Error(ErrorCode::ClassTooSmall,
                  fmt::format("class '{}' has {} trajectory; at least 2 are needed", label, n));
    }
    const auto wanted = static_cast<std::size_t>(std::llround(static_cast<double>(n) * test_fraction));
    const std::size_t test_count = std::clamp<std::size_t>(wanted, 1, n - 1);
    stream.shuffle(std::span<std::string>(ids));
    for (std::size_t i = 0; i < n; ++i) {
      (i < test_count ? test : train).insert(ds.at(ids[i]));
    }
  }
  return {std::move(train), std::move(test)};
}

SeedPlan prepare_seed(const TrajectoryDataset& ds, const ExperimentConfig& cfg, std::uint64_t seed,
                      unsigned workers) {
  const RandomnessSpec spec{seed};
  SeedPlan plan;
  plan.seed = seed;

  RandomStream split_stream = derive_stream(spec, kSplitKey, 0);
  std::tie(plan.train, plan.test) = train_test_split(ds, cfg.test_fraction, split_stream);

  RandomStream random_stream = derive_stream(spec, kRandomSelectKey, 0);
  RandomStream proportional_stream = derive_stream(spec, kProportionalSelectKey, 0);
  plan.candidates[candidate_slot(TrainingSource::Random)] =
      select_candidates(plan.train, cfg.selection(TrainingSource::Random), random_stream, workers);
  plan.candidates[candidate_slot(TrainingSource::Proportional)] = select_candidates(
      plan.train, cfg.selection(TrainingSource::Proportional), proportional_stream, workers);
  plan.candidates[candidate_slot(TrainingSource::Fewest)] =
      select_candidates(plan.train, cfg.selection(TrainingSource::Fewest), random_stream, workers);
  plan.candidates[candidate_slot(TrainingSource::Representative)] = select_candidates(
      plan.train, cfg.selection(TrainingSource::Representative), random_stream, workers);

  for (auto kind : kModificationKinds) {
    plan.balanced[static_cast<std::size_t>(kind)] =
        balance_dataset(plan.train, cfg.multiplier, cfg.modification(kind), spec, workers);
  }
  return plan;
}

TrajectoryDataset training_set(const SeedPlan& plan, const StrategyLabel& label,
                               const ExperimentConfig& cfg, unsigned workers) {
  if (label.source == TrainingSource::Base || !label.modification) return plan.train;
  const auto kind = *label.modification;
  if (label.source == TrainingSource::Balanced) return plan.balanced[static_cast<std::size_t>(kind)];
  return augment_dataset(plan.train, plan.candidates[candidate_slot(label.source)],
                         cfg.modification(kind), cfg.copies, RandomnessSpec{plan.seed}, workers);
}

std::vector<ExperimentResultRow> run_experiment(const TrajectoryDataset& ds,
                                                const ExperimentConfig& cfg,
                                                std::span<const Classifier* const> models) {
  cfg.validate();
  if (models.empty()) throw Error(ErrorCode::InvalidParameter, "no models to evaluate");

  const auto& labels = all_strategy_labels();
  const std::size_t seeds = cfg.seeds.size();

  // Work is spread over the outer loops only; inner stages run serially so
  // the thread count stays bounded by cfg.workers.
  std::vector<SeedPlan> plans(seeds);
  std::vector<FeatureMatrix> test_features(seeds);
  parallel_for(seeds, cfg.workers, [&](std::size_t s) {
    plans[s] = prepare_seed(ds, cfg, cfg.seeds[s]);
    test_features[s] = to_feature_matrix(dataset_features(plans[s].test), true);
  });

  std::vector<ExperimentResultRow> rows(seeds * labels.size() * models.size());
  parallel_for(seeds * labels.size(), cfg.workers, [&](std::size_t task) {
    const std::size_t s = task / labels.size();
    const StrategyLabel& label = labels[task % labels.size()];
    const TrajectoryDataset train = training_set(plans[s], label, cfg);
    const FeatureMatrix train_features = to_feature_matrix(dataset_features(train), true);
    const FeatureMatrix& test = test_features[s];

    for (std::size_t m = 0; m < models.size(); ++m) {
      const auto predicted = models[m]->fit_predict(train_features, test);
      auto& row = rows[task * models.size() + m];
      row.seed = cfg.seeds[s];
      row.strategy = label.name();
      row.model = models[m]->name();
      row.accuracy = accuracy(test.labels, predicted);
      row.f1 = f1_weighted(test.labels, predicted);
    }
  });
  return rows;
}

std::vector<ExperimentResultRow> run_experiment(const TrajectoryDataset& ds,
                                                const ExperimentConfig& cfg) {
  const KnnClassifier knn(cfg.k);
  const Classifier* models[] = {&knn};
  return run_experiment(ds, cfg, models);
}

void write_results_csv(std::span<const ExperimentResultRow> rows, std::ostream& out) {
  out << kResultsHeader << '\n';
  for (const auto& row : rows) {
    fmt::print(out, "{},{},{},{},{}\n", row.seed, row.strategy, row.model, row.accuracy, row.f1);
  }
}

}  // namespace trajaug
