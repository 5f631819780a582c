#include "cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "trajaug/balancing.hpp"
#include "trajaug/csv.hpp"
#include "trajaug/error.hpp"
#include "trajaug/experiment.hpp"
#include "trajaug/kinematics.hpp"
#include "trajaug/modification.hpp"
#include "trajaug/pi_seeds.hpp"
#include "trajaug/selection.hpp"

namespace trajaug::cli {
namespace {

// Representative selection above this share of the dataset gets a warning.
constexpr double kRepresentativeWarnShare = 0.9;

constexpr std::string_view kSelectKey = "\x1fselect";

struct SelectionOptions {
  std::string strategy = "random";
  double proportion = 0.2;
  double cutoff = 0.6;
  double tolerance = 0.5;
};

struct ModificationOptions {
  std::string modify = "on-circle";
  double max_stretch = 20.0;
  double bearing = 0.0;
  std::string stretch_mode = "random-in-range";
  double drop_prob = 0.2;
};

struct CommonOptions {
  std::string input;
  std::string output;
  std::string label_column;
  std::uint64_t seed = 0;
  unsigned workers = 0;
};

std::optional<std::string> optional_label(const CommonOptions& o) {
  if (o.label_column.empty()) return std::nullopt;
  return o.label_column;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool label_required) {
  cmd->add_option("input", o.input, "Point-based trajectory CSV")->required();
  cmd->add_option("-o,--output", o.output, "Output file (default: standard output)");
  auto* label = cmd->add_option("--label-column", o.label_column, "Column holding the class label");
  if (label_required) label->required();
  cmd->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
}

void add_selection(CLI::App* cmd, SelectionOptions& s, const std::string& flag) {
  cmd->add_option(flag, s.strategy, "Candidate selection strategy")
      ->check(CLI::IsMember({"random", "proportional", "fewest", "representative"}))
      ->capture_default_str();
  cmd->add_option("--proportion", s.proportion, "Share of trajectories to select")->capture_default_str();
  cmd->add_option("--cutoff", s.cutoff, "Share of close statistics for representative selection")
      ->capture_default_str();
  cmd->add_option("--tolerance", s.tolerance, "Relative closeness tolerance")->capture_default_str();
}

void add_modification(CLI::App* cmd, ModificationOptions& m) {
  cmd->add_option("--modify", m.modify, "Point modification strategy")
      ->check(CLI::IsMember({"on-circle", "in-circle", "stretch", "drop"}))
      ->capture_default_str();
  cmd->add_option("--max-stretch", m.max_stretch, "Stretch distance in meters")->capture_default_str();
  cmd->add_option("--bearing", m.bearing, "Stretch direction, degrees clockwise from north")
      ->capture_default_str();
  cmd->add_option("--stretch-mode", m.stretch_mode, "Which point on the stretch line to use")
      ->check(CLI::IsMember({"min", "max", "random-endpoint", "random-in-range"}))
      ->capture_default_str();
  cmd->add_option("--drop-prob", m.drop_prob, "Probability of dropping an interior point")
      ->capture_default_str();
}

StretchMode to_stretch_mode(const std::string& name) {
  if (name == "min") return StretchMode::MinPoint;
  if (name == "max") return StretchMode::MaxPoint;
  if (name == "random-endpoint") return StretchMode::RandomEndpoint;
  return StretchMode::RandomInRange;
}

ModificationStrategy to_modification(const ModificationOptions& m) {
  if (m.modify == "in-circle") return InCircle{};
  if (m.modify == "stretch") {
    return Stretch{to_stretch_mode(m.stretch_mode), DistanceMeters{m.max_stretch}, Bearing(m.bearing)};
  }
  if (m.modify == "drop") return Drop{m.drop_prob};
  return OnCircle{};
}

SelectionStrategy to_selection(const SelectionOptions& s) {
  if (s.strategy == "proportional") return ProportionalSelection{s.proportion};
  if (s.strategy == "fewest") return FewestSelection{s.proportion};
  if (s.strategy == "representative") return RepresentativeSelection{s.cutoff, s.tolerance};
  return RandomSelection{s.proportion};
}

// Sends output to -o when given, otherwise to the caller's stream.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, fmt::format("cannot write '{}'", path));
  writer(file);
  file.flush();
  if (!file) throw Error(ErrorCode::IoError, fmt::format("write to '{}' failed", path));
}

CandidateSet choose_candidates(const TrajectoryDataset& ds, const SelectionOptions& s,
                               std::uint64_t seed, unsigned workers, std::ostream& err) {
  RandomStream stream = derive_stream(RandomnessSpec{seed}, kSelectKey, 0);
  CandidateSet candidates = select_candidates(ds, to_selection(s), stream, workers);
  if (s.strategy == "representative" &&
      static_cast<double>(candidates.traj_ids.size()) >
          kRepresentativeWarnShare * static_cast<double>(ds.size())) {
    fmt::print(err,
               "warning: representative selection chose {} of {} trajectories; consider a smaller "
               "tolerance\n",
               candidates.traj_ids.size(), ds.size());
  }
  return candidates;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw CLI::ValidationError("--seed-list", "not an integer: " + item);
    seeds.push_back(value);
  }
  if (seeds.empty()) throw CLI::ValidationError("--seed-list", "no seeds given");
  return seeds;
}

// Expands --config FILE into "--key=value" arguments placed directly after
// the subcommand, so explicit flags (which follow) take precedence.
std::vector<std::string> expand_config(std::span<const std::string> args) {
  std::vector<std::string> out;
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config", 1, 0);
      config_path = args[++i];
    } else if (a.starts_with("--config=")) {
      config_path = a.substr(9);
    } else {
      out.push_back(a);
    }
  }
  if (!config_path) return out;

  std::ifstream in(*config_path);
  if (!in) throw CLI::FileError::Missing(*config_path);
  std::map<std::string, std::string> entries;
  try {
    entries = parse_config(in);
  } catch (const std::runtime_error& e) {
    throw CLI::ConversionError(fmt::format("{}: {}", *config_path, e.what()));
  }
  // The subcommand is the first argument after the program name.
  const std::size_t insert_at = std::min<std::size_t>(2, out.size());
  std::vector<std::string> injected;
  for (const auto& [key, value] : entries) injected.push_back(fmt::format("--{}={}", key, value));
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(insert_at), injected.begin(), injected.end());
  return out;
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t number = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(fmt::format("line {}: expected key=value", number));
    }
    std::string key = trim(line.substr(0, eq));
    if (key.starts_with("--")) key.erase(0, 2);
    if (key.empty()) throw std::runtime_error(fmt::format("line {}: empty key", number));
    entries[key] = trim(line.substr(eq + 1));
  }
  return entries;
}

int run(std::span<const std::string> raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trajectory data augmentation toolkit", "trajaug"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.add_option("--config", "key=value file supplying defaults for the subcommand's flags");

  CommonOptions common;
  SelectionOptions selection;
  ModificationOptions modification;
  std::uint32_t copies = 3;
  double multiplier = 1.1;
  std::string candidates_path;
  std::size_t seed_count = 0;
  std::string seed_list;
  double test_fraction = 0.2;
  std::size_t k = 5;

  auto* features = app.add_subcommand("features", "Write the segment-feature table");
  add_common(features, common, false);

  auto* select = app.add_subcommand("select", "Write augmentation candidate ids, one per line");
  add_common(select, common, false);
  add_selection(select, selection, "--strategy");
  select->add_option("--seed", common.seed, "Random seed")->capture_default_str();

  auto* augment = app.add_subcommand("augment", "Select candidates and append synthetic copies");
  add_common(augment, common, false);
  add_selection(augment, selection, "--select-strategy");
  add_modification(augment, modification);
  augment->add_option("--candidates", candidates_path, "Candidate id list (overrides selection)");
  augment->add_option("--copies", copies, "Synthetic copies per candidate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--seed", common.seed, "Random seed")->capture_default_str();

  auto* balance = app.add_subcommand("balance", "Augment every class up to a common count");
  add_common(balance, common, true);
  add_modification(balance, modification);
  balance->add_option("--multiplier", multiplier, "Target as a multiple of the largest class")
      ->capture_default_str();
  balance->add_option("--seed", common.seed, "Random seed")->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "Run the seeded strategy grid and write results");
  add_common(evaluate, common, true);
  add_selection(evaluate, selection, "--select-strategy");
  evaluate->remove_option(evaluate->get_option("--select-strategy"));
  add_modification(evaluate, modification);
  evaluate->remove_option(evaluate->get_option("--modify"));
  auto* seeds_opt = evaluate->add_option("--seeds", seed_count, "Use the first N pi-digit seeds")
                        ->check(CLI::Range(std::size_t{1}, kMaxPiSeeds));
  auto* list_opt = evaluate->add_option("--seed-list", seed_list, "Comma-separated explicit seeds");
  seeds_opt->excludes(list_opt);
  evaluate->add_option("--test-fraction", test_fraction, "Held-out share per class")->capture_default_str();
  evaluate->add_option("--copies", copies, "Synthetic copies per candidate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate->add_option("--multiplier", multiplier, "Balancing multiplier")->capture_default_str();
  evaluate->add_option("--k", k, "Neighbours for the k-NN baseline")->capture_default_str();

  std::vector<std::string> args;
  std::vector<const char*> argv;
  try {
    args = expand_config(raw_args);
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (evaluate->parsed() && seed_count == 0 && seed_list.empty()) {
      throw CLI::RequiredError("--seeds or --seed-list");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const TrajectoryDataset ds = load_csv(common.input, optional_label(common));

    if (features->parsed()) {
      const auto rows = dataset_features(ds, common.workers);
      emit(common.output, out,
           [&](std::ostream& o) { write_features_csv(rows, ds.label_column().has_value(), o); });
    } else if (select->parsed()) {
      const auto candidates = choose_candidates(ds, selection, common.seed, common.workers, err);
      emit(common.output, out, [&](std::ostream& o) { write_candidates(candidates, o); });
    } else if (augment->parsed()) {
      CandidateSet candidates;
      if (!candidates_path.empty()) {
        std::ifstream in(candidates_path);
        if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot open '{}'", candidates_path));
        candidates.traj_ids = read_candidates(in);
        std::sort(candidates.traj_ids.begin(), candidates.traj_ids.end());
        candidates.traj_ids.erase(std::unique(candidates.traj_ids.begin(), candidates.traj_ids.end()),
                                  candidates.traj_ids.end());
      } else {
        candidates = choose_candidates(ds, selection, common.seed, common.workers, err);
      }
      const auto result = augment_dataset(ds, candidates, to_modification(modification), copies,
                                          RandomnessSpec{common.seed}, common.workers);
      emit(common.output, out, [&](std::ostream& o) { write_trajectories_csv(result, o); });
    } else if (balance->parsed()) {
      const auto result = balance_dataset(ds, multiplier, to_modification(modification),
                                          RandomnessSpec{common.seed}, common.workers);
      emit(common.output, out, [&](std::ostream& o) { write_trajectories_csv(result, o); });
    } else if (evaluate->parsed()) {
      ExperimentConfig cfg;
      if (seed_count > 0) {
        for (auto s : pi_seeds(seed_count)) cfg.seeds.push_back(s);
      } else {
        cfg.seeds = parse_seed_list(seed_list);
      }
      cfg.test_fraction = test_fraction;
      cfg.copies = copies;
      cfg.proportion = selection.proportion;
      cfg.cutoff = selection.cutoff;
      cfg.tolerance = selection.tolerance;
      cfg.max_stretch_m = modification.max_stretch;
      cfg.bearing_deg = modification.bearing;
      cfg.stretch_mode = to_stretch_mode(modification.stretch_mode);
      cfg.drop_probability = modification.drop_prob;
      cfg.multiplier = multiplier;
      cfg.k = k;
      cfg.workers = common.workers;
      const auto rows = run_experiment(ds, cfg);
      emit(common.output, out, [&](std::ostream& o) { write_results_csv(rows, o); });
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitData;
  }
  return kExitOk;
}

}  // namespace trajaug::cli
