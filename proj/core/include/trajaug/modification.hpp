#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "trajaug/dataset.hpp"
#include "trajaug/geodesy.hpp"
#include "trajaug/random.hpp"
#include "trajaug/selection.hpp"

namespace trajaug {

/// Circle radius as a fraction of the gap to the next point.
inline constexpr double kCircleRadiusFraction = 0.1;

enum class StretchMode {
  MinPoint,        ///< always the point max_distance behind the bearing
  MaxPoint,        ///< always the point max_distance along the bearing
  RandomEndpoint,  ///< either end with probability 1/2
  RandomInRange,   ///< uniform signed offset in (-max_distance, max_distance)
};

struct OnCircle {};
struct InCircle {};
struct Stretch {
  StretchMode mode = StretchMode::RandomInRange;
  DistanceMeters max_distance{20.0};
  Bearing bearing{};
};
struct Drop {
  double p_drop = 0.2;
};

using ModificationStrategy = std::variant<OnCircle, InCircle, Stretch, Drop>;

/// Throws Error(InvalidParameter) for max_distance <= 0 or p_drop outside
/// [0, 1].
void check_parameters(const ModificationStrategy& strategy);

/// 10% of the gap from point i to the next point; the last point reuses the
/// gap from its predecessor.
DistanceMeters circle_radius(const Trajectory& traj, std::size_t i);

// The modifiers keep id, label, timestamps and extras; only positions move
// (or, for drop, interior points disappear).
Trajectory modify_on_circle(const Trajectory& traj, RandomStream& stream);
Trajectory modify_in_circle(const Trajectory& traj, RandomStream& stream);
Trajectory modify_stretch(const Trajectory& traj, StretchMode mode, DistanceMeters max_distance,
                          Bearing bearing, RandomStream& stream);
Trajectory modify_drop(const Trajectory& traj, double p_drop, RandomStream& stream);

Trajectory modify(const Trajectory& traj, const ModificationStrategy& strategy, RandomStream& stream);

/// "{orig_id}#aug{k}".
std::string synthetic_id(std::string_view original_id, std::uint64_t copy_index);

struct SyntheticIdParts {
  std::string_view original_id;
  std::uint64_t copy_index;
};
/// Splits an id of the form "{orig}#aug{k}" (k >= 1); nullopt otherwise.
std::optional<SyntheticIdParts> parse_synthetic_id(std::string_view id);

/// Synthetic copy `copy_index` of `original`, drawn from
/// derive_stream(spec, original.id, copy_index) and renamed accordingly.
Trajectory make_synthetic(const Trajectory& original, const ModificationStrategy& strategy,
                          const RandomnessSpec& spec, std::uint64_t copy_index);

/// The input plus `copies` synthetic trajectories per candidate, ids
/// "{orig}#aug1".."{orig}#aug{copies}". Generation runs on up to `workers`
/// threads; the result is identical for any worker count.
///
/// Errors: UnknownCandidate, IdCollision (a generated id already exists, or
/// a candidate is itself a synthetic id), InvalidParameter.
TrajectoryDataset augment_dataset(const TrajectoryDataset& ds, const CandidateSet& candidates,
                                  const ModificationStrategy& strategy, std::uint32_t copies,
                                  const RandomnessSpec& spec, unsigned workers = 1);

}  // namespace trajaug
