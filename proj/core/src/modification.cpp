#include "trajaug/modification.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>

#include "trajaug/error.hpp"
#include "trajaug/parallel.hpp"

namespace trajaug {
namespace {

constexpr std::string_view kSyntheticMarker = "#aug";

Bearing random_bearing(RandomStream& stream) { return Bearing(stream.uniform(0.0, 360.0)); }

}  // namespace

void check_parameters(const ModificationStrategy& strategy) {
  if (const auto* s = std::get_if<Stretch>(&strategy)) {
    if (!(s->max_distance.meters > 0.0) || !std::isfinite(s->max_distance.meters)) {
      throw Error(ErrorCode::InvalidParameter,
                  fmt::format("max stretch must be positive, got {}", s->max_distance.meters));
    }
  } else if (const auto* d = std::get_if<Drop>(&strategy)) {
    if (!(d->p_drop >= 0.0 && d->p_drop <= 1.0)) {
      throw Error(ErrorCode::InvalidParameter,
                  fmt::format("drop probability must be in [0, 1], got {}", d->p_drop));
    }
  }
}

DistanceMeters circle_radius(const Trajectory& traj, std::size_t i) {
  const auto& pts = traj.points;
  if (pts.size() < 2) return {0.0};
  const std::size_t from = (i + 1 < pts.size()) ? i : pts.size() - 2;
  const double gap = haversine_distance(pts[from].position, pts[from + 1].position).meters;
  return {kCircleRadiusFraction * gap};
}

Trajectory modify_on_circle(const Trajectory& traj, RandomStream& stream) {
  Trajectory out = traj;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const Bearing theta = random_bearing(stream);
    out.points[i].position =
        destination_point(traj.points[i].position, theta, circle_radius(traj, i));
  }
  return out;
}

Trajectory modify_in_circle(const Trajectory& traj, RandomStream& stream) {
  Trajectory out = traj;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const Bearing theta = random_bearing(stream);
    const double r = circle_radius(traj, i).meters;
    const DistanceMeters d{stream.uniform(0.0, r)};
    out.points[i].position = destination_point(traj.points[i].position, theta, d);
  }
  return out;
}

Trajectory modify_stretch(const Trajectory& traj, StretchMode mode, DistanceMeters max_distance,
                          Bearing bearing, RandomStream& stream) {
  check_parameters(Stretch{mode, max_distance, bearing});
  Trajectory out = traj;
  const Bearing back = bearing.reversed();
  for (auto& point : out.points) {
    const GeoPoint origin = point.position;
    switch (mode) {
      case StretchMode::MinPoint:
        point.position = destination_point(origin, back, max_distance);
        break;
      case StretchMode::MaxPoint:
        point.position = destination_point(origin, bearing, max_distance);
        break;
      case StretchMode::RandomEndpoint:
        point.position = destination_point(origin, stream.bernoulli(0.5) ? bearing : back, max_distance);
        break;
      case StretchMode::RandomInRange: {
        const double offset = stream.uniform(-max_distance.meters, max_distance.meters);
        point.position = offset >= 0.0 ? destination_point(origin, bearing, {offset})
                                       : destination_point(origin, back, {-offset});
        break;
      }
    }
  }
  return out;
}

Trajectory modify_drop(const Trajectory& traj, double p_drop, RandomStream& stream) {
  check_parameters(Drop{p_drop});
  Trajectory out;
  out.id = traj.id;
  out.label = traj.label;
  const auto& pts = traj.points;
  out.points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool endpoint = i == 0 || i + 1 == pts.size();
    // Endpoints never consume a draw.
    if (endpoint || !stream.bernoulli(p_drop)) out.points.push_back(pts[i]);
  }
  return out;
}

Trajectory modify(const Trajectory& traj, const ModificationStrategy& strategy,
                  RandomStream& stream) {
  return std::visit(
      [&](const auto& s) -> Trajectory {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OnCircle>) {
          return modify_on_circle(traj, stream);
        } else if constexpr (std::is_same_v<T, InCircle>) {
          return modify_in_circle(traj, stream);
        } else if constexpr (std::is_same_v<T, Stretch>) {
          return modify_stretch(traj, s.mode, s.max_distance, s.bearing, stream);
        } else {
          return modify_drop(traj, s.p_drop, stream);
        }
      },
      strategy);
}

std::string synthetic_id(std::string_view original_id, std::uint64_t copy_index) {
  return fmt::format("{}{}{}", original_id, kSyntheticMarker, copy_index);
}

std::optional<SyntheticIdParts> parse_synthetic_id(std::string_view id) {
  const auto pos = id.rfind(kSyntheticMarker);
  if (pos == std::string_view::npos) return std::nullopt;
  const std::string_view digits = id.substr(pos + kSyntheticMarker.size());
  if (digits.empty() || digits.front() == '0') return std::nullopt;
  std::uint64_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return SyntheticIdParts{id.substr(0, pos), k};
}

Trajectory make_synthetic(const Trajectory& original, const ModificationStrategy& strategy,
                          const RandomnessSpec& spec, std::uint64_t copy_index) {
  RandomStream stream = derive_stream(spec, original.id, copy_index);
  Trajectory out = modify(original, strategy, stream);
  out.id = synthetic_id(original.id, copy_index);
  return out;
}

TrajectoryDataset augment_dataset(const TrajectoryDataset& ds, const CandidateSet& candidates,
                                  const ModificationStrategy& strategy, std::uint32_t copies,
                                  const RandomnessSpec& spec, unsigned workers) {
  if (copies < 1) throw Error(ErrorCode::InvalidParameter, "copies must be at least 1");
  check_parameters(strategy);

  std::vector<const Trajectory*> sources;
  sources.reserve(candidates.traj_ids.size());
  for (const auto& id : candidates.traj_ids) {
    const Trajectory* t = ds.find(id);
    if (t == nullptr) throw Error(ErrorCode::UnknownCandidate, id);
    if (parse_synthetic_id(id)) {
      throw Error(ErrorCode::IdCollision,
                  fmt::format("candidate '{}' is already a synthetic trajectory", id));
    }
    sources.push_back(t);
  }

  const std::size_t total = sources.size() * copies;
  std::vector<Trajectory> synthetics(total);
  parallel_for(total, workers, [&](std::size_t task) {
    const Trajectory& original = *sources[task / copies];
    synthetics[task] = make_synthetic(original, strategy, spec, task % copies + 1);
  });

  TrajectoryDataset out = ds;
  for (auto& synthetic : synthetics) {
    if (out.contains(synthetic.id)) throw Error(ErrorCode::IdCollision, synthetic.id);
    out.insert(std::move(synthetic));
  }
  return out;
}

}  // namespace trajaug
