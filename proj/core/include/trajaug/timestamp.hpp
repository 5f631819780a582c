#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace trajaug {

/// Timezone-naive wall-clock instant with nanosecond resolution, stored as
/// nanoseconds since 1970-01-01 00:00:00. DateTime values are never converted
/// between zones.
class Timestamp {
 public:
  constexpr Timestamp() = default;
  constexpr explicit Timestamp(std::int64_t nanos) : nanos_(nanos) {}

  static constexpr Timestamp from_seconds(std::int64_t seconds) {
    return Timestamp(seconds * 1'000'000'000);
  }

  /// Accepts "YYYY-MM-DD HH:MM:SS" with an optional ".fffffffff" fraction
  /// (1 to 9 digits). A 'T' separator is also accepted.
  static std::optional<Timestamp> parse(std::string_view text);

  /// "YYYY-MM-DD HH:MM:SS", followed by the fraction with trailing zeros
  /// removed when the instant is not on a whole second.
  std::string to_string() const;

  constexpr std::int64_t nanos() const { return nanos_; }

  friend constexpr auto operator<=>(Timestamp, Timestamp) = default;

 private:
  std::int64_t nanos_ = 0;
};

/// Elapsed seconds from `from` to `to`.
constexpr double seconds_between(Timestamp from, Timestamp to) {
  return static_cast<double>(to.nanos() - from.nanos()) * 1e-9;
}

}  // namespace trajaug
