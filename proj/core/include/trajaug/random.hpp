#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace trajaug {

struct RandomnessSpec {
  std::uint64_t master_seed = 0;
};

/// A seeded pseudo-random stream. Streams are derived from
/// (master_seed, key, copy_index) rather than split off a shared generator,
/// so results do not depend on the order in which work is scheduled.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t state) : state_(state), engine_(state) {}

  /// The 64-bit state the stream was derived from.
  std::uint64_t state() const { return state_; }

  /// Uniform in [low, high).
  double uniform(double low, double high);
  /// Uniform in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);
  bool bernoulli(double p);

  template <typename T>
  void shuffle(std::span<T> items) {
    // Fisher-Yates with our own index draws; std::shuffle's draw pattern is
    // unspecified.
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform_index(i)]);
    }
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t state_;
  std::mt19937_64 engine_;
};

/// Stable 64-bit mix of the three inputs (FNV-1a over the key, SplitMix64
/// finalization). Pure: equal inputs give equal states on every call.
std::uint64_t derive_stream_state(const RandomnessSpec& spec, std::string_view key,
                                  std::uint64_t copy_index);

inline RandomStream derive_stream(const RandomnessSpec& spec, std::string_view key,
                                  std::uint64_t copy_index) {
  return RandomStream(derive_stream_state(spec, key, copy_index));
}

}  // namespace trajaug
