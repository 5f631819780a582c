#include "trajaug/random.hpp"

#include <cmath>

namespace trajaug {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

double RandomStream::uniform(double low, double high) {
  // 53 random mantissa bits -> [0, 1).
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return low + (high - low) * unit;
}

std::size_t RandomStream::uniform_index(std::size_t n) {
  // Lemire-style rejection keeps the draw unbiased.
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return static_cast<std::size_t>(r % bound);
  }
}

bool RandomStream::bernoulli(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return uniform(0.0, 1.0) < p;
}

std::uint64_t derive_stream_state(const RandomnessSpec& spec, std::string_view key,
                                  std::uint64_t copy_index) {
  std::uint64_t h = splitmix64(spec.master_seed);
  h = splitmix64(h ^ fnv1a64(key));
  h = splitmix64(h ^ splitmix64(copy_index + 0x632BE59BD9B4E019ull));
  return h;
}

}  // namespace trajaug
