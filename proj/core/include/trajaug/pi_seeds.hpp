#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace trajaug {

inline constexpr std::size_t kMaxPiSeeds = 1000;

/// The bundled decimal digits of pi after the point.
std::string_view pi_decimals();

/// Experiment seeds: consecutive non-overlapping 4-digit groups of pi's
/// decimals, read as integers (1415, 9265, 3589, ...). Throws
/// Error(NOutOfRange) unless 1 <= n <= kMaxPiSeeds.
std::vector<std::uint32_t> pi_seeds(std::size_t n);

}  // namespace trajaug
