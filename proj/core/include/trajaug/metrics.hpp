#pragma once

#include <span>
#include <string>

namespace trajaug {

/// Fraction of positions where prediction equals truth.
/// Errors: LengthMismatch, EmptyInput.
double accuracy(std::span<const std::string> y_true, std::span<const std::string> y_pred);

/// Per-class F1 = 2PR / (P + R) (0 when P + R = 0), averaged with weights
/// equal to each class's share of y_true. Classes that appear only in
/// y_pred carry zero weight.
/// Errors: LengthMismatch, EmptyInput.
double f1_weighted(std::span<const std::string> y_true, std::span<const std::string> y_pred);

}  // namespace trajaug
