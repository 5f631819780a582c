#include "trajaug/metrics.hpp"

#include <fmt/format.h>

#include <map>

#include "trajaug/error.hpp"

namespace trajaug {
namespace {

void check_inputs(std::span<const std::string> y_true, std::span<const std::string> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("{} true labels vs {} predictions", y_true.size(), y_pred.size()));
  }
  if (y_true.empty()) throw Error(ErrorCode::EmptyInput, "no labels to score");
}

}  // namespace

double accuracy(std::span<const std::string> y_true, std::span<const std::string> y_pred) {
  check_inputs(y_true, y_pred);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) correct += y_true[i] == y_pred[i];
  return static_cast<double>(correct) / static_cast<double>(y_true.size());
}

double f1_weighted(std::span<const std::string> y_true, std::span<const std::string> y_pred) {
  check_inputs(y_true, y_pred);
  struct Counts {
    std::size_t tp = 0, fp = 0, support = 0;
  };
  std::map<std::string_view, Counts> per_class;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    ++per_class[y_true[i]].support;
    if (y_true[i] == y_pred[i]) {
      ++per_class[y_true[i]].tp;
    } else {
      ++per_class[y_pred[i]].fp;
    }
  }

  double score = 0.0;
  for (const auto& [label, c] : per_class) {
    if (c.support == 0) continue;
    const double predicted = static_cast<double>(c.tp + c.fp);
    const double precision = predicted > 0 ? static_cast<double>(c.tp) / predicted : 0.0;
    const double recall = static_cast<double>(c.tp) / static_cast<double>(c.support);
    const double f1 = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
    score += f1 * static_cast<double>(c.support);
  }
  return score / static_cast<double>(y_true.size());
}

}  // namespace trajaug
