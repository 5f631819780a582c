#include "trajaug/classifier.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "trajaug/error.hpp"

namespace trajaug {

FeatureMatrix to_feature_matrix(std::span<const SegmentFeatureRow> rows, bool with_labels) {
  FeatureMatrix m;
  const auto& names = feature_columns();
  m.columns.assign(names.begin(), names.end());
  m.rows.reserve(rows.size());
  for (const auto& row : rows) {
    m.rows.emplace_back(row.values.begin(), row.values.end());
    if (with_labels) {
      if (!row.label) throw Error(ErrorCode::MissingLabel, row.traj_id);
      m.labels.push_back(*row.label);
    }
  }
  return m;
}

KnnClassifier::KnnClassifier(std::size_t k) : k_(k) {
  if (k_ == 0 || k_ % 2 == 0) {
    throw Error(ErrorCode::InvalidParameter, fmt::format("k must be a positive odd integer, got {}", k_));
  }
}

std::string KnnClassifier::name() const { return fmt::format("KNeighbors(k={})", k_); }

std::vector<std::string> KnnClassifier::fit_predict(const FeatureMatrix& train,
                                                    const FeatureMatrix& test) const {
  if (train.rows.empty()) throw Error(ErrorCode::EmptyTrainingSet, "no training rows");
  if (train.labels.size() != train.rows.size()) {
    throw Error(ErrorCode::MissingLabel, "training rows must all be labeled");
  }
  if (train.columns != test.columns) {
    throw Error(ErrorCode::ColumnMismatch, "train and test feature columns differ");
  }
  const std::size_t dims = train.columns.size();
  for (const auto* m : {&train, &test}) {
    for (const auto& row : m->rows) {
      if (row.size() != dims) throw Error(ErrorCode::ColumnMismatch, "row width differs from header");
    }
  }

  // Column scales; a zero scale marks a column that is ignored.
  const double n = static_cast<double>(train.rows.size());
  std::vector<double> mean(dims, 0.0), inv_std(dims, 0.0);
  for (std::size_t c = 0; c < dims; ++c) {
    double sum = 0.0;
    for (const auto& row : train.rows) sum += row[c];
    mean[c] = sum / n;
    if (train.rows.size() < 2 || !std::isfinite(mean[c])) continue;
    double ss = 0.0;
    for (const auto& row : train.rows) ss += (row[c] - mean[c]) * (row[c] - mean[c]);
    const double sd = std::sqrt(ss / (n - 1.0));
    if (sd > 0.0 && std::isfinite(sd)) inv_std[c] = 1.0 / sd;
  }

  auto standardize = [&](const std::vector<double>& row) {
    std::vector<double> z(dims, 0.0);
    for (std::size_t c = 0; c < dims; ++c) {
      if (inv_std[c] != 0.0) z[c] = (row[c] - mean[c]) * inv_std[c];
    }
    return z;
  };
  std::vector<std::vector<double>> train_z;
  train_z.reserve(train.rows.size());
  for (const auto& row : train.rows) train_z.push_back(standardize(row));

  const std::size_t k = std::min(k_, train.rows.size());
  std::vector<std::string> predictions;
  predictions.reserve(test.rows.size());
  std::vector<std::pair<double, std::size_t>> dist(train_z.size());
  for (const auto& row : test.rows) {
    const auto z = standardize(row);
    for (std::size_t i = 0; i < train_z.size(); ++i) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < dims; ++c) {
        const double diff = z[c] - train_z[i][c];
        d2 += diff * diff;
      }
      // NaN distances sort last.
      dist[i] = {std::isnan(d2) ? std::numeric_limits<double>::infinity() : d2, i};
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());

    std::map<std::string_view, std::size_t> votes;
    for (std::size_t j = 0; j < k; ++j) ++votes[train.labels[dist[j].second]];
    // std::map iterates labels in ascending order, so max_element keeps the
    // smallest label among ties.
    auto best = std::max_element(votes.begin(), votes.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    predictions.emplace_back(best->first);
  }
  return predictions;
}

}  // namespace trajaug
