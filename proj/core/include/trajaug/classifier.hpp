#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "trajaug/kinematics.hpp"

namespace trajaug {

/// Dense feature table with named columns.
struct FeatureMatrix {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;  ///< empty for unlabeled data

  std::size_t size() const { return rows.size(); }
};

/// Builds a matrix over the standard 45 feature columns. Labels are copied
/// when `with_labels` is set (missing labels raise Error(MissingLabel)).
FeatureMatrix to_feature_matrix(std::span<const SegmentFeatureRow> rows, bool with_labels);

/// Interface for models plugged into the evaluation harness.
class Classifier {
 public:
  virtual ~Classifier() = default;

  /// Name written to the model column of the results.
  virtual std::string name() const = 0;

  /// Fits on `train` (labels required) and predicts one label per row of
  /// `test`. Errors: EmptyTrainingSet, ColumnMismatch.
  virtual std::vector<std::string> fit_predict(const FeatureMatrix& train,
                                               const FeatureMatrix& test) const = 0;
};

/// k-nearest neighbours in z-score standardized feature space. The
/// standardization (mean, sample std) is fitted on the training rows only;
/// zero-variance and non-finite columns contribute no distance. Votes are
/// tied toward the lexicographically smallest label; equal distances keep
/// training-row order.
class KnnClassifier final : public Classifier {
 public:
  explicit KnnClassifier(std::size_t k = 5);

  std::size_t k() const { return k_; }
  std::string name() const override;
  std::vector<std::string> fit_predict(const FeatureMatrix& train,
                                       const FeatureMatrix& test) const override;

 private:
  std::size_t k_;
};

}  // namespace trajaug
