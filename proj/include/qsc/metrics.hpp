#pragma once

#include <span>
#include <string>
#include <vector>

namespace qsc {

/// Row = actual class, column = predicted class.
struct ConfusionMatrix {
  int num_classes = 0;
  std::vector<long long> counts;  // row-major, k x k

  long long at(int actual, int predicted) const {
    return counts[static_cast<std::size_t>(actual) * num_classes + predicted];
  }
  long long total() const;
  long long row_sum(int actual) const;
  long long col_sum(int predicted) const;
};

ConfusionMatrix confusion(std::span<const int> actual,
                          std::span<const int> predicted, int num_classes);

/// Accuracy plus macro-averaged precision/recall/F1. Classes whose
/// denominator is zero contribute 0 and still count in the macro mean.
struct MetricsSummary {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

MetricsSummary summarize(const ConfusionMatrix& cm);

/// Aligned plain-text confusion table with per-class names.
std::string format_table(const ConfusionMatrix& cm,
                         std::span<const std::string> class_names);

/// Report JSON: {metrics, confusion, class_names}.
std::string report_json(const ConfusionMatrix& cm, const MetricsSummary& summary,
                        std::span<const std::string> class_names,
                        const std::string& model_path,
                        const std::string& dataset_path);

}  // namespace qsc
