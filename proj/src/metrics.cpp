#include "qsc/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "qsc/version.hpp"

namespace qsc {

long long ConfusionMatrix::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

long long ConfusionMatrix::row_sum(int actual) const {
  long long t = 0;
  for (int p = 0; p < num_classes; ++p) t += at(actual, p);
  return t;
}

long long ConfusionMatrix::col_sum(int predicted) const {
  long long t = 0;
  for (int a = 0; a < num_classes; ++a) t += at(a, predicted);
  return t;
}

ConfusionMatrix confusion(std::span<const int> actual,
                          std::span<const int> predicted, int num_classes) {
  if (actual.size() != predicted.size())
    throw std::invalid_argument("confusion: label vectors differ in length");
  if (num_classes < 1)
    throw std::invalid_argument("confusion: need at least one class");
  ConfusionMatrix cm;
  cm.num_classes = num_classes;
  cm.counts.assign(static_cast<std::size_t>(num_classes) * num_classes, 0);
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (actual[i] < 0 || actual[i] >= num_classes || predicted[i] < 0 ||
        predicted[i] >= num_classes)
      throw std::invalid_argument("confusion: label out of range");
    ++cm.counts[static_cast<std::size_t>(actual[i]) * num_classes +
                predicted[i]];
  }
  return cm;
}

MetricsSummary summarize(const ConfusionMatrix& cm) {
  const long long total = cm.total();
  if (total == 0) throw std::invalid_argument("summarize: empty matrix");

  MetricsSummary s;
  long long diag = 0;
  for (int c = 0; c < cm.num_classes; ++c) diag += cm.at(c, c);
  s.accuracy = static_cast<double>(diag) / static_cast<double>(total);

  for (int c = 0; c < cm.num_classes; ++c) {
    const long long tp = cm.at(c, c);
    const long long col = cm.col_sum(c);
    const long long row = cm.row_sum(c);
    const double precision = col > 0 ? static_cast<double>(tp) / col : 0.0;
    const double recall = row > 0 ? static_cast<double>(tp) / row : 0.0;
    const double f1 = (precision + recall) > 0.0
                          ? 2.0 * precision * recall / (precision + recall)
                          : 0.0;
    s.precision += precision;
    s.recall += recall;
    s.f1 += f1;
  }
  s.precision /= cm.num_classes;
  s.recall /= cm.num_classes;
  s.f1 /= cm.num_classes;
  return s;
}

std::string format_table(const ConfusionMatrix& cm,
                         std::span<const std::string> class_names) {
  if (class_names.size() != static_cast<std::size_t>(cm.num_classes))
    throw std::invalid_argument("format_table: class name count mismatch");

  std::size_t width = 9;  // "actual\\pred"
  for (const auto& n : class_names) width = std::max(width, n.size());
  for (long long c : cm.counts)
    width = std::max(width, std::to_string(c).size());
  width += 2;

  auto pad = [width](const std::string& s) {
    return std::string(width - s.size(), ' ') + s;
  };

  std::string out = pad("act\\pred");
  for (const auto& n : class_names) out += pad(n);
  out += "\n";
  for (int a = 0; a < cm.num_classes; ++a) {
    out += pad(class_names[a]);
    for (int p = 0; p < cm.num_classes; ++p)
      out += pad(std::to_string(cm.at(a, p)));
    out += "\n";
  }
  return out;
}

std::string report_json(const ConfusionMatrix& cm, const MetricsSummary& summary,
                        std::span<const std::string> class_names,
                        const std::string& model_path,
                        const std::string& dataset_path) {
  nlohmann::ordered_json j;
  j["format"] = "qsc-report";
  j["tool"] = kToolVersion;
  j["model"] = model_path;
  j["dataset"] = dataset_path;
  j["metrics"] = {{"accuracy", summary.accuracy},
                  {"precision", summary.precision},
                  {"recall", summary.recall},
                  {"f1", summary.f1}};
  auto rows = nlohmann::ordered_json::array();
  for (int a = 0; a < cm.num_classes; ++a) {
    auto row = nlohmann::ordered_json::array();
    for (int p = 0; p < cm.num_classes; ++p) row.push_back(cm.at(a, p));
    rows.push_back(std::move(row));
  }
  j["confusion"] = std::move(rows);
  j["class_names"] = std::vector<std::string>(class_names.begin(),
                                              class_names.end());
  return j.dump(2) + "\n";
}

}  // namespace qsc
