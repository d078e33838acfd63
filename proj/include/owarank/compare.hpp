/*
 * Copyright 2026 The owarank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/// \file compare.hpp
/// Multi-method comparison: run several aggregation methods over a dataset,
/// evaluate each against ground truth, and report per-method means plus the
/// percent improvement of one designated "proposed" method over every other
/// baseline.
///
/// Improvement is sign-consistent with the measure's direction. For veracity
/// measures (higher is better) it is (proposed - baseline) / baseline x 100;
/// for fallacy measures (lower is better) it is (baseline - proposed) /
/// baseline x 100, so beating a baseline always reads as a positive
/// percentage. A zero baseline makes the ratio undefined unless the proposed
/// value is also zero (reported as 0); otherwise the cell is empty.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "owarank/aggregate.hpp"
#include "owarank/dataset.hpp"
#include "owarank/io.hpp"
#include "owarank/metrics.hpp"

namespace owarank {

/// Whether a larger value of the measure is better (veracity) or worse
/// (fallacy).
enum class MeasureDirection { veracity, fallacy };

/// The eight report measures in canonical order.
struct MeasureInfo {
  const char* name;
  MeasureDirection direction;
  double EvaluationReport::* field;
};

inline const std::vector<MeasureInfo>& report_measures() {
  static const std::vector<MeasureInfo> measures = {
      {"p_at_k", MeasureDirection::veracity, &EvaluationReport::p_at_k},
      {"fpr_at_k", MeasureDirection::fallacy, &EvaluationReport::fpr_at_k},
      {"fnr_at_k", MeasureDirection::fallacy, &EvaluationReport::fnr_at_k},
      {"map", MeasureDirection::veracity, &EvaluationReport::p_at_k},
      {"mae", MeasureDirection::fallacy, &EvaluationReport::mae},
      {"mrr", MeasureDirection::veracity, &EvaluationReport::rr},
      {"rmse", MeasureDirection::fallacy, &EvaluationReport::rmse},
      {"msrcc", MeasureDirection::veracity, &EvaluationReport::msrcc},
  };
  return measures;
}

/// Mean of each measure over all evaluated courses, for one method.
struct MethodMeans {
  std::string method;
  std::vector<double> values;  ///< parallel to report_measures()
};

/// Percent improvement of the proposed method over one baseline, per measure.
/// An empty cell means the ratio is undefined (zero baseline, nonzero
/// proposed value).
struct ImprovementRow {
  std::string baseline;
  std::vector<std::optional<double>> values;  ///< parallel to report_measures()
};

struct ComparisonReport {
  std::size_t k = 10;
  std::string proposed;
  std::vector<EvaluationReport> rows;  ///< method-major, then dataset course order
  std::vector<MethodMeans> means;      ///< one per method, input order
  std::vector<ImprovementRow> improvements;  ///< one per non-proposed method
};

/// Signed percent improvement of `proposed` over `baseline` for a measure
/// with the given direction. Empty when the ratio is undefined.
inline std::optional<double> improvement_percent(double baseline, double proposed,
                                                 MeasureDirection direction) {
  if (baseline == 0.0) {
    if (proposed == 0.0) return 0.0;
    return std::nullopt;
  }
  const double delta = direction == MeasureDirection::veracity ? proposed - baseline
                                                               : baseline - proposed;
  return delta / baseline * 100.0;
}

/// Runs every method over every course of `dataset`, evaluates against the
/// matching ground truth, and assembles the comparison report.
///
/// Requires at least two methods with distinct labels, a proposed label drawn
/// from them, and a ground truth for every course in the dataset.
inline ComparisonReport compare_methods(const RankingDataset& dataset,
                                        const std::vector<GroundTruth>& truths,
                                        const std::vector<MethodSpec>& methods,
                                        const std::string& proposed, std::size_t k) {
  if (methods.size() < 2) {
    throw std::invalid_argument("comparison needs at least two methods");
  }
  std::vector<std::string> labels;
  for (const auto& method : methods) {
    const std::string label = method.label();
    if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
      throw std::invalid_argument("duplicate method \"" + label + "\" in comparison");
    }
    labels.push_back(label);
  }
  if (std::find(labels.begin(), labels.end(), proposed) == labels.end()) {
    throw std::invalid_argument("proposed method \"" + proposed +
                                "\" is not among the compared methods");
  }
  if (dataset.courses.empty()) {
    throw std::invalid_argument("comparison needs at least one course");
  }

  const auto truth_for = [&truths](const std::string& course) -> const GroundTruth& {
    for (const auto& truth : truths) {
      if (truth.course == course) return truth;
    }
    throw std::invalid_argument("no ground truth for course \"" + course + "\"");
  };

  ComparisonReport report;
  report.k = k;
  report.proposed = proposed;
  const auto& measures = report_measures();

  for (const auto& method : methods) {
    MethodMeans mean;
    mean.method = method.label();
    mean.values.assign(measures.size(), 0.0);
    for (const auto& course : dataset.courses) {
      const GroundTruth& truth = truth_for(course.course);
      const AggregatedRanking ranking = aggregate_course(course, dataset.roster, method);
      EvaluationReport row = evaluate({ranking.items(), truth.ranking}, k);
      row.course = course.course;
      row.method = mean.method;
      for (std::size_t i = 0; i < measures.size(); ++i) {
        mean.values[i] += row.*(measures[i].field);
      }
      report.rows.push_back(std::move(row));
    }
    for (auto& value : mean.values) value /= static_cast<double>(dataset.courses.size());
    report.means.push_back(std::move(mean));
  }

  const auto& proposed_means =
      *std::find_if(report.means.begin(), report.means.end(),
                    [&proposed](const MethodMeans& m) { return m.method == proposed; });
  for (const auto& baseline : report.means) {
    if (baseline.method == proposed) continue;
    ImprovementRow row;
    row.baseline = baseline.method;
    for (std::size_t i = 0; i < measures.size(); ++i) {
      row.values.push_back(improvement_percent(baseline.values[i], proposed_means.values[i],
                                               measures[i].direction));
    }
    report.improvements.push_back(std::move(row));
  }
  return report;
}

inline std::string comparison_to_json(const ComparisonReport& report) {
  const auto& measures = report_measures();
  std::ostringstream out;
  out << "{\n  \"k\": " << report.k << ",\n  \"proposed\": " << json_string(report.proposed)
      << ",\n  \"rows\": [";
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    const auto& row = report.rows[r];
    out << (r ? ",\n    {" : "\n    {") << "\"course\": " << json_string(row.course)
        << ", \"method\": " << json_string(row.method);
    for (const auto& measure : measures) {
      out << ", \"" << measure.name << "\": " << format_number(row.*(measure.field));
    }
    out << "}";
  }
  out << (report.rows.empty() ? "]" : "\n  ]") << ",\n  \"means\": [";
  for (std::size_t m = 0; m < report.means.size(); ++m) {
    const auto& mean = report.means[m];
    out << (m ? ",\n    {" : "\n    {") << "\"method\": " << json_string(mean.method);
    for (std::size_t i = 0; i < measures.size(); ++i) {
      out << ", \"" << measures[i].name << "\": " << format_number(mean.values[i]);
    }
    out << "}";
  }
  out << (report.means.empty() ? "]" : "\n  ]") << ",\n  \"improvements\": [";
  for (std::size_t m = 0; m < report.improvements.size(); ++m) {
    const auto& row = report.improvements[m];
    out << (m ? ",\n    {" : "\n    {") << "\"baseline\": " << json_string(row.baseline);
    for (std::size_t i = 0; i < measures.size(); ++i) {
      out << ", \"" << measures[i].name << "\": ";
      if (row.values[i]) {
        out << format_number(*row.values[i]);
      } else {
        out << "null";
      }
    }
    out << "}";
  }
  out << (report.improvements.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

inline std::string comparison_to_markdown(const ComparisonReport& report) {
  const auto& measures = report_measures();
  std::ostringstream out;

  const auto header = [&measures, &out](const char* first) {
    out << "| " << first << " |";
    for (const auto& measure : measures) out << " " << measure.name << " |";
    out << "\n|";
    for (std::size_t i = 0; i <= measures.size(); ++i) out << "---|";
    out << "\n";
  };

  out << "## Per-course results (k=" << report.k << ")\n\n";
  header("course / method");
  for (const auto& row : report.rows) {
    out << "| " << row.course << " / " << row.method << " |";
    for (const auto& measure : measures) {
      out << " " << format_number(row.*(measure.field)) << " |";
    }
    out << "\n";
  }

  out << "\n## Method means\n\n";
  header("method");
  for (const auto& mean : report.means) {
    out << "| " << mean.method << " |";
    for (const auto& value : mean.values) out << " " << format_number(value) << " |";
    out << "\n";
  }

  out << "\n## Improvement of " << report.proposed << " over each baseline (%)\n\n";
  header("baseline");
  for (const auto& row : report.improvements) {
    out << "| " << row.baseline << " |";
    for (const auto& value : row.values) {
      if (value) {
        out << " " << format_number(*value) << " |";
      } else {
        out << " n/a |";
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace owarank
