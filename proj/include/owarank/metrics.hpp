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

/// \file metrics.hpp
/// Ranking quality measures against a reference ranking.
///
/// Four veracity measures (larger is better): P@k, MAP, MRR, and a
/// modified Spearman rank correlation coefficient for partial lists.
/// Four fallacy measures (smaller is better): FPR@k, FNR@k, MAE, RMSE.
///
/// "Relevant" is operationalized as membership in the reference ranking's
/// top-k prefix; MAE/RMSE compare the 1-based rank positions of items both
/// lists share. Every function is a deterministic pure function.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "owarank/dataset.hpp"

namespace owarank {

/// A predicted ranking paired with the reference ("truth") ranking it is
/// judged against. Neither list may contain duplicates.
struct RankedPair {
  std::vector<ItemId> predicted;
  std::vector<ItemId> truth;
};

/// All per-course metric values for one (method, course, truth) triple.
struct EvaluationReport {
  std::string course;
  std::string method;
  std::size_t k = 10;
  double p_at_k = 0.0;
  double fpr_at_k = 0.0;
  double fnr_at_k = 0.0;
  double mae = 0.0;
  double rmse = 0.0;
  double rr = 0.0;
  double msrcc = 0.0;
};

namespace detail {

inline std::unordered_set<std::string_view> prefix_set(std::span<const ItemId> list,
                                                       std::size_t k) {
  std::unordered_set<std::string_view> set;
  const std::size_t n = std::min(k, list.size());
  set.reserve(n);
  for (std::size_t i = 0; i < n; ++i) set.insert(list[i]);
  return set;
}

/// 1-based position of each item.
inline std::unordered_map<std::string_view, std::size_t> position_index(
    std::span<const ItemId> list) {
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i], i + 1);
  return index;
}

inline void require_cutoff(std::size_t k) {
  if (k == 0) throw std::invalid_argument("metrics: cutoff k must be positive");
}

}  // namespace detail

/// |top-k(predicted) ∩ top-k(truth)| / k. The denominator is always k,
/// even when a list has fewer than k entries.
inline double precision_at_k(const RankedPair& pair, std::size_t k) {
  detail::require_cutoff(k);
  const auto truth_top = detail::prefix_set(pair.truth, k);
  std::size_t hits = 0;
  const std::size_t n = std::min(k, pair.predicted.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (truth_top.contains(pair.predicted[i])) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

/// False positive rate: |top-k(predicted) \ top-k(truth)| / k — the share
/// of recommended items the reference does not endorse.
inline double fpr_at_k(const RankedPair& pair, std::size_t k) {
  detail::require_cutoff(k);
  const auto truth_top = detail::prefix_set(pair.truth, k);
  std::size_t misses = 0;
  const std::size_t n = std::min(k, pair.predicted.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!truth_top.contains(pair.predicted[i])) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(k);
}

/// False negative rate: |top-k(truth) \ top-k(predicted)| / k — the share
/// of endorsed items the prediction fails to surface.
inline double fnr_at_k(const RankedPair& pair, std::size_t k) {
  detail::require_cutoff(k);
  const auto predicted_top = detail::prefix_set(pair.predicted, k);
  std::size_t missed = 0;
  const std::size_t n = std::min(k, pair.truth.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!predicted_top.contains(pair.truth[i])) ++missed;
  }
  return static_cast<double>(missed) / static_cast<double>(k);
}

/// Arithmetic mean of per-course precision values.
inline double mean_average_precision(std::span<const double> precisions) {
  if (precisions.empty()) {
    throw std::invalid_argument("mean_average_precision: no precision values");
  }
  double sum = 0.0;
  for (const double p : precisions) sum += p;
  return sum / static_cast<double>(precisions.size());
}

/// Mean |predicted position - truth position| over items both lists share.
inline double mean_absolute_error(const RankedPair& pair) {
  const auto truth_pos = detail::position_index(pair.truth);
  double sum = 0.0;
  std::size_t shared = 0;
  for (std::size_t i = 0; i < pair.predicted.size(); ++i) {
    const auto it = truth_pos.find(pair.predicted[i]);
    if (it == truth_pos.end()) continue;
    sum += std::abs(static_cast<double>(i + 1) - static_cast<double>(it->second));
    ++shared;
  }
  if (shared == 0) {
    throw std::invalid_argument("mean_absolute_error: rankings share no items");
  }
  return sum / static_cast<double>(shared);
}

/// sqrt of the mean squared position difference over shared items.
/// Always >= the mean absolute error, with equality exactly when every
/// position error is the same.
inline double root_mean_square_error(const RankedPair& pair) {
  const auto truth_pos = detail::position_index(pair.truth);
  double sum = 0.0;
  std::size_t shared = 0;
  for (std::size_t i = 0; i < pair.predicted.size(); ++i) {
    const auto it = truth_pos.find(pair.predicted[i]);
    if (it == truth_pos.end()) continue;
    const double diff = static_cast<double>(it->second) - static_cast<double>(i + 1);
    sum += diff * diff;
    ++shared;
  }
  if (shared == 0) {
    throw std::invalid_argument("root_mean_square_error: rankings share no items");
  }
  return std::sqrt(sum / static_cast<double>(shared));
}

/// 1/r where r is the predicted position of the truth's first item;
/// 0 when that item does not appear in the prediction at all.
inline double reciprocal_rank(const RankedPair& pair) {
  if (pair.truth.empty()) {
    throw std::invalid_argument("reciprocal_rank: truth ranking is empty");
  }
  for (std::size_t i = 0; i < pair.predicted.size(); ++i) {
    if (pair.predicted[i] == pair.truth.front()) {
      return 1.0 / static_cast<double>(i + 1);
    }
  }
  return 0.0;
}

/// Arithmetic mean of per-course reciprocal ranks.
inline double mean_reciprocal_rank(std::span<const double> rr_values) {
  if (rr_values.empty()) {
    throw std::invalid_argument("mean_reciprocal_rank: no reciprocal-rank values");
  }
  double sum = 0.0;
  for (const double rr : rr_values) sum += rr;
  return sum / static_cast<double>(rr_values.size());
}

/// Rank correlation between the identity assignment 1..m and a partial
/// assignment v_1..v_m:
///
///   rs' = 1 - sum_i (i - v_i)^2 / (m * (max_j(v_j)^2 - 1))
///
/// Equals 1 exactly iff v is the identity; can be negative for strongly
/// reversed assignments. Needs m >= 2 and max(v) > 1, otherwise the
/// denominator vanishes.
inline double modified_spearman(std::span<const std::size_t> partial_positions) {
  const std::size_t m = partial_positions.size();
  if (m < 2) {
    throw std::invalid_argument("modified_spearman: need at least two positions");
  }
  std::size_t max_position = 0;
  double numerator = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t v = partial_positions[i];
    if (v < 1) {
      throw std::invalid_argument("modified_spearman: positions are 1-based");
    }
    max_position = std::max(max_position, v);
    const double diff = static_cast<double>(i + 1) - static_cast<double>(v);
    numerator += diff * diff;
  }
  if (max_position == 1) {
    throw std::invalid_argument("modified_spearman: max position 1 gives a zero denominator");
  }
  const double max_sq = static_cast<double>(max_position) * static_cast<double>(max_position);
  return 1.0 - numerator / (static_cast<double>(m) * (max_sq - 1.0));
}

/// Runs every per-course measure at cutoff k. The rank correlation uses
/// v_i = predicted position of the item at truth position i, so every
/// truth item must appear in the prediction and the truth needs >= 2
/// entries.
inline EvaluationReport evaluate(const RankedPair& pair, std::size_t k) {
  detail::require_cutoff(k);
  const auto check_duplicates = [](std::span<const ItemId> list, const char* which) {
    std::unordered_set<std::string_view> seen;
    for (const auto& item : list) {
      if (!seen.insert(item).second) {
        throw std::invalid_argument(std::string("evaluate: duplicate item \"") + item +
                                    "\" in " + which + " ranking");
      }
    }
  };
  check_duplicates(pair.predicted, "predicted");
  check_duplicates(pair.truth, "truth");

  EvaluationReport report;
  report.k = k;
  report.p_at_k = precision_at_k(pair, k);
  report.fpr_at_k = fpr_at_k(pair, k);
  report.fnr_at_k = fnr_at_k(pair, k);
  report.mae = mean_absolute_error(pair);
  report.rmse = root_mean_square_error(pair);
  report.rr = reciprocal_rank(pair);

  const auto predicted_pos = detail::position_index(pair.predicted);
  std::vector<std::size_t> assignment;
  assignment.reserve(pair.truth.size());
  for (const auto& item : pair.truth) {
    const auto it = predicted_pos.find(item);
    if (it == predicted_pos.end()) {
      throw std::invalid_argument("evaluate: truth item \"" + item +
                                  "\" is missing from the predicted ranking");
    }
    assignment.push_back(it->second);
  }
  report.msrcc = modified_spearman(assignment);
  return report;
}

}  // namespace owarank
