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

/// \file aggregate.hpp
/// Positional scoring and consensus ranking.
///
/// The pipeline per course: turn each ranker's ordered list into positional
/// scores (rank 1 scores 1.0, each later rank drops by a fixed step), lay
/// them out as an item x ranker matrix, aggregate each item row into one
/// score — ordered weighted averaging or a plain unweighted sum — and sort
/// descending to obtain the consensus ranking.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "owarank/dataset.hpp"
#include "owarank/weights.hpp"

namespace owarank {

/// Positional score parameters. Rank p scores max(floor, 1 - (p-1) * step).
/// With the default step of 1/16, ranks 1..5 score 1, 0.9375, 0.875,
/// 0.8125, 0.75. The step is fixed rather than derived from the item count
/// so scores stay comparable across courses.
struct PasConfig {
  double step = 1.0 / 16.0;
  double floor = 0.0;

  void validate() const {
    if (!(step > 0.0 && step <= 1.0)) {
      throw std::invalid_argument("PasConfig: step must lie in (0, 1]");
    }
    if (!(floor >= 0.0 && floor < 1.0)) {
      throw std::invalid_argument("PasConfig: floor must lie in [0, 1)");
    }
  }
};

/// Item x ranker grid of positional scores; unranked cells hold 0.
struct ScoreMatrix {
  std::string course;
  std::vector<ItemId> items;      // distinct_items order
  std::vector<RankerId> rankers;  // roster order
  std::vector<std::vector<double>> scores;  // scores[item][ranker], each in [0, 1]

  std::span<const double> row(std::size_t item_index) const {
    return scores.at(item_index);
  }
};

enum class MethodKind { pas, most_preferred_first, quantifier };

/// One aggregation method of the comparison roster: the unweighted
/// positional baseline, the rank-proportional OWA, or OWA under a
/// linguistic quantifier. A quantifier is present exactly when
/// kind == quantifier.
struct MethodSpec {
  MethodKind kind = MethodKind::most_preferred_first;
  std::optional<Quantifier> quantifier;
  PasConfig pas;

  std::string label() const {
    switch (kind) {
      case MethodKind::pas:
        return "pas";
      case MethodKind::most_preferred_first:
        return "most-preferred-first";
      case MethodKind::quantifier:
        if (!quantifier) {
          throw std::invalid_argument("MethodSpec: quantifier method without a quantifier");
        }
        return quantifier->name;
    }
    throw std::invalid_argument("MethodSpec: unknown method kind");
  }
};

/// Score for a 1-based rank position.
inline double pas_score(std::size_t position, const PasConfig& config = {}) {
  config.validate();
  if (position == 0) {
    throw std::invalid_argument("pas_score: positions are 1-based");
  }
  const double raw = 1.0 - static_cast<double>(position - 1) * config.step;
  return std::max(config.floor, raw);
}

/// Positional scores for every distinct item of a course, rankers in
/// roster order. Cells for unranked (item, ranker) pairs are 0.
inline ScoreMatrix build_score_matrix(const CourseRanking& course,
                                      const RankerRoster& roster,
                                      const PasConfig& config = {}) {
  config.validate();
  ScoreMatrix matrix;
  matrix.course = course.course;
  matrix.items = distinct_items(course, roster);
  matrix.rankers = roster.rankers;
  matrix.scores.assign(matrix.items.size(),
                       std::vector<double>(matrix.rankers.size(), 0.0));
  for (std::size_t k = 0; k < matrix.rankers.size(); ++k) {
    const auto it = course.lists.find(matrix.rankers[k]);
    if (it == course.lists.end()) continue;
    const auto& list = it->second;
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      const auto row = std::find(matrix.items.begin(), matrix.items.end(), list[pos]);
      matrix.scores[static_cast<std::size_t>(row - matrix.items.begin())][k] =
          pas_score(pos + 1, config);
    }
  }
  return matrix;
}

/// Ordered weighted average: sorts the row descending so weight W_k lands
/// on the k-th largest value, then takes the weighted sum. Weights attach
/// to magnitude positions, not to sources.
inline double owa_aggregate(std::span<const double> row, const WeightVector& weights) {
  if (row.size() != weights.size()) {
    throw std::invalid_argument("owa_aggregate: row length " + std::to_string(row.size()) +
                                " does not match weight count " +
                                std::to_string(weights.size()));
  }
  std::vector<double> descending(row.begin(), row.end());
  std::sort(descending.begin(), descending.end(), std::greater<>());
  return std::inner_product(descending.begin(), descending.end(),
                            weights.values.begin(), 0.0);
}

/// Unweighted baseline: the plain sum of the row.
inline double pas_aggregate(std::span<const double> row) {
  return std::accumulate(row.begin(), row.end(), 0.0);
}

struct RankedEntry {
  ItemId item;
  double score = 0.0;

  bool operator==(const RankedEntry&) const = default;
};

/// Consensus ranking for one course: every distinct item exactly once,
/// scores non-increasing, ties ordered by ascending item id (numeric-suffix
/// aware, so DS4 < DS12 < DS15).
struct AggregatedRanking {
  std::string course;
  std::string method;
  std::vector<RankedEntry> entries;

  bool operator==(const AggregatedRanking&) const = default;

  std::vector<ItemId> items() const {
    std::vector<ItemId> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.item);
    return out;
  }
};

namespace detail {

inline AggregatedRanking sort_entries(const ScoreMatrix& matrix, std::string method,
                                      std::vector<double> scores) {
  AggregatedRanking ranking;
  ranking.course = matrix.course;
  ranking.method = std::move(method);
  ranking.entries.reserve(matrix.items.size());
  for (std::size_t i = 0; i < matrix.items.size(); ++i) {
    ranking.entries.push_back({matrix.items[i], scores[i]});
  }
  std::sort(ranking.entries.begin(), ranking.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return natural_less(a.item, b.item);
            });
  return ranking;
}

}  // namespace detail

/// OWA-aggregates every item row under the given weights. The weight count
/// must equal the ranker count.
inline AggregatedRanking rank_items(const ScoreMatrix& matrix, const WeightVector& weights) {
  if (weights.size() != matrix.rankers.size()) {
    throw std::invalid_argument("rank_items: weight count " + std::to_string(weights.size()) +
                                " does not match ranker count " +
                                std::to_string(matrix.rankers.size()));
  }
  std::vector<double> scores;
  scores.reserve(matrix.items.size());
  for (std::size_t i = 0; i < matrix.items.size(); ++i) {
    scores.push_back(owa_aggregate(matrix.row(i), weights));
  }
  return detail::sort_entries(matrix, weights.provenance, std::move(scores));
}

/// Unweighted positional baseline: each item's score is its row sum.
inline AggregatedRanking rank_items_unweighted(const ScoreMatrix& matrix) {
  std::vector<double> scores;
  scores.reserve(matrix.items.size());
  for (std::size_t i = 0; i < matrix.items.size(); ++i) {
    scores.push_back(pas_aggregate(matrix.row(i)));
  }
  return detail::sort_entries(matrix, "pas", std::move(scores));
}

/// Dispatches on the method kind; OWA methods get weights sized to the
/// matrix's ranker count.
inline AggregatedRanking rank_items(const ScoreMatrix& matrix, const MethodSpec& method) {
  switch (method.kind) {
    case MethodKind::pas:
      return rank_items_unweighted(matrix);
    case MethodKind::most_preferred_first:
      return rank_items(matrix, most_preferred_first_weights(matrix.rankers.size()));
    case MethodKind::quantifier:
      if (!method.quantifier) {
        throw std::invalid_argument("rank_items: quantifier method without a quantifier");
      }
      return rank_items(matrix, quantifier_weights(*method.quantifier, matrix.rankers.size()));
  }
  throw std::invalid_argument("rank_items: unknown method kind");
}

/// Full per-course pipeline: positional scores, then consensus ranking.
inline AggregatedRanking aggregate_course(const CourseRanking& course,
                                          const RankerRoster& roster,
                                          const MethodSpec& method) {
  return rank_items(build_score_matrix(course, roster, method.pas), method);
}

}  // namespace owarank
