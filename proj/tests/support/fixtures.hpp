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

/// \file fixtures.hpp
/// The textbook fixture: seven university rankers (U1..U7) ranking sixteen
/// data-structure books (DS1..DS16) for one course, together with externally
/// recorded reference values for it (rank-proportional weights to five
/// decimals, the worked DS1 aggregate, and the published consensus scores).

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "owarank/dataset.hpp"

namespace owarank::testing {

inline const std::string kCourseName = "Data Structure";

/// Table-3-style input: each ranker's ordered book list for the course.
inline RankingDataset textbook_dataset() {
  RankingDataset dataset;
  dataset.roster.rankers = {"U1", "U2", "U3", "U4", "U5", "U6", "U7"};
  CourseRanking course;
  course.course = kCourseName;
  course.lists["U1"] = {"DS1"};
  course.lists["U2"] = {"DS2", "DS3"};
  course.lists["U3"] = {"DS4", "DS5", "DS6", "DS7", "DS8"};
  course.lists["U4"] = {"DS9", "DS1", "DS10", "DS11"};
  course.lists["U5"] = {"DS12", "DS8", "DS13", "DS3"};
  course.lists["U6"] = {"DS9", "DS14", "DS10"};
  course.lists["U7"] = {"DS15", "DS16"};
  dataset.courses.push_back(std::move(course));
  return dataset;
}

inline const CourseRanking& textbook_course() {
  static const CourseRanking course = textbook_dataset().courses.front();
  return course;
}

/// Items in first-appearance order over the roster — the score-matrix row
/// order for the fixture.
inline std::vector<ItemId> grid_items() {
  std::vector<ItemId> items;
  for (int i = 1; i <= 16; ++i) items.push_back("DS" + std::to_string(i));
  return items;
}

/// The 16 x 7 positional-score grid for the fixture at the default step of
/// 1/16 (rows follow grid_items(), columns U1..U7). Unranked cells are 0.
inline const std::array<std::array<double, 7>, 16>& positional_grid() {
  static const std::array<std::array<double, 7>, 16> grid = {{
      {1, 0, 0, 0.9375, 0, 0, 0},       // DS1
      {0, 1, 0, 0, 0, 0, 0},            // DS2
      {0, 0.9375, 0, 0, 0.8125, 0, 0},  // DS3
      {0, 0, 1, 0, 0, 0, 0},            // DS4
      {0, 0, 0.9375, 0, 0, 0, 0},       // DS5
      {0, 0, 0.875, 0, 0, 0, 0},        // DS6
      {0, 0, 0.8125, 0, 0, 0, 0},       // DS7
      {0, 0, 0.75, 0, 0.9375, 0, 0},    // DS8
      {0, 0, 0, 1, 0, 1, 0},            // DS9
      {0, 0, 0, 0.875, 0, 0.875, 0},    // DS10
      {0, 0, 0, 0.8125, 0, 0, 0},       // DS11
      {0, 0, 0, 0, 1, 0, 0},            // DS12
      {0, 0, 0, 0, 0.875, 0, 0},        // DS13
      {0, 0, 0, 0, 0, 0.9375, 0},       // DS14
      {0, 0, 0, 0, 0, 0, 1},            // DS15
      {0, 0, 0, 0, 0, 0, 0.9375},       // DS16
  }};
  return grid;
}

/// Externally recorded most-preferred-first weights for seven rankers,
/// truncated to five decimals.
inline std::vector<double> reference_mpf_weights() {
  return {0.25, 0.21428, 0.17857, 0.14285, 0.10714, 0.07142, 0.03571};
}

/// The worked aggregate for DS1's row under those weights: the reference
/// value carries the truncation of the five-decimal weights, so it sits
/// within 1e-4 of the exact computation, not closer.
inline constexpr double kWorkedDs1Aggregate = 0.450813;

/// Externally recorded consensus scores for the fixture under
/// most-preferred-first aggregation, in published rank order.
///
/// Known inconsistency: the recorded DS2 value (0.2142) cannot arise from
/// the aggregation rule. DS2's row has a single nonzero entry of 1, so any
/// descending reordering puts that 1 first and the aggregate is exactly
/// W1 = 7/28 = 0.25. Checks therefore compare DS2 against the independently
/// computed 0.25 and drop it from order comparisons.
inline std::vector<std::pair<ItemId, double>> reference_consensus() {
  return {
      {"DS9", 0.4642},    {"DS1", 0.450813},  {"DS3", 0.408413}, {"DS10", 0.406175},
      {"DS8", 0.395025},  {"DS4", 0.25},      {"DS12", 0.25},    {"DS15", 0.25},
      {"DS5", 0.234375},  {"DS14", 0.234375}, {"DS16", 0.234375},
      {"DS6", 0.21875},   {"DS13", 0.21875},  {"DS2", 0.2142},
      {"DS7", 0.203125},  {"DS11", 0.203125},
  };
}

/// Published consensus order with the inconsistent DS2 row removed.
inline std::vector<ItemId> reference_order_without_ds2() {
  std::vector<ItemId> order;
  for (const auto& [item, score] : reference_consensus()) {
    if (item != "DS2") order.push_back(item);
  }
  return order;
}

/// Synthetic ground truth: the top-1-weighted consensus of the fixture
/// (each item scored by its best position anywhere, ties in item order).
inline GroundTruth consensus_truth() {
  GroundTruth truth;
  truth.course = kCourseName;
  truth.ranking = {"DS1", "DS2", "DS4", "DS9",  "DS12", "DS15", "DS3",  "DS5",
                   "DS8", "DS14", "DS16", "DS6", "DS10", "DS13", "DS7", "DS11"};
  return truth;
}

}  // namespace owarank::testing
