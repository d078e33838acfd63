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

/// \file dataset.hpp
/// Input domain: rankers, courses, and their ordered item lists.
///
/// All types are plain immutable-by-convention values; nothing here mutates
/// its inputs, so instances can be shared freely across threads.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace owarank {

/// Short opaque token identifying a ranking source, e.g. "U1".
using RankerId = std::string;
/// Short opaque token identifying a ranked item, e.g. "DS1".
/// Ids are compared case-sensitively.
using ItemId = std::string;

/// Rankers in rank order; position 1 is the best-ranked source.
struct RankerRoster {
  std::vector<RankerId> rankers;

  bool operator==(const RankerRoster&) const = default;

  std::size_t size() const { return rankers.size(); }

  bool contains(std::string_view id) const {
    return std::find(rankers.begin(), rankers.end(), id) != rankers.end();
  }
};

/// One course with each ranker's preference list (position 1 = first rank).
/// A ranker absent from the map is equivalent to one with an empty list.
struct CourseRanking {
  std::string course;
  std::map<RankerId, std::vector<ItemId>> lists;

  bool operator==(const CourseRanking&) const = default;
};

/// A roster plus the per-course rankings it produced.
struct RankingDataset {
  RankerRoster roster;
  std::vector<CourseRanking> courses;

  bool operator==(const RankingDataset&) const = default;

  const CourseRanking* find_course(std::string_view name) const {
    for (const auto& c : courses) {
      if (c.course == name) return &c;
    }
    return nullptr;
  }
};

/// Reference ranking for one course, e.g. collected from domain experts.
struct GroundTruth {
  std::string course;
  std::vector<ItemId> ranking;

  bool operator==(const GroundTruth&) const = default;
};

/// Orders ids so that numeric runs compare by value: DS4 < DS12 < DS15.
/// Non-numeric runs compare bytewise; ties fall back to plain comparison.
inline bool natural_less(std::string_view a, std::string_view b) {
  const auto is_digit = [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ia = i;
      std::size_t jb = j;
      while (ia < a.size() && is_digit(a[ia])) ++ia;
      while (jb < b.size() && is_digit(b[jb])) ++jb;
      std::string_view ra = a.substr(i, ia - i);
      std::string_view rb = b.substr(j, jb - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ia;
      j = jb;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (i == a.size() && j == b.size()) return a < b;  // "DS01" vs "DS1"
  return i == a.size();
}

/// Checks every structural invariant and returns one message per violation,
/// each naming the offending course/ranker/item. Empty result means valid.
/// Violations are data, not failures; nothing here throws.
inline std::vector<std::string> validate_dataset(const RankingDataset& dataset) {
  std::vector<std::string> violations;
  const auto quote = [](std::string_view s) { return "\"" + std::string(s) + "\""; };

  if (dataset.roster.rankers.empty()) {
    violations.push_back("roster: must contain at least one ranker");
  }
  std::set<RankerId> roster_seen;
  for (const auto& ranker : dataset.roster.rankers) {
    if (ranker.empty()) {
      violations.push_back("roster: empty ranker id");
    } else if (!roster_seen.insert(ranker).second) {
      violations.push_back("roster: duplicate ranker " + quote(ranker));
    }
  }

  std::set<std::string> course_names;
  for (const auto& course : dataset.courses) {
    const std::string where = "course " + quote(course.course);
    if (!course_names.insert(course.course).second) {
      violations.push_back(where + ": duplicate course name");
    }
    for (const auto& [ranker, items] : course.lists) {
      if (!dataset.roster.contains(ranker)) {
        violations.push_back(where + ": ranker " + quote(ranker) + " is not in the roster");
      }
      std::set<ItemId> item_seen;
      for (const auto& item : items) {
        if (item.empty()) {
          violations.push_back(where + ", ranker " + quote(ranker) + ": empty item id");
        } else if (!item_seen.insert(item).second) {
          violations.push_back(where + ", ranker " + quote(ranker) + ": item " + quote(item) +
                               " listed more than once");
        }
      }
    }
  }
  return violations;
}

/// Union of every ranker's items for one course, ordered by first appearance
/// when scanning rankers in roster order and positions top-down.
inline std::vector<ItemId> distinct_items(const CourseRanking& course,
                                          const RankerRoster& roster) {
  std::vector<ItemId> items;
  std::set<ItemId> seen;
  for (const auto& ranker : roster.rankers) {
    const auto it = course.lists.find(ranker);
    if (it == course.lists.end()) continue;
    for (const auto& item : it->second) {
      if (seen.insert(item).second) items.push_back(item);
    }
  }
  return items;
}

}  // namespace owarank
