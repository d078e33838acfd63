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

/// \file io.hpp
/// File formats: dataset JSON (canonical) and CSV, ground-truth JSON,
/// aggregated-ranking JSON, evaluation-report JSON/markdown.
///
/// Serialization is deterministic: fixed field order and a fixed numeric
/// format (shortest round-trip decimal, widened to at least six significant
/// digits), so identical inputs produce byte-identical outputs.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "owarank/aggregate.hpp"
#include "owarank/dataset.hpp"
#include "owarank/metrics.hpp"

namespace owarank {

/// Input content could not be interpreted (malformed JSON/CSV, schema or
/// invariant violations detected at parse time).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The filesystem failed us: missing file, unreadable, unwritable.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal, widened to >= 6 significant digits.
inline std::string format_number(double value) {
  char shortest[40];
  const auto result = std::to_chars(shortest, shortest + sizeof(shortest), value);
  std::string text(shortest, result.ptr);
  if (!std::isfinite(value)) return text;

  int significant = 0;
  bool nonzero_seen = false;
  for (const char c : text) {
    if (c == 'e' || c == 'E') break;
    if (c >= '1' && c <= '9') {
      nonzero_seen = true;
      ++significant;
    } else if (c == '0' && nonzero_seen) {
      ++significant;
    }
  }
  if (significant >= 6) return text;

  char widened[64];
  std::snprintf(widened, sizeof(widened), "%#.6g", value);
  return widened;
}

inline std::string json_escape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size() + 2);
  for (const char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string json_string(std::string_view raw) {
  return "\"" + json_escape(raw) + "\"";
}

/// Filesystem-friendly course name: lowercase, runs of other characters
/// collapsed to single dashes.
inline std::string course_slug(std::string_view course) {
  std::string slug;
  bool pending_dash = false;
  for (const char c : course) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      if (pending_dash && !slug.empty()) slug += '-';
      pending_dash = false;
      slug += static_cast<char>(std::tolower(u));
    } else {
      pending_dash = true;
    }
  }
  return slug.empty() ? "course" : slug;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed while reading " + path.string());
  }
  return buffer.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << content;
  if (!out) {
    throw IoError("failed while writing " + path.string());
  }
}

// ---------------------------------------------------------------------------
// Dataset JSON
//
// {"roster": ["U1", ...],
//  "courses": [{"name": "...", "rankings": {"U1": ["DS1", ...], ...}}]}
// ---------------------------------------------------------------------------

inline RankingDataset parse_dataset_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("dataset JSON: ") + e.what());
  }
  try {
    RankingDataset dataset;
    for (const auto& ranker : doc.at("roster")) {
      dataset.roster.rankers.push_back(ranker.get<std::string>());
    }
    for (const auto& course_doc : doc.at("courses")) {
      CourseRanking course;
      course.course = course_doc.at("name").get<std::string>();
      if (course_doc.contains("rankings")) {
        for (const auto& [ranker, list] : course_doc.at("rankings").items()) {
          auto& target = course.lists[ranker];
          for (const auto& item : list) {
            target.push_back(item.get<std::string>());
          }
        }
      }
      dataset.courses.push_back(std::move(course));
    }
    return dataset;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("dataset JSON: ") + e.what());
  }
}

inline std::string dataset_to_json(const RankingDataset& dataset) {
  std::ostringstream out;
  out << "{\n  \"roster\": [";
  for (std::size_t i = 0; i < dataset.roster.rankers.size(); ++i) {
    out << (i ? ", " : "") << json_string(dataset.roster.rankers[i]);
  }
  out << "],\n  \"courses\": [";
  for (std::size_t c = 0; c < dataset.courses.size(); ++c) {
    const auto& course = dataset.courses[c];
    out << (c ? ",\n    {" : "\n    {") << "\n      \"name\": " << json_string(course.course)
        << ",\n      \"rankings\": {";
    std::size_t r = 0;
    for (const auto& [ranker, items] : course.lists) {
      out << (r++ ? ",\n        " : "\n        ") << json_string(ranker) << ": [";
      for (std::size_t i = 0; i < items.size(); ++i) {
        out << (i ? ", " : "") << json_string(items[i]);
      }
      out << "]";
    }
    out << (r ? "\n      }" : "}") << "\n    }";
  }
  out << (dataset.courses.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Dataset CSV
//
// Header course,ranker,position,item; entry rows carry all four fields and
// 1-based positions. Rows may appear in any order: each ranker's list is
// rebuilt from the position column, which must cover 1..n without gaps or
// duplicates. Declaration rows with empty position+item register a ranker
// (",U1,,"), a course ("Graphics,,,"), or a ranker with an explicitly empty
// list for a course ("Graphics,U2,,"), which keeps empty lists through a
// round trip. Because row order carries no meaning, the roster and the
// course list are ordered by natural id/name order.
// ---------------------------------------------------------------------------

inline RankingDataset parse_dataset_csv(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  if (lines.empty() || lines.front() != "course,ranker,position,item") {
    throw ParseError("dataset CSV: first line must be the header course,ranker,position,item");
  }

  std::set<RankerId> rankers;
  std::set<std::string> course_names;
  // (course, ranker) -> position -> item
  std::map<std::pair<std::string, RankerId>, std::map<std::size_t, ItemId>> entries;
  std::set<std::pair<std::string, RankerId>> declared_lists;

  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    if (line.empty()) continue;
    const std::string where = "dataset CSV line " + std::to_string(n + 1);

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 4) {
      throw ParseError(where + ": expected 4 fields, got " + std::to_string(fields.size()));
    }
    const std::string& course = fields[0];
    const std::string& ranker = fields[1];
    const std::string& position_text = fields[2];
    const std::string& item = fields[3];

    if (!ranker.empty()) rankers.insert(ranker);
    if (!course.empty()) course_names.insert(course);

    if (position_text.empty() && item.empty()) {
      if (course.empty() && ranker.empty()) {
        throw ParseError(where + ": row names neither a course nor a ranker");
      }
      if (!course.empty() && !ranker.empty()) {
        declared_lists.insert({course, ranker});
      }
      continue;
    }
    if (position_text.empty() || item.empty()) {
      throw ParseError(where + ": position and item must be both present or both empty");
    }
    if (course.empty() || ranker.empty()) {
      throw ParseError(where + ": entry rows need a course and a ranker");
    }
    std::size_t position = 0;
    const auto parsed = std::from_chars(position_text.data(),
                                        position_text.data() + position_text.size(), position);
    if (parsed.ec != std::errc{} || parsed.ptr != position_text.data() + position_text.size()) {
      throw ParseError(where + ": position \"" + position_text + "\" is not a number");
    }
    if (position == 0) {
      throw ParseError(where + ": positions are 1-based");
    }
    auto& list = entries[{course, ranker}];
    if (!list.emplace(position, item).second) {
      throw ParseError(where + ": duplicate position " + position_text + " for course \"" +
                       course + "\", ranker \"" + ranker + "\"");
    }
  }

  RankingDataset dataset;
  dataset.roster.rankers.assign(rankers.begin(), rankers.end());
  std::sort(dataset.roster.rankers.begin(), dataset.roster.rankers.end(),
            [](const RankerId& a, const RankerId& b) { return natural_less(a, b); });

  std::vector<std::string> ordered_courses(course_names.begin(), course_names.end());
  std::sort(ordered_courses.begin(), ordered_courses.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });

  for (const auto& name : ordered_courses) {
    CourseRanking course;
    course.course = name;
    for (const auto& [key, by_position] : entries) {
      if (key.first != name) continue;
      auto& list = course.lists[key.second];
      std::size_t expected = 1;
      for (const auto& [position, item] : by_position) {
        if (position != expected) {
          throw ParseError("dataset CSV: course \"" + name + "\", ranker \"" + key.second +
                           "\": positions must cover 1.." +
                           std::to_string(by_position.size()) + " without gaps (missing " +
                           std::to_string(expected) + ")");
        }
        list.push_back(item);
        ++expected;
      }
    }
    for (const auto& [declared_course, declared_ranker] : declared_lists) {
      if (declared_course == name) course.lists.try_emplace(declared_ranker);
    }
    dataset.courses.push_back(std::move(course));
  }
  return dataset;
}

inline std::string dataset_to_csv(const RankingDataset& dataset) {
  std::ostringstream out;
  out << "course,ranker,position,item\n";
  for (const auto& ranker : dataset.roster.rankers) {
    out << "," << ranker << ",,\n";
  }
  for (const auto& course : dataset.courses) {
    if (course.lists.empty()) {
      out << course.course << ",,,\n";
      continue;
    }
    for (const auto& [ranker, items] : course.lists) {
      if (items.empty()) {
        out << course.course << "," << ranker << ",,\n";
        continue;
      }
      for (std::size_t i = 0; i < items.size(); ++i) {
        out << course.course << "," << ranker << "," << (i + 1) << "," << items[i] << "\n";
      }
    }
  }
  return out.str();
}

/// Loads a dataset, picking the format from the file extension
/// (.csv -> CSV, anything else -> JSON).
inline RankingDataset load_dataset(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::string extension = path.extension().string();
  for (auto& c : extension) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (extension == ".csv") return parse_dataset_csv(content);
  return parse_dataset_json(content);
}

// ---------------------------------------------------------------------------
// Ground truth JSON: {"course": "...", "ranking": ["DS9", ...]} or an array
// of such objects.
// ---------------------------------------------------------------------------

inline std::vector<GroundTruth> parse_ground_truths(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ground-truth JSON: ") + e.what());
  }
  const auto parse_one = [](const nlohmann::json& node) {
    GroundTruth truth;
    truth.course = node.at("course").get<std::string>();
    std::set<ItemId> seen;
    for (const auto& item : node.at("ranking")) {
      truth.ranking.push_back(item.get<std::string>());
      if (!seen.insert(truth.ranking.back()).second) {
        throw ParseError("ground-truth JSON: course \"" + truth.course + "\": item \"" +
                         truth.ranking.back() + "\" listed more than once");
      }
    }
    return truth;
  };
  try {
    std::vector<GroundTruth> truths;
    if (doc.is_array()) {
      for (const auto& node : doc) truths.push_back(parse_one(node));
    } else {
      truths.push_back(parse_one(doc));
    }
    return truths;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ground-truth JSON: ") + e.what());
  }
}

inline std::vector<GroundTruth> load_ground_truths(const std::filesystem::path& path) {
  return parse_ground_truths(read_file(path));
}

inline std::string ground_truth_to_json(const GroundTruth& truth) {
  std::ostringstream out;
  out << "{\n  \"course\": " << json_string(truth.course) << ",\n  \"ranking\": [";
  for (std::size_t i = 0; i < truth.ranking.size(); ++i) {
    out << (i ? ", " : "") << json_string(truth.ranking[i]);
  }
  out << "]\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Aggregated ranking JSON
// ---------------------------------------------------------------------------

inline std::string aggregated_to_json(const AggregatedRanking& ranking) {
  std::ostringstream out;
  out << "{\n  \"course\": " << json_string(ranking.course)
      << ",\n  \"method\": " << json_string(ranking.method) << ",\n  \"entries\": [";
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << "{\"item\": " << json_string(ranking.entries[i].item)
        << ", \"score\": " << format_number(ranking.entries[i].score) << "}";
  }
  out << (ranking.entries.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

inline AggregatedRanking parse_aggregated_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ranking JSON: ") + e.what());
  }
  try {
    AggregatedRanking ranking;
    ranking.course = doc.at("course").get<std::string>();
    ranking.method = doc.value("method", std::string{});
    std::set<ItemId> seen;
    for (const auto& entry : doc.at("entries")) {
      RankedEntry e;
      e.item = entry.at("item").get<std::string>();
      e.score = entry.at("score").get<double>();
      if (!seen.insert(e.item).second) {
        throw ParseError("ranking JSON: item \"" + e.item + "\" listed more than once");
      }
      ranking.entries.push_back(std::move(e));
    }
    return ranking;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ranking JSON: ") + e.what());
  }
}

inline std::string aggregated_to_markdown(const AggregatedRanking& ranking) {
  std::ostringstream out;
  out << "### " << ranking.course << " (" << ranking.method << ")\n\n"
      << "| rank | item | score |\n|------|------|-------|\n";
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    out << "| " << (i + 1) << " | " << ranking.entries[i].item << " | "
        << format_number(ranking.entries[i].score) << " |\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation report. The JSON carries the canonical eight measures; for a
// single course the mean measures coincide with their per-course values
// (map = p@k, mrr = rr).
// ---------------------------------------------------------------------------

inline std::string report_to_json(const EvaluationReport& report) {
  std::ostringstream out;
  out << "{\n  \"course\": " << json_string(report.course)
      << ",\n  \"method\": " << json_string(report.method) << ",\n  \"k\": " << report.k
      << ",\n  \"p_at_k\": " << format_number(report.p_at_k)
      << ",\n  \"fpr_at_k\": " << format_number(report.fpr_at_k)
      << ",\n  \"fnr_at_k\": " << format_number(report.fnr_at_k)
      << ",\n  \"map\": " << format_number(report.p_at_k)
      << ",\n  \"mae\": " << format_number(report.mae)
      << ",\n  \"mrr\": " << format_number(report.rr)
      << ",\n  \"rmse\": " << format_number(report.rmse)
      << ",\n  \"msrcc\": " << format_number(report.msrcc) << "\n}\n";
  return out.str();
}

inline std::string report_to_markdown(const EvaluationReport& report) {
  const std::string k = std::to_string(report.k);
  std::ostringstream out;
  out << "### " << report.course << " (" << report.method << ", k=" << k << ")\n\n"
      << "| measure | value |\n|---------|-------|\n"
      << "| p@" << k << " | " << format_number(report.p_at_k) << " |\n"
      << "| fpr@" << k << " | " << format_number(report.fpr_at_k) << " |\n"
      << "| fnr@" << k << " | " << format_number(report.fnr_at_k) << " |\n"
      << "| map | " << format_number(report.p_at_k) << " |\n"
      << "| mae | " << format_number(report.mae) << " |\n"
      << "| mrr | " << format_number(report.rr) << " |\n"
      << "| rmse | " << format_number(report.rmse) << " |\n"
      << "| msrcc | " << format_number(report.msrcc) << " |\n";
  return out.str();
}

}  // namespace owarank
