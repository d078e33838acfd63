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

/// \file cli.hpp
/// Command implementations behind the owarank binary. They are plain
/// functions over option structs so tests can drive them in-process; the
/// binary's main() only parses flags and dispatches here.
///
/// Exit-code contract: 0 success, 1 validation or usage failure (bad flags,
/// malformed content, violated invariants), 2 I/O failure (missing or
/// unwritable files).

#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "owarank/aggregate.hpp"
#include "owarank/compare.hpp"
#include "owarank/dataset.hpp"
#include "owarank/io.hpp"
#include "owarank/metrics.hpp"
#include "owarank/weights.hpp"

namespace owarank {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// Parses one method token. Accepted forms:
///   pas
///   mpf | most-preferred-first
///   quantifier:most | quantifier:at-least-half | quantifier:as-many-as-possible
///   most | at-least-half | as-many-as-possible        (preset shorthand)
///   quantifier:a=<x>,b=<y>                            (custom knots)
inline MethodSpec parse_method_token(const std::string& token, const PasConfig& pas = {}) {
  MethodSpec method;
  method.pas = pas;
  if (token == "pas") {
    method.kind = MethodKind::pas;
    return method;
  }
  if (token == "mpf" || token == "most-preferred-first") {
    method.kind = MethodKind::most_preferred_first;
    return method;
  }
  std::string body = token;
  constexpr std::string_view kPrefix = "quantifier:";
  if (body.rfind(kPrefix, 0) == 0) {
    body = body.substr(kPrefix.size());
  }
  if (auto q = quantifiers::preset(body)) {
    method.kind = MethodKind::quantifier;
    method.quantifier = std::move(*q);
    return method;
  }
  // Custom knots: a=<x>,b=<y>
  double a = 0.0;
  double b = 0.0;
  std::string a_text;
  std::string b_text;
  const auto comma = body.find(',');
  if (comma != std::string::npos && body.rfind("a=", 0) == 0 &&
      body.compare(comma + 1, 2, "b=") == 0) {
    a_text = body.substr(2, comma - 2);
    b_text = body.substr(comma + 3);
    const auto parse_double = [](const std::string& text, double& value) {
      const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
      return result.ec == std::errc{} && result.ptr == text.data() + text.size();
    };
    if (parse_double(a_text, a) && parse_double(b_text, b)) {
      method.kind = MethodKind::quantifier;
      method.quantifier = Quantifier("quantifier(a=" + a_text + ",b=" + b_text + ")", a, b);
      return method;
    }
  }
  throw std::invalid_argument("unknown method \"" + token + "\"; expected pas, mpf, " +
                              "quantifier:<most|at-least-half|as-many-as-possible> or " +
                              "quantifier:a=<x>,b=<y>");
}

/// The five-method roster used when --methods is not given: the positional
/// baseline, the three quantifier variants, and the rank-proportional OWA.
inline std::vector<std::string> default_method_tokens() {
  return {"pas", "quantifier:at-least-half", "quantifier:as-many-as-possible",
          "quantifier:most", "mpf"};
}

namespace detail {

/// Shared error-to-exit-code policy for all commands.
template <typename Fn>
int run_command(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline void write_or_print(const std::optional<std::filesystem::path>& output,
                           const std::string& content, std::ostream& out) {
  if (output) {
    write_file(*output, content);
  } else {
    out << content;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// weights
// ---------------------------------------------------------------------------

struct WeightsOptions {
  std::string method = "mpf";
  std::size_t count = 0;  ///< number of rankers/criteria; must be >= 1
};

/// Prints the weight vector of an OWA method: six-decimal values, plus the
/// exact rational form for most-preferred-first.
inline int cmd_weights(const WeightsOptions& options, std::ostream& out, std::ostream& err) {
  return detail::run_command(err, [&]() {
    if (options.count == 0) {
      throw std::invalid_argument("--rankers/--criteria must be at least 1");
    }
    const MethodSpec method = parse_method_token(options.method);
    if (method.kind == MethodKind::pas) {
      throw std::invalid_argument("pas is positional and has no weight vector; "
                                  "pick mpf or a quantifier method");
    }

    WeightVector weights;
    std::vector<std::string> rationals;
    if (method.kind == MethodKind::most_preferred_first) {
      weights = most_preferred_first_weights(options.count);
      const std::size_t u = options.count;
      const std::size_t denominator = u * (u + 1) / 2;
      for (std::size_t k = 1; k <= u; ++k) {
        rationals.push_back(std::to_string(u + 1 - k) + "/" + std::to_string(denominator));
      }
    } else {
      weights = quantifier_weights(*method.quantifier, options.count);
    }

    out << "# " << weights.provenance << " weights for " << options.count
        << (method.kind == MethodKind::most_preferred_first ? " rankers" : " criteria")
        << "\n";
    char line[64];
    for (std::size_t k = 0; k < weights.size(); ++k) {
      std::snprintf(line, sizeof(line), "W%zu = %.6f", k + 1, weights.values[k]);
      out << line;
      if (!rationals.empty()) out << " = " << rationals[k];
      out << "\n";
    }
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// aggregate
// ---------------------------------------------------------------------------

struct AggregateOptions {
  std::filesystem::path input;
  std::string method = "mpf";
  double pas_step = 1.0 / 16.0;
  std::optional<std::filesystem::path> output;  ///< directory; stdout when absent
  std::string format = "json";
};

/// Aggregates every course of the dataset under one method. With --output,
/// writes one file per course into that directory (named by course slug);
/// otherwise prints to stdout in course order.
inline int cmd_aggregate(const AggregateOptions& options, std::ostream& out, std::ostream& err) {
  return detail::run_command(err, [&]() {
    if (options.format != "json" && options.format != "markdown") {
      throw std::invalid_argument("--format must be json or markdown");
    }
    PasConfig pas;
    pas.step = options.pas_step;
    pas.validate();
    const MethodSpec method = parse_method_token(options.method, pas);

    const RankingDataset dataset = load_dataset(options.input);
    const std::vector<std::string> violations = validate_dataset(dataset);
    if (!violations.empty()) {
      for (const auto& violation : violations) {
        err << "error: " << violation << "\n";
      }
      return kExitUsage;
    }

    if (options.output) {
      std::error_code ec;
      std::filesystem::create_directories(*options.output, ec);
      if (ec) {
        throw IoError("cannot create directory " + options.output->string() + ": " +
                      ec.message());
      }
    }
    for (const auto& course : dataset.courses) {
      const AggregatedRanking ranking = aggregate_course(course, dataset.roster, method);
      const std::string content = options.format == "json" ? aggregated_to_json(ranking)
                                                           : aggregated_to_markdown(ranking);
      if (options.output) {
        const char* extension = options.format == "json" ? ".json" : ".md";
        write_file(*options.output / (course_slug(course.course) + extension), content);
      } else {
        out << content;
      }
    }
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateOptions {
  std::filesystem::path input;  ///< aggregated-ranking JSON (the prediction)
  std::filesystem::path truth;  ///< ground-truth JSON
  std::size_t k = 10;
  std::optional<std::filesystem::path> output;  ///< file; stdout when absent
  std::string format = "json";
};

/// Evaluates one aggregated ranking against the ground truth for the same
/// course and emits the eight-measure report.
inline int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err) {
  return detail::run_command(err, [&]() {
    if (options.format != "json" && options.format != "markdown") {
      throw std::invalid_argument("--format must be json or markdown");
    }
    const AggregatedRanking predicted = parse_aggregated_json(read_file(options.input));
    const std::vector<GroundTruth> truths = load_ground_truths(options.truth);
    const GroundTruth* truth = nullptr;
    for (const auto& candidate : truths) {
      if (candidate.course == predicted.course) {
        truth = &candidate;
        break;
      }
    }
    if (truth == nullptr) {
      throw std::invalid_argument("no ground truth for course \"" + predicted.course + "\"");
    }

    EvaluationReport report = evaluate({predicted.items(), truth->ranking}, options.k);
    report.course = predicted.course;
    report.method = predicted.method;
    const std::string content =
        options.format == "json" ? report_to_json(report) : report_to_markdown(report);
    detail::write_or_print(options.output, content, out);
    return kExitOk;
  });
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareOptions {
  std::filesystem::path input;
  std::filesystem::path truth;
  std::vector<std::string> methods;  ///< empty -> default_method_tokens()
  std::string proposed = "most-preferred-first";
  std::size_t k = 10;
  double pas_step = 1.0 / 16.0;
  std::optional<std::filesystem::path> output;  ///< file; stdout when absent
  std::string format = "json";
};

/// Runs every method over the dataset, evaluates against ground truth, and
/// reports per-method means plus the improvement of the proposed method over
/// each baseline.
inline int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
  return detail::run_command(err, [&]() {
    if (options.format != "json" && options.format != "markdown") {
      throw std::invalid_argument("--format must be json or markdown");
    }
    PasConfig pas;
    pas.step = options.pas_step;
    pas.validate();

    std::vector<std::string> tokens = options.methods;
    if (tokens.empty()) tokens = default_method_tokens();
    std::vector<MethodSpec> methods;
    for (const auto& token : tokens) {
      methods.push_back(parse_method_token(token, pas));
    }
    // Let --proposed take the same shorthand tokens as --methods (e.g. mpf).
    std::string proposed = options.proposed;
    try {
      proposed = parse_method_token(options.proposed, pas).label();
    } catch (const std::invalid_argument&) {
      // Not a recognized token; match it against method labels as given.
    }

    const RankingDataset dataset = load_dataset(options.input);
    const std::vector<std::string> violations = validate_dataset(dataset);
    if (!violations.empty()) {
      for (const auto& violation : violations) {
        err << "error: " << violation << "\n";
      }
      return kExitUsage;
    }
    const std::vector<GroundTruth> truths = load_ground_truths(options.truth);

    const ComparisonReport report =
        compare_methods(dataset, truths, methods, proposed, options.k);
    const std::string content = options.format == "json" ? comparison_to_json(report)
                                                         : comparison_to_markdown(report);
    detail::write_or_print(options.output, content, out);
    return kExitOk;
  });
}

}  // namespace owarank
