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

// owarank: OWA-based rank aggregation and evaluation.
//
//   owarank weights   --method mpf --rankers 7
//   owarank aggregate --input data.json --method mpf --output out/
//   owarank evaluate  --input out/course.json --truth truth.json --k 10
//   owarank compare   --input data.json --truth truth.json --proposed mpf
//
// Exit codes: 0 success, 1 validation/usage failure, 2 I/O failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "owarank/owarank.hpp"

namespace {

std::optional<std::filesystem::path> to_optional_path(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return std::filesystem::path(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"owarank: OWA-based rank aggregation and evaluation"};
  app.require_subcommand(1);

  int exit_code = owarank::kExitOk;

  owarank::WeightsOptions weights_options;
  auto* weights = app.add_subcommand("weights", "Print an OWA weight vector");
  weights->add_option("--method", weights_options.method,
                      "mpf | quantifier:<preset> | quantifier:a=<x>,b=<y>");
  weights->add_option("--rankers", weights_options.count, "number of rankers (mpf)");
  weights->add_option("--criteria", weights_options.count,
                      "number of criteria (quantifier methods)");
  weights->callback([&]() {
    exit_code = owarank::cmd_weights(weights_options, std::cout, std::cerr);
  });

  owarank::AggregateOptions aggregate_options;
  std::string aggregate_output;
  auto* aggregate = app.add_subcommand("aggregate", "Fuse ranker lists per course");
  aggregate->add_option("--input", aggregate_options.input, "dataset file (.json or .csv)")
      ->required();
  aggregate->add_option("--method", aggregate_options.method,
                        "pas | mpf | quantifier:<preset> | quantifier:a=<x>,b=<y>");
  aggregate->add_option("--pas-step", aggregate_options.pas_step,
                        "positional score decrement per rank");
  aggregate->add_option("--output", aggregate_output,
                        "directory for per-course files (stdout when omitted)");
  aggregate->add_option("--format", aggregate_options.format, "json | markdown");
  aggregate->callback([&]() {
    aggregate_options.output = to_optional_path(aggregate_output);
    exit_code = owarank::cmd_aggregate(aggregate_options, std::cout, std::cerr);
  });

  owarank::EvaluateOptions evaluate_options;
  std::string evaluate_output;
  auto* evaluate = app.add_subcommand("evaluate", "Score a ranking against ground truth");
  evaluate->add_option("--input", evaluate_options.input, "aggregated-ranking JSON")
      ->required();
  evaluate->add_option("--truth", evaluate_options.truth, "ground-truth JSON")->required();
  evaluate->add_option("--k", evaluate_options.k, "top-k cutoff for set measures");
  evaluate->add_option("--output", evaluate_output, "report file (stdout when omitted)");
  evaluate->add_option("--format", evaluate_options.format, "json | markdown");
  evaluate->callback([&]() {
    evaluate_options.output = to_optional_path(evaluate_output);
    exit_code = owarank::cmd_evaluate(evaluate_options, std::cout, std::cerr);
  });

  owarank::CompareOptions compare_options;
  std::string compare_output;
  auto* compare = app.add_subcommand("compare", "Compare aggregation methods");
  compare->add_option("--input", compare_options.input, "dataset file (.json or .csv)")
      ->required();
  compare->add_option("--truth", compare_options.truth, "ground-truth JSON")->required();
  compare->add_option("--methods", compare_options.methods, "method tokens to compare")
      ->delimiter(',');
  compare->add_option("--proposed", compare_options.proposed,
                      "method whose improvement is reported");
  compare->add_option("--k", compare_options.k, "top-k cutoff for set measures");
  compare->add_option("--pas-step", compare_options.pas_step,
                      "positional score decrement per rank");
  compare->add_option("--output", compare_output, "report file (stdout when omitted)");
  compare->add_option("--format", compare_options.format, "json | markdown");
  compare->callback([&]() {
    compare_options.output = to_optional_path(compare_output);
    exit_code = owarank::cmd_compare(compare_options, std::cout, std::cerr);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return owarank::kExitUsage;
  }
  return exit_code;
}
