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

/// \file oracles.hpp
/// Brute-force reference implementations the tests check the library
/// against. Everything here is deliberately naive and shares no code with
/// the library: OWA extracts maxima one by one instead of sorting, the set
/// measures run nested linear scans instead of hash lookups, and tie
/// ordering parses the numeric suffix directly instead of the general
/// digit-run comparison.

#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace owarank::testing {

/// OWA by repeated extraction: pull the largest remaining value, multiply
/// by the next weight, remove it, repeat.
inline double oracle_owa(std::vector<double> row, const std::vector<double>& weights) {
  double total = 0.0;
  for (const double weight : weights) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i] > row[best]) best = i;
    }
    total += weight * row[best];
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return total;
}

/// Piecewise membership of the fraction r under knots (a, b).
inline double oracle_quantifier_q(double a, double b, double r) {
  if (r < a) return 0.0;
  if (r > b) return 1.0;
  return (r - a) / (b - a);
}

inline std::vector<double> oracle_quantifier_weights(double a, double b, std::size_t m) {
  std::vector<double> weights;
  for (std::size_t k = 1; k <= m; ++k) {
    const double high = oracle_quantifier_q(a, b, static_cast<double>(k) / static_cast<double>(m));
    const double low =
        oracle_quantifier_q(a, b, static_cast<double>(k - 1) / static_cast<double>(m));
    weights.push_back(high - low);
  }
  return weights;
}

inline std::vector<double> oracle_mpf_weights(std::size_t u) {
  const double denominator = static_cast<double>(u) * static_cast<double>(u + 1) / 2.0;
  std::vector<double> weights;
  for (std::size_t k = 1; k <= u; ++k) {
    weights.push_back(static_cast<double>(u + 1 - k) / denominator);
  }
  return weights;
}

inline double oracle_positional(std::size_t position, double step) {
  const double raw = 1.0 - (static_cast<double>(position) - 1.0) * step;
  return raw < 0.0 ? 0.0 : raw;
}

// --- set measures (nested scans, denominator always k) ---------------------

inline bool oracle_in_prefix(const std::vector<std::string>& list, std::size_t k,
                             const std::string& item) {
  for (std::size_t i = 0; i < list.size() && i < k; ++i) {
    if (list[i] == item) return true;
  }
  return false;
}

inline double oracle_p_at_k(const std::vector<std::string>& predicted,
                            const std::vector<std::string>& truth, std::size_t k) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size() && i < k; ++i) {
    if (oracle_in_prefix(truth, k, predicted[i])) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

inline double oracle_fpr_at_k(const std::vector<std::string>& predicted,
                              const std::vector<std::string>& truth, std::size_t k) {
  std::size_t misses = 0;
  for (std::size_t i = 0; i < predicted.size() && i < k; ++i) {
    if (!oracle_in_prefix(truth, k, predicted[i])) ++misses;
  }
  return static_cast<double>(misses) / static_cast<double>(k);
}

inline double oracle_fnr_at_k(const std::vector<std::string>& predicted,
                              const std::vector<std::string>& truth, std::size_t k) {
  std::size_t missed = 0;
  for (std::size_t i = 0; i < truth.size() && i < k; ++i) {
    if (!oracle_in_prefix(predicted, k, truth[i])) ++missed;
  }
  return static_cast<double>(missed) / static_cast<double>(k);
}

// --- position measures -----------------------------------------------------

/// 1-based position of item in list, or 0 when absent.
inline std::size_t oracle_position(const std::vector<std::string>& list,
                                   const std::string& item) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == item) return i + 1;
  }
  return 0;
}

inline double oracle_mae(const std::vector<std::string>& predicted,
                         const std::vector<std::string>& truth) {
  double sum = 0.0;
  std::size_t shared = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const std::size_t t = oracle_position(truth, predicted[i]);
    if (t == 0) continue;
    sum += std::fabs(static_cast<double>(i + 1) - static_cast<double>(t));
    ++shared;
  }
  return sum / static_cast<double>(shared);
}

inline double oracle_rmse(const std::vector<std::string>& predicted,
                          const std::vector<std::string>& truth) {
  double sum = 0.0;
  std::size_t shared = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const std::size_t t = oracle_position(truth, predicted[i]);
    if (t == 0) continue;
    const double diff = static_cast<double>(i + 1) - static_cast<double>(t);
    sum += diff * diff;
    ++shared;
  }
  return std::sqrt(sum / static_cast<double>(shared));
}

inline double oracle_rr(const std::vector<std::string>& predicted,
                        const std::vector<std::string>& truth) {
  const std::size_t position = oracle_position(predicted, truth.front());
  return position == 0 ? 0.0 : 1.0 / static_cast<double>(position);
}

inline double oracle_msrcc(const std::vector<std::string>& predicted,
                           const std::vector<std::string>& truth) {
  const std::size_t m = truth.size();
  double numerator = 0.0;
  std::size_t max_v = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t v = oracle_position(predicted, truth[i - 1]);
    if (v > max_v) max_v = v;
    const double diff = static_cast<double>(i) - static_cast<double>(v);
    numerator += diff * diff;
  }
  const double max_sq = static_cast<double>(max_v) * static_cast<double>(max_v);
  return 1.0 - numerator / (static_cast<double>(m) * (max_sq - 1.0));
}

// --- ranking ---------------------------------------------------------------

/// Numeric-suffix item order: "DS4" before "DS12". Splits at the last
/// non-digit, compares the alpha prefix, then the parsed suffix.
inline bool oracle_item_less(const std::string& a, const std::string& b) {
  const auto split = [](const std::string& s) -> std::pair<std::string, long> {
    std::size_t cut = s.size();
    while (cut > 0 && s[cut - 1] >= '0' && s[cut - 1] <= '9') --cut;
    if (cut == s.size()) return {s, -1};
    return {s.substr(0, cut), std::atol(s.c_str() + cut)};
  };
  const auto [prefix_a, number_a] = split(a);
  const auto [prefix_b, number_b] = split(b);
  if (prefix_a != prefix_b) return a < b;
  if (number_a != number_b) return number_a < number_b;
  return a < b;
}

/// Scores every row with oracle_owa and orders items by descending score,
/// numeric-suffix order on ties.
template <typename Grid>
inline std::vector<std::pair<std::string, double>> oracle_rank(
    const std::vector<std::string>& items, const Grid& rows,
    const std::vector<double>& weights) {
  std::vector<std::pair<std::string, double>> scored;
  for (std::size_t i = 0; i < items.size(); ++i) {
    scored.emplace_back(items[i], oracle_owa({rows[i].begin(), rows[i].end()}, weights));
  }
  // Insertion sort keeps this oracle free of std::sort tie behavior.
  for (std::size_t i = 1; i < scored.size(); ++i) {
    auto current = scored[i];
    std::size_t j = i;
    while (j > 0 && (scored[j - 1].second < current.second ||
                     (scored[j - 1].second == current.second &&
                      oracle_item_less(current.first, scored[j - 1].first)))) {
      scored[j] = scored[j - 1];
      --j;
    }
    scored[j] = current;
  }
  return scored;
}

}  // namespace owarank::testing
