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

/// \file weights.hpp
/// OWA weight generation.
///
/// Two families are supported:
///   - weights derived from a relative linguistic quantifier ("most",
///     "at least half", ...), where W_k = Q(k/m) - Q((k-1)/m);
///   - rank-proportional "most preferred first" weights (u+1-k)/N with
///     N = u(u+1)/2, which give the best-ranked source the largest weight
///     and are strictly decreasing.
///
/// Quantifier weights can assign zero weight to the first positions: with
/// the "most" quantifier (a=0.3) every k with k/m < 0.3 gets W_k = 0, so
/// the strongest input is ignored entirely. The rank-proportional rule
/// exists to avoid exactly that.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "owarank/fraction.hpp"

namespace owarank {

/// Relative fuzzy quantifier: membership Q(r) is 0 below `a`, rises
/// linearly on [a, b], and is 1 above `b`. Requires 0 <= a < b <= 1;
/// a == b is rejected rather than treated as a step function.
struct Quantifier {
  std::string name;
  double a = 0.0;
  double b = 1.0;

  Quantifier(std::string quantifier_name, double lower, double upper)
      : name(std::move(quantifier_name)), a(lower), b(upper) {
    if (!(a >= 0.0 && a < b && b <= 1.0)) {
      throw std::invalid_argument("Quantifier \"" + name +
                                  "\": knots must satisfy 0 <= a < b <= 1");
    }
  }
};

namespace quantifiers {

inline Quantifier most() { return {"most", 0.3, 0.8}; }
inline Quantifier at_least_half() { return {"at-least-half", 0.0, 0.5}; }
inline Quantifier as_many_as_possible() { return {"as-many-as-possible", 0.5, 1.0}; }

/// Looks up a preset by its CLI token; nullopt for unknown tokens.
inline std::optional<Quantifier> preset(std::string_view token) {
  if (token == "most") return most();
  if (token == "at-least-half") return at_least_half();
  if (token == "as-many-as-possible") return as_many_as_possible();
  return std::nullopt;
}

}  // namespace quantifiers

/// Normalized OWA weights plus a label naming how they were generated
/// ("most-preferred-first", "most", ...). Generators guarantee each value
/// lies in [0, 1] and the sum is 1 up to float rounding (< 1e-12 drift).
struct WeightVector {
  std::vector<double> values;
  std::string provenance;

  std::size_t size() const { return values.size(); }
};

/// Membership degree Q(r) of the fraction r under quantifier q.
/// Non-decreasing in r; Q(0) = 0 and Q(1) = 1.
inline double quantifier_membership(const Quantifier& q, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument("quantifier_membership: r must lie in [0, 1]");
  }
  if (r < q.a) return 0.0;
  if (r > q.b) return 1.0;
  return (r - q.a) / (q.b - q.a);
}

/// W_k = Q(k/m) - Q((k-1)/m) for k = 1..m. The sum telescopes to
/// Q(1) - Q(0) = 1.
inline WeightVector quantifier_weights(const Quantifier& q, std::size_t criteria) {
  if (criteria == 0) {
    throw std::invalid_argument("quantifier_weights: criteria count must be positive");
  }
  WeightVector w;
  w.provenance = q.name;
  w.values.reserve(criteria);
  const double m = static_cast<double>(criteria);
  double previous = 0.0;  // Q(0)
  for (std::size_t k = 1; k <= criteria; ++k) {
    const double current = quantifier_membership(q, static_cast<double>(k) / m);
    w.values.push_back(current - previous);
    previous = current;
  }
  return w;
}

/// Exact rank-proportional weights: W_k = (u+1-k)/N with N = u(u+1)/2.
inline std::vector<Fraction> most_preferred_first_fractions(std::size_t rankers) {
  if (rankers == 0) {
    throw std::invalid_argument("most_preferred_first_weights: ranker count must be positive");
  }
  if (rankers > 100000) {
    throw std::invalid_argument("most_preferred_first_weights: ranker count too large");
  }
  const std::int64_t u = static_cast<std::int64_t>(rankers);
  const std::int64_t n = u * (u + 1) / 2;
  std::vector<Fraction> fractions;
  fractions.reserve(rankers);
  for (std::int64_t k = 1; k <= u; ++k) {
    fractions.emplace_back(u + 1 - k, n);
  }
  return fractions;
}

/// Rank-proportional weights as decimals. Strictly decreasing, so the
/// best-ranked source always outweighs every lower-ranked one.
inline WeightVector most_preferred_first_weights(std::size_t rankers) {
  WeightVector w;
  w.provenance = "most-preferred-first";
  w.values.reserve(rankers);
  for (const Fraction& f : most_preferred_first_fractions(rankers)) {
    w.values.push_back(f.to_double());
  }
  return w;
}

}  // namespace owarank
