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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace owarank {

/// Exact rational number in canonical form (reduced, positive denominator).
/// Used where weight vectors have an exact closed form, so callers can check
/// or print them without decimal truncation.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Fraction() = default;

  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) {
      throw std::invalid_argument("Fraction: zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = gcd64(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.den +
                       static_cast<__int128>(b.num) * a.den;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return from_wide(n, d);
  }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    const __int128 n = static_cast<__int128>(a.num) * b.num;
    const __int128 d = static_cast<__int128>(a.den) * b.den;
    return from_wide(n, d);
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static constexpr std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
      const std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Fraction from_wide(__int128 n, __int128 d) {
    __int128 an = n < 0 ? -n : n;
    __int128 g = d;
    while (an != 0) {
      const __int128 t = g % an;
      g = an;
      an = t;
    }
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = INT64_MIN;
    constexpr __int128 hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) {
      throw std::overflow_error("Fraction: value does not fit 64 bits");
    }
    Fraction f;
    f.num = static_cast<std::int64_t>(n);
    f.den = static_cast<std::int64_t>(d);
    return f;
  }
};

}  // namespace owarank
