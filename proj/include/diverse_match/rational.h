// Copyright 2026 The diverse-match Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact non-negative fractions for proportional-fairness windows. All window
// predicates reduce to integer cross-multiplication in 128-bit arithmetic, so
// no check ever rounds.

#ifndef DIVERSE_MATCH_RATIONAL_H_
#define DIVERSE_MATCH_RATIONAL_H_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace diverse_match {

using Int128 = __int128;

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Largest denominator accepted by validators; keeps every cross product used
// below comfortably inside 128 bits for set sizes up to 2^31.
inline constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 40;

inline bool IsUnitInterval(const Rational& r) {
  return r.den > 0 && r.den <= kMaxDenominator && r.num >= 0 && r.num <= r.den;
}

inline Rational Reduced(const Rational& r) {
  if (r.den == 0) throw std::invalid_argument("zero denominator");
  std::int64_t g = std::gcd(r.num, r.den);
  if (g == 0) return r;
  Rational out{r.num / g, r.den / g};
  if (out.den < 0) {
    out.num = -out.num;
    out.den = -out.den;
  }
  return out;
}

// a <= b for rationals with positive denominators.
inline bool LessEq(const Rational& a, const Rational& b) {
  return Int128{a.num} * b.den <= Int128{b.num} * a.den;
}

inline std::string ToString(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// floor(r * m) and ceil(r * m) for r >= 0, m >= 0.
inline std::int64_t FloorTimes(const Rational& r, std::int64_t m) {
  return static_cast<std::int64_t>((Int128{r.num} * m) / r.den);
}

inline std::int64_t CeilTimes(const Rational& r, std::int64_t m) {
  Int128 p = Int128{r.num} * m;
  return static_cast<std::int64_t>((p + r.den - 1) / r.den);
}

// alpha * size <= count <= beta * size.
inline bool InStrictWindow(const Rational& alpha, const Rational& beta,
                           std::int64_t size, std::int64_t count) {
  return Int128{alpha.num} * size <= Int128{count} * alpha.den &&
         Int128{count} * beta.den <= Int128{beta.num} * size;
}

// (alpha - 3/ell) * size <= count <= (beta + 3/ell) * size, the additive
// slack that block unions are guaranteed to meet.
inline bool InAdditiveWindow(const Rational& alpha, const Rational& beta,
                             std::int64_t ell, std::int64_t size,
                             std::int64_t count) {
  Int128 lo = (Int128{alpha.num} * ell - Int128{3} * alpha.den) * size;
  Int128 hi = (Int128{beta.num} * ell + Int128{3} * beta.den) * size;
  return lo <= Int128{count} * alpha.den * ell &&
         Int128{count} * beta.den * ell <= hi;
}

// alpha * size * (1 - 3/ell) <= count <= beta * size * (1 + 3/ell).
inline bool InMultiplicativeWindow(const Rational& alpha, const Rational& beta,
                                   std::int64_t ell, std::int64_t size,
                                   std::int64_t count) {
  Int128 lo = Int128{alpha.num} * size * (ell - 3);
  Int128 hi = Int128{beta.num} * size * (ell + 3);
  return lo <= Int128{count} * alpha.den * ell &&
         Int128{count} * beta.den * ell <= hi;
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_RATIONAL_H_
