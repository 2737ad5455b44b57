// Copyright 2026 The lpd Authors.
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

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace lpd {

/// Non-negative exact fraction. Comparison is by value, so 1/2 == 2/4.
///
/// Used wherever blob features must be compared bit-exactly (centroids, edge
/// density, candidate scores). Numerators and denominators stay within 64
/// bits for any image up to ~4 gigapixels; products are formed in 128 bits.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  constexpr Ratio() = default;
  constexpr Ratio(std::uint64_t n, std::uint64_t d) : num(n), den(d) {}

  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  constexpr Ratio reduced() const {
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? *this : Ratio{num / g, den / g};
  }

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) {
    using u128 = unsigned __int128;
    return static_cast<u128>(a.num) * b.den == static_cast<u128>(b.num) * a.den;
  }

  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    using u128 = unsigned __int128;
    const u128 lhs = static_cast<u128>(a.num) * b.den;
    const u128 rhs = static_cast<u128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    const Ratio r = reduced();
    return std::to_string(r.num) + "/" + std::to_string(r.den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }
};

}  // namespace lpd
