// Copyright 2026 The distdet Authors
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

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

#include "distdet/error.hpp"

namespace distdet {

/// Path lengths of a theta graph: two branch vertices joined by three
/// internally disjoint paths. In a simple graph at most one length is 1.
struct ThetaTriple {
  std::size_t l = 0;
  std::size_t p = 0;
  std::size_t q = 0;

  friend auto operator<=>(const ThetaTriple&, const ThetaTriple&) = default;

  std::size_t edge_count() const { return l + p + q; }
  std::size_t vertex_count() const { return l + p + q - 1; }

  ThetaTriple sorted() const {
    std::array<std::size_t, 3> a{l, p, q};
    std::sort(a.begin(), a.end());
    return {a[0], a[1], a[2]};
  }

  /// Valid when all lengths are positive and at most one equals 1.
  bool valid() const {
    ThetaTriple s = sorted();
    return s.l >= 1 && s.p >= 2;
  }

  std::string to_string() const {
    return "(" + std::to_string(l) + "," + std::to_string(p) + "," +
           std::to_string(q) + ")";
  }
};

inline std::ostream& operator<<(std::ostream& os, const ThetaTriple& t) {
  return os << t.to_string();
}

/// Which closed form applies to a theta block, read off the sorted triple.
enum class ThetaCase {
  kOneEvenEven,  // (1, p, q) with p, q even
  kTwoTwoTwo,    // (2, 2, 2)
  kTwoTwoOdd,    // (2, 2, q) with q odd
  kZero,         // everything else: singular distance matrix
};

inline ThetaCase theta_case(const ThetaTriple& t) {
  if (!t.valid()) throw InvalidArgument("invalid theta triple " + t.to_string());
  const ThetaTriple s = t.sorted();
  if (s.l == 1 && s.p % 2 == 0 && s.q % 2 == 0) return ThetaCase::kOneEvenEven;
  if (s.l == 2 && s.p == 2 && s.q == 2) return ThetaCase::kTwoTwoTwo;
  if (s.l == 2 && s.p == 2 && s.q % 2 == 1) return ThetaCase::kTwoTwoOdd;
  return ThetaCase::kZero;
}

}  // namespace distdet
