// Copyright 2026 The gegencert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef GEGENCERT_ROOTS_HPP_
#define GEGENCERT_ROOTS_HPP_

#include <vector>

#include "gegencert/rational.hpp"

namespace gegencert {

// Closed interval [lo, hi] holding exactly one simple real root. When
// lo == hi the root is that rational; otherwise p(lo) and p(hi) are nonzero
// and of opposite sign.
struct RootEnclosure {
  Rat lo;
  Rat hi;
  bool simple = true;

  bool exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
};

// Exact lower and upper rational bounds on a real quantity.
struct RatRange {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
};

enum class SquarefreeMode {
  kReduce,  // replace p by its squarefree part
  kStrict,  // throw NonSquarefree when gcd(p, p') is nonconstant
};

// Enclosures of all real roots of p in [lo, hi], sorted ascending.
std::vector<RootEnclosure> isolate_real_roots(
    const RatPoly& p, const Rat& lo, const Rat& hi,
    SquarefreeMode mode = SquarefreeMode::kReduce);

// Bisects until the enclosure is at most `width` wide.
RootEnclosure refine_root(const RatPoly& p, RootEnclosure e, const Rat& width);

// Number of distinct real roots in (lo, hi].
int count_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi);

// Bounds on min p over [lo, hi] with hi - lo of the result <= width.
RatRange certified_min_on_interval(const RatPoly& p, const Rat& lo,
                                   const Rat& hi, const Rat& width);
RatRange certified_max_on_interval(const RatPoly& p, const Rat& lo,
                                   const Rat& hi, const Rat& width);

// Decides max p <= bound (or < bound when strict) over [lo, hi]. Refines
// critical-point enclosures until the answer is certain; returns false when
// a point with p > bound is found or refinement runs out.
bool certify_upper_bound(const RatPoly& p, const Rat& lo, const Rat& hi,
                         const Rat& bound, bool strict = false);

// Exact bounds of p over [lo, hi] from the Taylor expansion at lo.
RatRange taylor_range(const RatPoly& p, const Rat& lo, const Rat& hi);

}  // namespace gegencert

#endif  // GEGENCERT_ROOTS_HPP_
