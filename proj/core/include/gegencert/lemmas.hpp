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
#ifndef GEGENCERT_LEMMAS_HPP_
#define GEGENCERT_LEMMAS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gegencert/gegenbauer.hpp"
#include "gegencert/interval.hpp"
#include "gegencert/rational.hpp"
#include "gegencert/roots.hpp"

namespace gegencert {

enum class LemmaId {
  kMinimum,
  kPlateau,
  kPointValue,
  kTailZero,
  kZeroBound,
  kExtremaChain,
  kTailPositivity,
};
enum class Method { kExactRoots, kAsymptotic };

std::string to_string(LemmaId id);
std::string to_string(Method m);

struct PartResult {
  std::string name;
  bool pass = false;
};

// Outcome of one (lemma, k) certification. `witness` is the enclosure the
// verdict rests on; its meaning depends on the lemma:
//   minimum      bounds on min over [0, 1] of the scaled derivative
//   point value  enclosure of the scaled derivative at 1 - 10/lambda_k
//   plateau      same point enclosure; parts carry the plateau and chord
//   zero bounds  enclosure of the closed-form zero bound
//   extrema      |C_k^{5/2}| at the outermost interior maximum
struct LemmaVerdict {
  LemmaId lemma = LemmaId::kMinimum;
  int k = 0;
  Method method = Method::kExactRoots;
  bool pass = false;
  Interval witness;
  std::optional<RootEnclosure> root;
  std::vector<PartResult> parts;
  std::string detail;
};

enum class PhiForm {
  kPlainShift,    // cos(x + d) >= cos x - d
  kTangentShift,  // cos(x + d) >= cos x - d sin x where cos is convex
};
enum class RemainderSource { kInner, kOuter };

// One branch of the l = k sin(zeta) cover used for k > 50.
struct CaseSplitBranch {
  Interval l_range;
  PhiForm phi_lower = PhiForm::kPlainShift;
  std::vector<RemainderSource> remainder_sources;
};

std::vector<CaseSplitBranch> minimum_branches(int k);

// k sqrt(1 - (1 - 9.1/k^2)^2): smallest l that can host the minimum.
Interval min_location_l(int k);
// Closed-form bound on the largest zero of C_n^nu.
Interval zero_bound_closed_form(int n, HalfInt nu);

// Lower bound of l^{-5/2}(cos(L0) + 15/(8l) k/(k+5/2) cos(L1)) over an
// l-cell, where L0, L1 are the two phases of the scaled-derivative
// expansion.
double phi_lower(int k, const Interval& l, PhiForm form);

LemmaVerdict verify_minimum_direct(int k);
LemmaVerdict verify_minimum_asymptotic(int k);
// Dispatches on k <= 50.
LemmaVerdict verify_minimum(int k);

LemmaVerdict verify_tail_zero_bound(int k);
// Largest zero of C_n^nu below the closed form, checked exactly for
// n <= 60.
LemmaVerdict verify_zero_bound(int n, HalfInt nu);

LemmaVerdict verify_point_bound(int k);
// `minimum` may carry an already computed verdict for the same k.
LemmaVerdict verify_plateau(int k, const LemmaVerdict* minimum = nullptr);

LemmaVerdict verify_extrema_structure(int k);

struct FigureRow {
  Rat x;
  Rat value;
};

std::vector<FigureRow> figure_data(int k, const Rat& x_lo, const Rat& x_hi, int samples);
// Header "x,value" then one row per sample with 12 significant digits.
std::string figure_csv(const std::vector<FigureRow>& rows);

}  // namespace gegencert

#endif  // GEGENCERT_LEMMAS_HPP_
