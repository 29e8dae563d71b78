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
#ifndef GEGENCERT_INDUCTION_HPP_
#define GEGENCERT_INDUCTION_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gegencert/interval.hpp"
#include "gegencert/rational.hpp"

namespace gegencert {

// Closed range of the coupling constant alpha with rational endpoints.
// Most quantities below are polynomial in u = 1/alpha.
struct AlphaCell {
  Rat lo{1, 2};
  Rat hi{1, 2};

  Rat u_lo() const { return Rat(1) / hi; }
  Rat u_hi() const { return Rat(1) / lo; }
  Interval interval() const;
  std::string str() const;
};

// Splits [lo, hi] into `cells` equal cells. Throws AlphaOutOfRange unless
// 1/2 <= lo <= hi < 1.
std::vector<AlphaCell> alpha_cells(const Rat& lo, const Rat& hi, int cells);

enum class CheckStatus { kPass, kFail, kInconclusive };
std::string to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::kPass;
  Interval value;  // enclosure of the decisive quantity
  std::string detail;

  bool pass() const { return status == CheckStatus::kPass; }
};

// (16/13)(1 - 1/(3 alpha))(5 - 1/alpha). Throws AlphaOutOfRange outside
// [1/2, 1).
Rat beta_lower(const Rat& alpha);
// Upper bound of (4/5)(1 - alpha beta_lower(alpha)) over the cell.
Interval gap_from_beta(const AlphaCell& cell);

// The six weighted sums over m = 1..n of
// (lambda_{2n+2} - lambda_j + 4u/15)(2j+3) lambda_j^p, with j = 2m for odd
// i, j = 2m+1 for even i, and p = (i-1)/2.
Rat weighted_sum_closed(int i, int n, const Rat& alpha);
Rat weighted_sum_direct(int i, int n, const Rat& alpha);

// Brute-force sum over k = 2..n of
// (lambda_{n+1} - lambda_k + 4/(15 alpha))(2k+3)(moment bound / a)^2.
Rat spectral_sum(const Rat& lambda, const Rat& a, const Rat& alpha, int n);
// The same for index 2m+1, assembled from the six weighted sums.
Rat spectral_sum_from_sums(const Rat& lambda, const Rat& a, const Rat& alpha, int m);

// Per-step data shared by every alpha cell: the spectral weights summed
// by parity and power of lambda_k, split into constant and u parts.
class StepTables {
 public:
  explicit StepTables(int n);

  int n() const { return n_; }
  const Rat& next_eigenvalue() const { return next_; }
  const Rat& a_lo() const { return a_lo_; }
  const Rat& a_hi() const { return a_hi_; }

  // Sum over k of parity `odd` of w_k lambda_k^p evaluated at u.
  Rat weight_sum(bool odd, int p, const Rat& u) const;
  Interval weight_sum(bool odd, int p, const Interval& u) const;

  // spectral_sum at (lambda, a, u) from the grouped sums.
  Rat spectral_value(const Rat& lambda, const Rat& a, const Rat& u) const;

  // Exact sum with the bound factor (1 - 0.445 lambda_k / lambda_{n+1})^2.
  Rat majorant_sum(const Rat& u) const;

 private:
  int n_;
  Rat next_;
  Rat a_lo_, a_hi_;
  Rat base_[2][3];
  Rat slope_[2][3];
};

// f_n(lambda) <= f_n(1) on [1/2, 1] for a in [5/lambda_{n+1}, 5/lambda_n]:
// exact comparison on the grid lambda = 1/2 + j/200 at the corners of the
// (a, alpha) box, and a positive derivative enclosure over every lambda
// cell.
CheckOutcome verify_f_monotone(const StepTables& t, const AlphaCell& cell);
CheckOutcome verify_f_monotone(int n, const AlphaCell& cell);

struct MajorantOutcome {
  CheckOutcome final_line;         // alpha-free quartic, gates the induction
  CheckOutcome intermediate_line;  // alpha-dependent line, reported only
};

MajorantOutcome quartic_majorant_check(const StepTables& t, const AlphaCell& cell);
MajorantOutcome quartic_majorant_check(int n, const AlphaCell& cell);

Rat quartic_majorant_final(int n, const Rat& shift = Rat(101));
Rat quartic_majorant_intermediate(int n, const Rat& u);

// Coefficients of the convex quadratic in a whose negativity on
// [5/lambda_{n+1}, 5/lambda_n] closes the induction step.
struct SpectralGapInequality {
  Interval alpha;
  int n = 3;
  Interval c2, c1, c0;

  Interval at(const Interval& a) const { return (c2 * a + c1) * a + c0; }
};

// Throws ConvexityLost when c2 is not certainly positive.
SpectralGapInequality gap_quadratic(const Interval& alpha, int n);

// The quadratic at a fixed rational a as a cubic polynomial in u. The
// `corrected` variant carries u^3 on the degree-2 coefficient term.
RatPoly gap_quadratic_in_u(int n, const Rat& a, bool corrected = false);
// Its dominant part at a = 5/lambda_{n+1}.
RatPoly gap_leading_in_u(int n);

// Negativity at a = 5/lambda_{n+1} and a = 5/lambda_n over the u range of
// the cell. Inconclusive cells are split once before giving up.
CheckOutcome verify_h_negativity(int n, const AlphaCell& cell, bool corrected = false);
// Leading part below -1/6 over the cell.
CheckOutcome verify_leading_term(int n, const AlphaCell& cell);

// Step n = 3: the assembled inequality has no solution with
// a in [1/8, 31/100], certifying a < 1/8.
CheckOutcome base_case_n3(const AlphaCell& cell);

struct StepRecord {
  std::string check;
  int n = 0;
  CheckOutcome outcome;
};

struct InductionState {
  AlphaCell alpha;
  int n = 3;         // last level reached
  Rat a_bound;       // certified a < a_bound (5/lambda_n) when holds
  bool holds = false;
  int failed_at = 0;  // step index of the first failure, 0 if none
  CheckStatus failure = CheckStatus::kPass;
  std::string diagnostics;
};

// Base case, then steps n = 3..n_max-1 each certifying a <= 5/lambda_{n+1}.
// The base case already gives a < 1/8 = 5/lambda_5, so steps 3 and 4 are
// vacuous. Stops at the first failing step. `log` receives every attempted check.
InductionState run_induction(const AlphaCell& cell, int n_max,
                             std::vector<StepRecord>* log = nullptr);

using StepSink = std::function<void(std::size_t cell, const StepRecord& record)>;

// Same for many cells with per-step tables shared across cells. Cells of
// one step run on up to `threads` workers; the sink sees records in (step,
// cell) order regardless. Results are in cell order.
std::vector<InductionState> run_induction_cells(const std::vector<AlphaCell>& cells, int n_max,
                                                const StepSink& sink = {}, int threads = 1);

}  // namespace gegencert

#endif  // GEGENCERT_INDUCTION_HPP_
