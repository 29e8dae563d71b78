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
#ifndef GEGENCERT_ASYMPTOTICS_HPP_
#define GEGENCERT_ASYMPTOTICS_HPP_

#include "gegencert/interval.hpp"
#include "gegencert/rational.hpp"

namespace gegencert {

// Large-degree expansion of C_{k-1}^{5/2}(cos zeta) truncated after `terms`
// terms.
struct ExpansionQuery {
  int k = 2;
  Interval zeta;
  int terms = 2;
};

// delta_{k,n} = (k + n + 5/2) zeta - (5/2 - n) pi/2.
struct PhaseAngle {
  int k;
  int n;
  Interval delta;
};

// t_n(2) = (-3/2)_n (5/2)_n / ((-2)^n n!).
Rat expansion_coefficient(int n);

PhaseAngle phase_angle(int k, int n, const Interval& zeta);

// Sec/sin factor of the remainder: |sec zeta| near the ends of (0, pi),
// 2 sin zeta in the middle; the hull of the applicable branches when zeta
// straddles pi/4 or 3pi/4.
Interval remainder_branch_factor(const Interval& zeta);

// Bound on |R_N| for C_{k-1}^{5/2}; the upper end is the certified bound.
Interval remainder_bound(const ExpansionQuery& q);

// Encloses C_{k-1}^{5/2}(cos zeta). Throws DegenerateAngle when zeta
// touches 0 or pi.
Interval expansion_enclosure(const ExpansionQuery& q);

// Encloses scaled_derivative(k) at cos zeta using the two-term expansion in
// the l = k sin zeta form.
Interval scaled_derivative_asymptotic(int k, const Interval& zeta);

// Bound on the two-term remainder of the scaled derivative, with the
// second-order coefficient 105/128.
Interval scaled_derivative_remainder(int k, const Interval& zeta);
// Same bound with the first-order coefficient 15/8 in place of 105/128.
Interval coarse_remainder(int k, const Interval& zeta);
// Closed-form upper bounds of the coarse remainder in terms of l:
// 15/(8 l^{9/2}) / sqrt(1 - l^2/k^2) for l <= k/sqrt(2), and
// 15 sqrt(2)^{7/2} / (4 k^{9/2}) for l > k/sqrt(2).
Interval remainder_small_l(int k, const Interval& l);
Interval remainder_large_l(int k);

// k^{5/2} Gamma(k) / Gamma(k + 5/2).
Interval amplitude_factor(int k);

// Certifies zeta - sin zeta <= (pi/2 - 1) sin^3 zeta on a subinterval of
// (0, pi/2).
bool check_sine_defect(const Interval& zeta);

}  // namespace gegencert

#endif  // GEGENCERT_ASYMPTOTICS_HPP_
