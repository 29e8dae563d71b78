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

#include "gegencert/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include "gegencert/errors.hpp"

namespace gegencert {

namespace {

void require_open_angle(const Interval& zeta) {
  if (zeta.lo() <= 0.0 || zeta.hi() >= pi_interval().lo()) {
    throw VerificationError(ErrorKind::kDegenerateAngle,
                            "angle " + zeta.str() + " touches 0 or pi");
  }
}

// Gamma(k+4) / Gamma(k+n+5/2) = k(k+1)(k+2)(k+3) Gamma(k) / Gamma(k+n+5/2).
Interval shifted_gamma_ratio(int k, int n) {
  const double kd = k;
  Interval rising = Interval(kd) * Interval(kd + 1) * Interval(kd + 2) * Interval(kd + 3);
  return rising * gamma_ratio({k, 2 * n + 5});
}

}  // namespace

Rat expansion_coefficient(int n) {
  if (n < 0) throw std::invalid_argument("expansion_coefficient: negative index");
  Rat t(1);
  for (int i = 0; i < n; ++i) {
    t *= (Rat(-3, 2) + Rat(i)) * (Rat(5, 2) + Rat(i)) / (Rat(-2) * Rat(i + 1));
  }
  return t;
}

PhaseAngle phase_angle(int k, int n, const Interval& zeta) {
  const Interval quarter_pi = pi_interval() / Interval(4.0);
  Interval delta = Interval(k + n + 2.5) * zeta - Interval(5.0 - 2.0 * n) * quarter_pi;
  return {k, n, delta};
}

Interval remainder_branch_factor(const Interval& zeta) {
  require_open_angle(zeta);
  const Interval quarter = pi_interval() / Interval(4.0);
  const Interval three_quarter = Interval(3.0) * quarter;
  bool have = false;
  Interval out;
  auto merge = [&](const Interval& v) {
    out = have ? hull(out, v) : v;
    have = true;
  };
  if (zeta.lo() <= quarter.hi()) {
    Interval part(zeta.lo(), std::min(zeta.hi(), quarter.hi()));
    merge(Interval(1.0) / cos(part));
  }
  if (zeta.hi() >= quarter.lo() && zeta.lo() <= three_quarter.hi()) {
    Interval part(std::max(zeta.lo(), quarter.lo()), std::min(zeta.hi(), three_quarter.hi()));
    merge(Interval(2.0) * sin(part));
  }
  if (zeta.hi() >= three_quarter.lo()) {
    Interval part(std::max(zeta.lo(), three_quarter.lo()), zeta.hi());
    merge(Interval(1.0) / abs(cos(part)));
  }
  return out;
}

Interval remainder_bound(const ExpansionQuery& q) {
  if (q.terms < 2) throw std::invalid_argument("remainder_bound: terms must be >= 2");
  if (q.k < 1) throw std::invalid_argument("remainder_bound: k must be >= 1");
  require_open_angle(q.zeta);
  const Interval t = enclose_rat(abs(expansion_coefficient(q.terms)));
  const Interval s = sin(q.zeta);
  return t * shifted_gamma_ratio(q.k, q.terms) / pow(s, q.terms) *
         remainder_branch_factor(q.zeta);
}

Interval expansion_enclosure(const ExpansionQuery& q) {
  if (q.terms < 2) throw std::invalid_argument("expansion_enclosure: terms must be >= 2");
  if (q.k < 1) throw std::invalid_argument("expansion_enclosure: k must be >= 1");
  require_open_angle(q.zeta);
  const Interval s = sin(q.zeta);
  Interval sum(0.0);
  for (int n = 0; n < q.terms; ++n) {
    const Interval delta = phase_angle(q.k - 1, n, q.zeta).delta;
    sum += enclose_rat(expansion_coefficient(n)) * shifted_gamma_ratio(q.k, n) * cos(delta) /
           pow(s, n);
  }
  const double r = remainder_bound(q).hi();
  sum += Interval(-r, r);
  // 2 / (Gamma(5/2) (2 sin zeta)^{5/2}) = 8 / (3 sqrt(pi)) (2 sin zeta)^{-5/2}
  const Interval prefactor =
      Interval(8.0) / (Interval(3.0) * sqrt(pi_interval())) / half_power(Interval(2.0) * s, 5);
  return prefactor * sum;
}

Interval amplitude_factor(int k) {
  return half_power(Interval(static_cast<double>(k)), 5) * gamma_ratio({k, 5});
}

Interval scaled_derivative_remainder(int k, const Interval& zeta) {
  require_open_angle(zeta);
  const Interval s = sin(zeta);
  return enclose_rat(Rat(105, 128)) * gamma_ratio({k, 9}) / half_power(s, 9) *
         remainder_branch_factor(zeta);
}

Interval coarse_remainder(int k, const Interval& zeta) {
  require_open_angle(zeta);
  const Interval s = sin(zeta);
  return enclose_rat(Rat(15, 8)) * gamma_ratio({k, 9}) / half_power(s, 9) *
         remainder_branch_factor(zeta);
}

Interval remainder_small_l(int k, const Interval& l) {
  const Interval kd(static_cast<double>(k));
  const Interval ratio = l / kd;
  return enclose_rat(Rat(15, 8)) / half_power(l, 9) / sqrt(Interval(1.0) - ratio * ratio);
}

Interval remainder_large_l(int k) {
  // sqrt(2)^{7/2} = 2^{7/4}
  const Interval two_pow = sqrt(sqrt(pow(Interval(2.0), 7)));
  return Interval(15.0) * two_pow / (Interval(4.0) * half_power(Interval(static_cast<double>(k)), 9));
}

Interval scaled_derivative_asymptotic(int k, const Interval& zeta) {
  if (k < 6) throw std::invalid_argument("scaled_derivative_asymptotic: k must be >= 6");
  require_open_angle(zeta);
  const Interval s = sin(zeta);
  const Interval l = Interval(static_cast<double>(k)) * s;
  const Interval c0 = cos(phase_angle(k - 1, 0, zeta).delta);
  const Interval c1 = cos(phase_angle(k - 1, 1, zeta).delta);
  const Interval kd(static_cast<double>(k));
  const Interval main = amplitude_factor(k) / half_power(l, 5) *
                        (c0 + enclose_rat(Rat(15, 8)) / l * kd / (kd + Interval(2.5)) * c1);
  const double r = scaled_derivative_remainder(k, zeta).hi();
  return Interval(8.0) * sqrt_two_over_pi() * (main + Interval(-r, r));
}

bool check_sine_defect(const Interval& zeta) {
  const Interval half_pi = pi_interval() / Interval(2.0);
  if (zeta.lo() <= 0.0 || zeta.hi() >= half_pi.lo()) return false;
  const Interval s = sin(zeta);
  const Interval gap = (half_pi - Interval(1.0)) * pow(s, 3) - (zeta - s);
  return gap.lo() >= 0.0;
}

}  // namespace gegencert
