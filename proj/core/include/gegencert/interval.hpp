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
#ifndef GEGENCERT_INTERVAL_HPP_
#define GEGENCERT_INTERVAL_HPP_

#include <string>

#include "gegencert/rational.hpp"

namespace gegencert {

// Closed interval with double endpoints. Every operation rounds the lower
// end down and the upper end up, so the exact real image is always inside.
class Interval {
 public:
  constexpr Interval() = default;
  Interval(double v);  // NOLINT(runtime/explicit)
  Interval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * lo_ + 0.5 * hi_; }
  double width() const { return hi_ - lo_; }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool certainly_positive() const { return lo_ > 0.0; }
  bool certainly_negative() const { return hi_ < 0.0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Throws DivisionByZeroInterval when b contains 0.
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  std::string str() const;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval hull(const Interval& a, const Interval& b);
Interval abs(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval sqrt(const Interval& x);
Interval pow(const Interval& x, int e);
// x^(twice_exponent / 2) for x > 0.
Interval half_power(const Interval& x, int twice_exponent);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval asin(const Interval& x);
Interval acos(const Interval& x);

// Tightest double enclosure of an exact rational.
Interval enclose_rat(const Rat& x);

// Rigorous constants.
const Interval& pi_interval();
const Interval& sqrt_two_over_pi();

// Gamma(base) / Gamma(base + twice_shift / 2).
struct GammaRatioQuery {
  int base = 1;
  int twice_shift = 1;
};

Interval gamma_ratio(const GammaRatioQuery& q);

}  // namespace gegencert

#endif  // GEGENCERT_INTERVAL_HPP_
