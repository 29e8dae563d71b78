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

#include "gegencert/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "gegencert/errors.hpp"

namespace gegencert {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude fma residuals may be inexact; step both ways instead.
constexpr double kTiny = 0x1p-900;

double next_down(double x) { return std::nextafter(x, -kInf); }
double next_up(double x) { return std::nextafter(x, kInf); }

struct Bounds {
  double lo;
  double hi;
};

void require_finite(double v) {
  if (!std::isfinite(v)) throw std::overflow_error("interval endpoint overflow");
}

// `v` is the rounded result and `err` the sign-carrying exact residual.
Bounds classify(double v, double err) {
  require_finite(v);
  if (err == 0.0) return {v, v};
  if (err > 0.0) return {v, next_up(v)};
  return {next_down(v), v};
}

Bounds both_ways(double v) {
  require_finite(v);
  return {next_down(v), next_up(v)};
}

Bounds add_rn(double a, double b) {
  double s = a + b;
  require_finite(s);
  double bv = s - a;
  double av = s - bv;
  double err = (a - av) + (b - bv);
  return classify(s, err);
}

Bounds mul_rn(double a, double b) {
  if (a == 0.0 || b == 0.0) return {0.0, 0.0};
  double p = a * b;
  if (std::abs(p) < kTiny) return both_ways(p);
  return classify(p, std::fma(a, b, -p));
}

Bounds div_rn(double a, double b) {
  if (a == 0.0) return {0.0, 0.0};
  double q = a / b;
  if (std::abs(q) < kTiny || std::abs(a) < kTiny) return both_ways(q);
  double r = std::fma(-q, b, a);
  if (r == 0.0) return classify(q, 0.0);
  return classify(q, (r > 0.0) == (b > 0.0) ? 1.0 : -1.0);
}

Bounds sqrt_rn(double a) {
  if (a == 0.0) return {0.0, 0.0};
  double s = std::sqrt(a);
  if (a < kTiny) return both_ways(s);
  return classify(s, std::fma(-s, s, a));
}

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

double mpfr_apply(MpfrUnary fn, double x, mpfr_rnd_t rnd) {
  struct Slot {
    mpfr_t v;
    Slot() { mpfr_init2(v, 53); }
    ~Slot() { mpfr_clear(v); }
  };
  thread_local Slot slot;
  mpfr_set_d(slot.v, x, MPFR_RNDN);
  fn(slot.v, slot.v, rnd);
  return mpfr_get_d(slot.v, rnd);
}

Interval clamp_unit(double lo, double hi) {
  return Interval(std::max(lo, -1.0), std::min(hi, 1.0));
}

// Extends [lo, hi] by the value `extremum` wherever offset + j*pi may lie
// inside x, for integer j of the requested parity.
template <typename F>
void scan_extrema(const Interval& x, double offset, F&& on_hit) {
  const Interval& pi = pi_interval();
  double jlo = std::floor(x.lo() / pi.mid() - offset) - 1.0;
  double jhi = std::ceil(x.hi() / pi.mid() - offset) + 1.0;
  for (double j = jlo; j <= jhi; j += 1.0) {
    Interval point = Interval(j + offset) * pi;
    if (point.hi() >= x.lo() && point.lo() <= x.hi()) on_hit(static_cast<long long>(j));
  }
}

}  // namespace

Interval::Interval(double v) : lo_(v), hi_(v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Interval: non-finite point");
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo <= hi)) {
    throw std::invalid_argument("Interval: invalid endpoints");
  }
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add_rn(a.lo_, b.lo_).lo, add_rn(a.hi_, b.hi_).hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(add_rn(a.lo_, -b.hi_).lo, add_rn(a.hi_, -b.lo_).hi);
}

Interval operator*(const Interval& a, const Interval& b) {
  Bounds p[4] = {mul_rn(a.lo_, b.lo_), mul_rn(a.lo_, b.hi_), mul_rn(a.hi_, b.lo_),
                 mul_rn(a.hi_, b.hi_)};
  double lo = p[0].lo, hi = p[0].hi;
  for (const auto& v : p) {
    lo = std::min(lo, v.lo);
    hi = std::max(hi, v.hi);
  }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw VerificationError(ErrorKind::kDivisionByZeroInterval, "divisor " + b.str());
  }
  Bounds p[4] = {div_rn(a.lo_, b.lo_), div_rn(a.lo_, b.hi_), div_rn(a.hi_, b.lo_),
                 div_rn(a.hi_, b.hi_)};
  double lo = p[0].lo, hi = p[0].hi;
  for (const auto& v : p) {
    lo = std::min(lo, v.lo);
    hi = std::max(hi, v.hi);
  }
  return Interval(lo, hi);
}

std::string Interval::str() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", lo_, hi_);
  return buf;
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Interval(0.0, std::max(-x.lo(), x.hi()));
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval sqrt(const Interval& x) {
  if (x.lo() < 0.0) throw std::domain_error("sqrt of interval with negative part " + x.str());
  return Interval(sqrt_rn(x.lo()).lo, sqrt_rn(x.hi()).hi);
}

Interval pow(const Interval& x, int e) {
  if (e < 0) return Interval(1.0) / pow(x, -e);
  if (e == 0) return Interval(1.0);
  if (x.lo() < 0.0 && x.hi() > 0.0) {
    if (e % 2 == 0) return pow(Interval(0.0, std::max(-x.lo(), x.hi())), e);
    return Interval(-pow(Interval(-x.lo()), e).hi(), pow(Interval(x.hi()), e).hi());
  }
  if (x.hi() <= 0.0) {
    Interval m = pow(-x, e);
    return e % 2 == 0 ? m : -m;
  }
  Interval r(1.0);
  Interval base = x;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) r *= base;
    if (k > 1) base *= base;
  }
  return r;
}

Interval half_power(const Interval& x, int twice_exponent) {
  if (!x.certainly_positive()) throw std::domain_error("half_power needs a positive base");
  if (twice_exponent % 2 == 0) return pow(x, twice_exponent / 2);
  return pow(sqrt(x), twice_exponent);
}

Interval cos(const Interval& x) {
  if (x.width() >= 6.0) return Interval(-1.0, 1.0);
  double lo = std::min(mpfr_apply(mpfr_cos, x.lo(), MPFR_RNDD), mpfr_apply(mpfr_cos, x.hi(), MPFR_RNDD));
  double hi = std::max(mpfr_apply(mpfr_cos, x.lo(), MPFR_RNDU), mpfr_apply(mpfr_cos, x.hi(), MPFR_RNDU));
  scan_extrema(x, 0.0, [&](long long j) {
    if (j % 2 == 0) {
      hi = 1.0;
    } else {
      lo = -1.0;
    }
  });
  return clamp_unit(lo, hi);
}

Interval sin(const Interval& x) {
  if (x.width() >= 6.0) return Interval(-1.0, 1.0);
  double lo = std::min(mpfr_apply(mpfr_sin, x.lo(), MPFR_RNDD), mpfr_apply(mpfr_sin, x.hi(), MPFR_RNDD));
  double hi = std::max(mpfr_apply(mpfr_sin, x.lo(), MPFR_RNDU), mpfr_apply(mpfr_sin, x.hi(), MPFR_RNDU));
  scan_extrema(x, 0.5, [&](long long j) {
    if (j % 2 == 0) {
      hi = 1.0;
    } else {
      lo = -1.0;
    }
  });
  return clamp_unit(lo, hi);
}

Interval asin(const Interval& x) {
  if (x.lo() < -1.0 || x.hi() > 1.0) throw std::domain_error("asin outside [-1, 1]: " + x.str());
  return Interval(mpfr_apply(mpfr_asin, x.lo(), MPFR_RNDD), mpfr_apply(mpfr_asin, x.hi(), MPFR_RNDU));
}

Interval acos(const Interval& x) {
  if (x.lo() < -1.0 || x.hi() > 1.0) throw std::domain_error("acos outside [-1, 1]: " + x.str());
  return Interval(mpfr_apply(mpfr_acos, x.hi(), MPFR_RNDD), mpfr_apply(mpfr_acos, x.lo(), MPFR_RNDU));
}

Interval enclose_rat(const Rat& x) {
  double d = mpq_get_d(x.get().get_mpq_t());  // truncates toward zero
  require_finite(d);
  if (mpq_class(d) == x.get()) return Interval(d);
  return x.sign() > 0 ? Interval(d, next_up(d)) : Interval(next_down(d), d);
}

const Interval& pi_interval() {
  static const Interval pi(0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1);
  return pi;
}

const Interval& sqrt_two_over_pi() {
  static const Interval value = [] {
    mpfr_t p, t;
    mpfr_inits2(256, p, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(p, MPFR_RNDU);
    mpfr_ui_div(t, 2, p, MPFR_RNDD);
    mpfr_sqrt(t, t, MPFR_RNDD);
    double lo = mpfr_get_d(t, MPFR_RNDD);
    mpfr_const_pi(p, MPFR_RNDD);
    mpfr_ui_div(t, 2, p, MPFR_RNDU);
    mpfr_sqrt(t, t, MPFR_RNDU);
    double hi = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clears(p, t, static_cast<mpfr_ptr>(nullptr));
    return Interval(lo, hi);
  }();
  return value;
}

Interval gamma_ratio(const GammaRatioQuery& q) {
  if (q.base < 1) throw std::invalid_argument("gamma_ratio: base must be >= 1");
  if (q.twice_shift < 0) throw std::invalid_argument("gamma_ratio: negative shift");
  const Rat k(q.base);
  if (q.twice_shift % 2 == 0) {
    Rat prod(1);
    for (int i = 0; i < q.twice_shift / 2; ++i) prod *= k + Rat(i);
    return enclose_rat(Rat(1) / prod);
  }
  // Gamma(k)/Gamma(k+j+1/2) = [Gamma(k)/Gamma(k+1/2)] / prod_{i<j}(k+1/2+i), and
  // Gamma(k)/Gamma(k+1/2) = prod_{i<m}(k+i+1/2)/(k+i) * Gamma(y)/Gamma(y+1/2)
  // with y = k+m, where Wendel gives 1/sqrt(y) <= Gamma(y)/Gamma(y+1/2) <= sqrt(y+1/2)/y.
  constexpr int kLifts = 4096;
  const int j = (q.twice_shift - 1) / 2;
  const double kd = static_cast<double>(q.base);
  Interval factor(1.0);
  for (int i = 0; i < kLifts; ++i) factor *= Interval(kd + i + 0.5) / Interval(kd + i);
  for (int i = 0; i < j; ++i) factor /= Interval(kd + 0.5 + i);
  const Interval y(kd + kLifts);
  const Interval lower = Interval(1.0) / sqrt(y);
  const Interval upper = sqrt(y + Interval(0.5)) / y;
  return factor * Interval(lower.lo(), upper.hi());
}

}  // namespace gegencert
