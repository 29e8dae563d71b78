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


#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>
#include <random>

#include "gegencert/errors.hpp"
#include "gegencert/interval.hpp"

namespace gegencert {
namespace {

Rat exact(double d) { return Rat(mpq_class(d)); }

bool contains(const Interval& iv, const Rat& x) {
  return exact(iv.lo()) <= x && x <= exact(iv.hi());
}

double ulp(double x) { return std::nextafter(x, INFINITY) - x; }

TEST(Interval, Examples) {
  EXPECT_TRUE((Interval(1.0) + Interval(2.0)).contains(3.0));
  Interval s = sqrt(Interval(2.0));
  EXPECT_TRUE(s.contains(1.4142135623730951));
  EXPECT_LE(s.width(), 2 * ulp(s.lo()));
  EXPECT_EQ(Interval(-1.0, 1.0) * Interval(-1.0, 1.0), Interval(-1.0, 1.0));
}

TEST(Interval, RejectsInvertedBounds) { EXPECT_ANY_THROW(Interval(1.0, 0.0)); }

TEST(Interval, DivisionByZero) {
  try {
    Interval(1.0) / Interval(-1.0, 1.0);
    FAIL() << "expected DivisionByZeroInterval";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDivisionByZeroInterval);
  }
}

TEST(Interval, Trigonometry) {
  EXPECT_TRUE(cos(Interval(0.0)).contains(1.0));
  EXPECT_TRUE(cos(pi_interval() / Interval(2.0)).contains(0.0));
  Interval s = sin(Interval(0.0, pi_interval().hi()));
  EXPECT_TRUE(s.contains(0.0));
  EXPECT_TRUE(s.contains(1.0));
  EXPECT_GE(s.lo(), -1e-15);
  EXPECT_LE(s.hi(), 1.0);
  Interval a = acos(Interval(0.5));
  EXPECT_NEAR(a.mid(), M_PI / 3, 1e-15);
  EXPECT_LE(a.width(), 1e-15);
}

TEST(Interval, EncloseRational) {
  EXPECT_EQ(enclose_rat(Rat(1, 2)), Interval(0.5));
  for (Rat r : {Rat(1, 3), Rat(16, 13), Rat(-89, 1000), Rat(101, 10)}) {
    Interval iv = enclose_rat(r);
    EXPECT_TRUE(contains(iv, r));
    EXPECT_LE(iv.hi(), std::nextafter(iv.lo(), INFINITY));
  }
}

TEST(Interval, OutwardRoundingAgainstExactArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    double a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    Interval x(std::min(a, b), std::max(a, b));
    Interval y(std::min(c, d), std::max(c, d));
    Rat xs[] = {exact(x.lo()), exact(x.hi())};
    Rat ys[] = {exact(y.lo()), exact(y.hi())};
    for (const Rat& p : xs) {
      for (const Rat& q : ys) {
        EXPECT_TRUE(contains(x + y, p + q));
        EXPECT_TRUE(contains(x - y, p - q));
        EXPECT_TRUE(contains(x * y, p * q));
        if (!y.contains_zero()) {
          EXPECT_TRUE(contains(x / y, p / q));
        }
      }
    }
  }
}

TEST(Interval, SqrtOutward) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    double v = dist(rng);
    Interval s = sqrt(Interval(v));
    EXPECT_LE(exact(s.lo()) * exact(s.lo()), exact(v));
    EXPECT_GE(exact(s.hi()) * exact(s.hi()), exact(v));
  }
}

// Gamma(k) / Gamma(k + s) at 200 bits.
class GammaOracle {
 public:
  GammaOracle(int k, int twice_shift) {
    mpfr_inits2(200, a_, b_, (mpfr_ptr)nullptr);
    mpfr_set_si(a_, k, MPFR_RNDN);
    mpfr_lngamma(a_, a_, MPFR_RNDN);
    mpfr_set_si(b_, 2L * k + twice_shift, MPFR_RNDN);
    mpfr_div_2ui(b_, b_, 1, MPFR_RNDN);
    mpfr_lngamma(b_, b_, MPFR_RNDN);
    mpfr_sub(a_, a_, b_, MPFR_RNDN);
    mpfr_exp(a_, a_, MPFR_RNDN);
  }
  ~GammaOracle() { mpfr_clears(a_, b_, (mpfr_ptr)nullptr); }
  bool inside(const Interval& iv) const {
    return mpfr_cmp_d(a_, iv.lo()) >= 0 && mpfr_cmp_d(a_, iv.hi()) <= 0;
  }
  double value() const { return mpfr_get_d(a_, MPFR_RNDN); }

 private:
  mpfr_t a_, b_;
};

TEST(GammaRatio, ZeroShiftIsOne) {
  EXPECT_EQ(gamma_ratio({7, 0}), Interval(1.0));
}

TEST(GammaRatio, ContainsHighPrecisionOracle) {
  for (int k : {1, 2, 3, 6, 10, 51, 100, 500, 10000}) {
    for (int twice : {1, 2, 4, 5, 7, 9}) {
      GammaOracle oracle(k, twice);
      Interval iv = gamma_ratio({k, twice});
      EXPECT_TRUE(oracle.inside(iv)) << "k=" << k << " 2s=" << twice << " " << iv.str();
      EXPECT_LE(iv.width(), 1e-4 * oracle.value()) << "k=" << k << " 2s=" << twice;
    }
  }
}

TEST(GammaRatio, AmplitudeBelowOne) {
  for (int k = 51; k <= 400; k += 7) {
    Interval amp = half_power(Interval(static_cast<double>(k)), 5) * gamma_ratio({k, 5});
    EXPECT_LT(amp.hi(), 1.0) << k;
  }
}

TEST(Interval, HalfPowerMatchesSqrt) {
  Interval h = half_power(Interval(9.0), 3);
  EXPECT_TRUE(h.contains(27.0));
  EXPECT_TRUE(half_power(Interval(4.0), 5).contains(32.0));
}

TEST(Interval, HullAndMax) {
  Interval a(1.0, 2.0), b(-3.0, 1.5);
  EXPECT_EQ(hull(a, b), Interval(-3.0, 2.0));
  EXPECT_EQ(max(a, b), Interval(1.0, 2.0));
  EXPECT_EQ(min(a, b), Interval(-3.0, 1.5));
  EXPECT_EQ(abs(b), Interval(0.0, 3.0));
}

}  // namespace
}  // namespace gegencert
