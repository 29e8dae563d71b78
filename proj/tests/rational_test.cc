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

#include <random>
#include <vector>

#include "gegencert/errors.hpp"
#include "gegencert/rational.hpp"
#include "gegencert/roots.hpp"

namespace gegencert {
namespace {

RatPoly poly(std::initializer_list<Rat> c) { return RatPoly(std::vector<Rat>(c)); }

const RatPoly kF2 = poly({Rat(-1, 4), Rat(0), Rat(5, 4)});
const RatPoly kF3 = poly({Rat(0), Rat(-3, 4), Rat(0), Rat(7, 4)});

TEST(Rat, CanonicalForm) {
  Rat r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_GT(r.den(), 0);
  EXPECT_EQ(gcd(r.num(), r.den()), 1);
  EXPECT_EQ(Rat(10, 5).str(), "2");
}

TEST(Rat, ZeroDenominatorThrows) {
  EXPECT_ANY_THROW(Rat(1, 0));
  EXPECT_ANY_THROW(Rat(1) / Rat(0));
}

TEST(Rat, ParseDecimalAndFraction) {
  EXPECT_EQ(Rat::parse("0.089"), Rat(89, 1000));
  EXPECT_EQ(Rat::parse("-0.445"), Rat(-89, 200));
  EXPECT_EQ(Rat::parse("1.5e-3"), Rat(3, 2000));
  EXPECT_EQ(Rat::parse("16/13"), Rat(16, 13));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_ANY_THROW(Rat::parse("abc"));
  EXPECT_ANY_THROW(Rat::parse("1/0"));
  EXPECT_ANY_THROW(Rat::parse(""));
}

TEST(Rat, DecimalRendering) {
  EXPECT_EQ(Rat(1, 3).decimal(5), "0.33333");
  EXPECT_EQ(Rat(2, 3).decimal(3), "0.667");
  EXPECT_EQ(Rat(-81, 1000).decimal(2), "-0.081");
}

TEST(Rat, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(1);
  auto draw = [&] {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 999) + 1;
    return Rat(num, den);
  };
  for (int i = 0; i < 500; ++i) {
    Rat a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rat(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(RatPoly, Evaluation) {
  EXPECT_EQ(kF2(Rat(1)), Rat(1));
  EXPECT_EQ(RatPoly::identity()(Rat(0)), Rat(0));
  EXPECT_EQ(kF3(Rat(1)), Rat(1));
  EXPECT_EQ(poly_eval(kF3, Rat(1, 2)), Rat(7, 32) - Rat(3, 8));
}

TEST(RatPoly, LeadingCoefficientNonzero) {
  RatPoly p = kF2 - kF2;
  EXPECT_TRUE(p.is_zero());
  RatPoly q = kF3 - RatPoly::monomial(Rat(7, 4), 3);
  EXPECT_EQ(q.degree(), 1);
  EXPECT_FALSE(q.leading().is_zero());
}

TEST(RatPoly, Derivative) {
  EXPECT_EQ(poly_derivative(RatPoly::identity()), RatPoly::constant(Rat(1)));
  EXPECT_EQ(poly_derivative(kF2), RatPoly::monomial(Rat(5, 2), 1));
  EXPECT_TRUE(poly_derivative(RatPoly::constant(Rat(3))).is_zero());
}

TEST(RatPoly, DivmodAndGcd) {
  RatPoly a = kF2 * kF3 + RatPoly::identity();
  auto [q, r] = poly_divmod(a, kF3);
  EXPECT_EQ(q * kF3 + r, a);
  EXPECT_LT(r.degree(), kF3.degree());
  RatPoly g = poly_gcd(kF2 * kF3, kF2 * kF2);
  EXPECT_EQ(g.degree(), 2);
  EXPECT_EQ(squarefree_part(kF2 * kF2).degree(), 2);
}

TEST(RatPoly, TaylorShift) {
  RatPoly s = taylor_shift(kF3, Rat(1, 3));
  for (Rat x : {Rat(0), Rat(1, 7), Rat(-2, 5)}) EXPECT_EQ(s(x), kF3(x + Rat(1, 3)));
}

TEST(WeightedInnerProduct, Oracles) {
  EXPECT_EQ(weighted_inner_product(kF2, kF2), Rat(2, 21));
  EXPECT_EQ(weighted_inner_product(RatPoly::identity(), kF2), Rat(0));
  EXPECT_EQ(weighted_inner_product(RatPoly::constant(Rat(1)), RatPoly::constant(Rat(1))),
            Rat(4, 3));
}

TEST(IsolateRoots, SimpleQuadratic) {
  auto e = isolate_real_roots(poly({Rat(-1, 4), Rat(0), Rat(1)}), Rat(0), Rat(1));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_LE(e[0].lo, Rat(1, 2));
  EXPECT_GE(e[0].hi, Rat(1, 2));
}

TEST(IsolateRoots, IrrationalRootRefines) {
  RatPoly p = poly({Rat(-5, 2), Rat(0), Rat(35, 2)});
  auto e = isolate_real_roots(p, Rat(0), Rat(1));
  ASSERT_EQ(e.size(), 1u);
  RootEnclosure r = refine_root(p, e[0], Rat(1, 1000000));
  EXPECT_LE(r.width(), Rat(1, 1000000));
  EXPECT_LE(r.lo * r.lo, Rat(1, 7));
  EXPECT_GE(r.hi * r.hi, Rat(1, 7));
  EXPECT_LE(p(r.lo).sign() * p(r.hi).sign(), 0);
}

TEST(IsolateRoots, StrictModeRejectsRepeatedRoot) {
  RatPoly p = kF2 * kF2;
  try {
    isolate_real_roots(p, Rat(-1), Rat(1), SquarefreeMode::kStrict);
    FAIL() << "expected NonSquarefree";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonSquarefree);
  }
  EXPECT_EQ(isolate_real_roots(p, Rat(-1), Rat(1)).size(), 2u);
}

TEST(IsolateRoots, DisjointSignChangingEnclosures) {
  RatPoly p = RatPoly::constant(Rat(1));
  for (int i = 1; i <= 9; ++i) p = p * poly({Rat(-i, 10), Rat(1)});
  auto e = isolate_real_roots(p, Rat(0), Rat(1));
  ASSERT_EQ(e.size(), 9u);
  EXPECT_EQ(count_real_roots(p, Rat(0), Rat(1)), 9);
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_LE(e[i].lo, Rat(static_cast<long>(i) + 1, 10));
    EXPECT_GE(e[i].hi, Rat(static_cast<long>(i) + 1, 10));
    if (i > 0) {
      EXPECT_LE(e[i - 1].hi, e[i].lo);
    }
  }
}

TEST(CertifiedMin, SquareHasZeroMinimum) {
  RatRange r = certified_min_on_interval(poly({Rat(0), Rat(0), Rat(1)}), Rat(-1), Rat(1),
                                         Rat(1, 1000000));
  EXPECT_LE(r.lo, Rat(0));
  EXPECT_GE(r.hi, Rat(0));
  EXPECT_LE(r.width(), Rat(1, 1000000));
}

TEST(CertifiedMin, EnclosesSampledMinimum) {
  // Minimum on [0, 1] is -1/(2 sqrt 7) at x = 1/sqrt 7.
  RatRange r = certified_min_on_interval(kF3, Rat(0), Rat(1), Rat(1, 1000000));
  for (int i = 0; i <= 100; ++i) EXPECT_GE(kF3(Rat(i, 100)), r.lo);
  EXPECT_LE(r.lo, Rat(-188982, 1000000));
  EXPECT_GE(r.hi, Rat(-188983, 1000000));
  EXPECT_LE(r.width(), Rat(1, 1000000));
}

TEST(CertifyUpperBound, StrictAndNonStrict) {
  RatPoly p = poly({Rat(0), Rat(0), Rat(1)});
  EXPECT_TRUE(certify_upper_bound(p, Rat(-1), Rat(1), Rat(1)));
  EXPECT_FALSE(certify_upper_bound(p, Rat(-1), Rat(1), Rat(1), true));
  EXPECT_TRUE(certify_upper_bound(p, Rat(-1, 2), Rat(1, 2), Rat(1), true));
}

TEST(TaylorRange, ContainsValues) {
  RatRange r = taylor_range(kF3, Rat(1, 4), Rat(1, 2));
  for (int i = 0; i <= 20; ++i) {
    Rat x = Rat(1, 4) + Rat(i, 80);
    EXPECT_LE(r.lo, kF3(x));
    EXPECT_GE(r.hi, kF3(x));
  }
}

}  // namespace
}  // namespace gegencert
