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

#ifndef GEGENCERT_RATIONAL_HPP_
#define GEGENCERT_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gegencert {

// Exact rational scalar. Always canonical: gcd(num, den) = 1 and den > 0.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T v) : v_(static_cast<long>(v)) {}  // NOLINT(runtime/explicit)
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "p/q", and decimal literals such as "-0.089" or "1.5e-3".
  static Rat parse(std::string_view text);

  const mpq_class& get() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Nearest double; exact for dyadic values in range.
  double to_double() const;
  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Correctly rounded decimal with `digits` significant digits.
  std::string decimal(int digits) const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rat abs(const Rat& x);
Rat pow(const Rat& x, int e);
const Rat& min(const Rat& a, const Rat& b);
const Rat& max(const Rat& a, const Rat& b);

// Dense univariate polynomial, coefficients in ascending degree. The zero
// polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, int degree);
  static RatPoly identity();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const;
  const Rat& leading() const { return c_.back(); }

  Rat operator()(const Rat& x) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rat& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
  friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c_ == b.c_;
  }

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

Rat poly_eval(const RatPoly& p, const Rat& x);
RatPoly poly_derivative(const RatPoly& p);

// Quotient and remainder of Euclidean division; throws on division by zero.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd; zero only when both inputs are zero.
RatPoly poly_gcd(RatPoly a, RatPoly b);
// p / gcd(p, p'), normalized to be monic.
RatPoly squarefree_part(const RatPoly& p);
// Coefficients of q(t) = p(c + t).
RatPoly taylor_shift(const RatPoly& p, const Rat& c);

// Integral over [-1, 1] of x^m.
Rat monomial_moment(int m);
// Integral over [-1, 1] of (1 - x^2) p(x) q(x).
Rat weighted_inner_product(const RatPoly& p, const RatPoly& q);

}  // namespace gegencert

#endif  // GEGENCERT_RATIONAL_HPP_
