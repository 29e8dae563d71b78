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
#ifndef GEGENCERT_GEGENBAUER_HPP_
#define GEGENCERT_GEGENBAUER_HPP_

#include <deque>
#include <functional>
#include <shared_mutex>

#include "gegencert/rational.hpp"

namespace gegencert {

// Positive half-integer stored as twice its value (3 means 3/2).
class HalfInt {
 public:
  explicit HalfInt(int twice_value);
  int twice_value() const { return twice_; }
  Rat value() const { return Rat(twice_, 2); }
  HalfInt plus_one() const { return HalfInt(twice_ + 2); }
  friend bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }

 private:
  int twice_;
};

// Append-only cache of polynomials indexed by degree. Published entries
// never move, so returned references stay valid for the process lifetime.
class PolyCache {
 public:
  using Builder = std::function<RatPoly(int, PolyCache&)>;
  explicit PolyCache(Builder build) : build_(std::move(build)) {}

  const RatPoly& get(int k);

 private:
  Builder build_;
  std::shared_mutex mu_;
  std::deque<RatPoly> items_;
};

// Exact C_k^nu built by the three-term recurrence.
const RatPoly& gegenbauer(HalfInt nu, int k);
// C_k^nu(x) by running the recurrence on values; independent of the
// polynomial cache.
Rat gegenbauer_value(HalfInt nu, int k, const Rat& x);
// C_k^nu(1) = (2nu)_k / k!.
Rat gegenbauer_at_one(HalfInt nu, int k);

struct Eigenvalue {
  int k;
  Rat lambda;
};

// k(k+3).
Eigenvalue eigenvalue(int k);
Rat lambda_of(int k);

// Order-3/2 family normalized to 1 at x = 1.
const RatPoly& zonal_profile(int k);
// (4/lambda_k) times the derivative of zonal_profile(k); equals
// 24/(lambda_k(lambda_k+2)) C_{k-1}^{5/2}. Value 1 at x = 1.
const RatPoly& scaled_derivative(int k);
RatPoly scaled_derivative_from_profile(int k);

bool check_derivative_identity(HalfInt nu, int k);
bool check_ode(int k);
bool check_orthogonality(int k, int l);
// 8/((2k+3)(k+1)(k+2)).
Rat orthogonality_constant(int k);
// Returns lambda_k/4 after certifying |F'_k| <= lambda_k/4 on [-1, 1];
// throws BoundViolated otherwise.
Rat derivative_max_bound(int k);

}  // namespace gegencert

#endif  // GEGENCERT_GEGENBAUER_HPP_
