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
#ifndef GEGENCERT_ESTIMATES_HPP_
#define GEGENCERT_ESTIMATES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gegencert/rational.hpp"

namespace gegencert {

// Shape constants of the scaled derivative family.
struct ShapeConstants {
  static Rat dip() { return Rat(81, 1000); }       // lower bound magnitude
  static Rat plateau() { return Rat(11, 100); }    // plateau height
  static Rat chord_width() { return Rat(10); }     // plateau ends at 1 - 10/lambda_k
  static Rat rise() { return Rat(919, 1000); }     // 1 - dip
  static Rat curvature() { return Rat(89, 1000); } // (1 - plateau) / chord_width
};

struct Atom {
  Rat x;
  Rat w;
};

// Discrete probability measure on (-1, 1) with zero mean.
class DensityMeasure {
 public:
  DensityMeasure() = default;
  explicit DensityMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  // Throws InvariantViolation unless weights are positive, sum to 1, the
  // mean is 0 and all positions lie in (-1, 1).
  void validate() const;
  DensityMeasure mirrored() const;

  // "w1 x1 w2 x2 ..." with exact "p/q" literals.
  std::string serialize() const;
  static DensityMeasure parse(std::string_view line);

 private:
  std::vector<Atom> atoms_;
};

// Moments of x^m (1 - x^2)^n over one half-line; sign +1 for [0, 1], -1 for
// [-1, 0] (with |x|^m). Atoms at 0 count half on each side.
struct MomentKey {
  int m;
  int n;
  int sign;
  friend auto operator<=>(const MomentKey&, const MomentKey&) = default;
};

struct MomentSet {
  Rat a;
  Rat a_plus;
  Rat a_minus;
  Rat lambda;             // a_plus / a, >= 1/2 after relabelling
  bool mirrored = false;  // true when g was reflected to make lambda >= 1/2
  Rat mass_right;         // integral of g over [0, 1]
  Rat mass_left;          // integral of g over [-1, 0]
  Rat first_right;        // integral of x g over [0, 1]
  std::map<MomentKey, Rat> table;

  const Rat& half_moment(int m, int n, int sign) const;
};

// Exact moments, relabelled so lambda >= 1/2. Throws InvariantViolation if
// any moment inequality implied by admissibility fails.
MomentSet moments(const DensityMeasure& g);

// Integral of (1 - x^2) g times scaled_derivative(k).
Rat derivative_moment(const DensityMeasure& g, int k);

struct BoundParams {
  Rat alpha{1, 2};
  int k = 2;
  int n = 3;
  Rat a;
  Rat lambda{1, 2};
};

// Parity-split bound on |derivative_moment|: for even k
// (0.081 + 0.919 lambda) a - 0.089 lambda^2 lambda_k a^2, for odd k
// a - 0.089 lambda_k (2 lambda^2 - 2 lambda + 1) a^2. Throws
// HypothesisViolated when a > 5/lambda_n or k > n.
Rat refined_moment_bound(const BoundParams& p);
// (2k+3)/(2 alpha^2 (lambda_k + 2)) times the square of refined_moment_bound.
Rat coefficient_bound_sq(const BoundParams& p);
// Same prefactor times a^2.
Rat coarse_coefficient_bound_sq(const BoundParams& p);
// Prefactor times the squared moment, i.e. the implied coefficient square.
Rat implied_coefficient_sq(const Rat& alpha, int k, const Rat& moment);

struct LowDegreeBounds {
  Rat a2_sq;  // square of the degree-2 bound
  Rat a3;
  Rat a4;
  std::optional<Rat> a5;  // only when a < 1/8
};

LowDegreeBounds low_degree_bounds(const MomentSet& ms);

// Integrals of (1 - x^2) scaled_derivative(k) g over [0, 1] and [-1, 0]
// against their bounds, in the orientation of g as given.
struct HalfLineCheck {
  Rat right;
  Rat left;
  Rat right_lo, right_hi;
  Rat left_lo, left_hi;
  bool pass = false;
};

// Throws HypothesisViolated unless k >= 6 and a <= 5/lambda_k.
HalfLineCheck half_line_check(const DensityMeasure& g, int k);

enum class DensityFamily { kSpread, kNearEnds, kNearCenter };

// Seeded deterministic stream of admissible densities.
class DensityGenerator {
 public:
  explicit DensityGenerator(std::uint64_t seed, bool adversarial = true);

  DensityMeasure next();
  DensityMeasure next(DensityFamily family);

 private:
  std::uint64_t below(std::uint64_t n);
  Rat position(DensityFamily family, int sign);

  std::mt19937_64 rng_;
  bool adversarial_;
};

struct Violation {
  std::string check;
  int k = 0;
  DensityMeasure g;
  Rat value;
  Rat bound;
};

struct PropertySummary {
  std::uint64_t seed = 0;
  std::size_t densities = 0;
  std::map<std::string, std::size_t> checks;
  std::map<std::string, std::size_t> violation_counts;
  std::vector<Violation> violations;  // first few per check

  bool clean() const { return violation_counts.empty(); }
};

PropertySummary run_property_suite(std::uint64_t seed, std::size_t count, bool adversarial = true,
                                   std::size_t keep_per_check = 3);

}  // namespace gegencert

#endif  // GEGENCERT_ESTIMATES_HPP_
