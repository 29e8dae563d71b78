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

#include "gegencert/estimates.hpp"

#include <sstream>
#include <stdexcept>

#include "gegencert/errors.hpp"
#include "gegencert/gegenbauer.hpp"

namespace gegencert {

namespace {

void invariant(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(ErrorKind::kInvariantViolation, what);
}

Rat one_minus_sq(const Rat& x) { return Rat(1) - x * x; }

// Weight of an atom on the chosen half-line; atoms at 0 count half.
Rat side_share(const Atom& at, int sign) {
  const int s = at.x.sign();
  if (s == 0) return at.w / Rat(2);
  return s == sign ? at.w : Rat(0);
}

Rat prefactor(const Rat& alpha, int k) {
  return Rat(2 * k + 3) / (Rat(2) * alpha * alpha * (lambda_of(k) + Rat(2)));
}

}  // namespace

DensityMeasure::DensityMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

void DensityMeasure::validate() const {
  invariant(!atoms_.empty(), "empty density");
  Rat mass, mean;
  for (const auto& at : atoms_) {
    invariant(at.w.sign() > 0, "non-positive weight " + at.w.str());
    invariant(Rat(-1) < at.x && at.x < Rat(1), "atom outside (-1, 1): " + at.x.str());
    mass += at.w;
    mean += at.w * at.x;
  }
  invariant(mass == Rat(1), "mass " + mass.str() + " != 1");
  invariant(mean.is_zero(), "mean " + mean.str() + " != 0");
}

DensityMeasure DensityMeasure::mirrored() const {
  std::vector<Atom> out;
  out.reserve(atoms_.size());
  for (const auto& at : atoms_) out.push_back({-at.x, at.w});
  return DensityMeasure(std::move(out));
}

std::string DensityMeasure::serialize() const {
  std::string out;
  for (const auto& at : atoms_) {
    if (!out.empty()) out += ' ';
    out += at.w.str() + ' ' + at.x.str();
  }
  return out;
}

DensityMeasure DensityMeasure::parse(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<Atom> atoms;
  std::string w, x;
  while (in >> w) {
    if (!(in >> x)) throw std::invalid_argument("DensityMeasure::parse: odd token count");
    atoms.push_back({Rat::parse(x), Rat::parse(w)});
  }
  return DensityMeasure(std::move(atoms));
}

const Rat& MomentSet::half_moment(int m, int n, int sign) const {
  auto it = table.find({m, n, sign});
  if (it == table.end()) throw std::out_of_range("MomentSet: moment not tabulated");
  return it->second;
}

MomentSet moments(const DensityMeasure& input) {
  input.validate();
  auto side_sum = [](const DensityMeasure& g, int sign, auto&& f) {
    Rat s;
    for (const auto& at : g.atoms()) {
      const Rat share = side_share(at, sign);
      if (!share.is_zero()) s += share * f(at.x);
    }
    return s;
  };
  auto weighted = [](const Rat& x) { return one_minus_sq(x); };
  const Rat plus = side_sum(input, 1, weighted);
  const Rat minus = side_sum(input, -1, weighted);

  MomentSet ms;
  ms.mirrored = minus > plus;
  const DensityMeasure g = ms.mirrored ? input.mirrored() : input;
  ms.a_plus = ms.mirrored ? minus : plus;
  ms.a_minus = ms.mirrored ? plus : minus;
  ms.a = ms.a_plus + ms.a_minus;
  ms.lambda = ms.a.is_zero() ? Rat(1, 2) : ms.a_plus / ms.a;
  ms.mass_right = side_sum(g, 1, [](const Rat&) { return Rat(1); });
  ms.mass_left = side_sum(g, -1, [](const Rat&) { return Rat(1); });
  ms.first_right = side_sum(g, 1, [](const Rat& x) { return x; });
  for (int sign : {1, -1}) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 2; ++n) {
        ms.table[{m, n, sign}] = side_sum(g, sign, [&](const Rat& x) {
          return pow(abs(x), m) * pow(one_minus_sq(x), n);
        });
      }
    }
  }

  invariant(ms.lambda >= Rat(1, 2), "lambda below 1/2 after relabelling");
  const Rat lo = (Rat(1) - ms.a) / Rat(2);
  const Rat hi = (Rat(1) + ms.a) / Rat(2);
  invariant(lo <= ms.mass_right && ms.mass_right <= hi, "right mass outside [(1-a)/2, (1+a)/2]");
  invariant(lo <= ms.mass_left && ms.mass_left <= hi, "left mass outside [(1-a)/2, (1+a)/2]");
  invariant(ms.first_right <= Rat(1, 2), "first moment on [0, 1] exceeds 1/2");
  invariant(ms.mass_right + ms.first_right < Rat(1), "integral of (1+x)g over [0, 1] not below 1");
  return ms;
}

Rat derivative_moment(const DensityMeasure& g, int k) {
  const RatPoly& f = scaled_derivative(k);
  Rat s;
  for (const auto& at : g.atoms()) s += at.w * one_minus_sq(at.x) * f(at.x);
  return s;
}

Rat refined_moment_bound(const BoundParams& p) {
  if (p.k < 2 || p.k > p.n) {
    throw VerificationError(ErrorKind::kHypothesisViolated, "need 2 <= k <= n");
  }
  if (p.a > Rat(5) / lambda_of(p.n)) {
    throw VerificationError(ErrorKind::kHypothesisViolated,
                            "a = " + p.a.str() + " exceeds 5/lambda_" + std::to_string(p.n));
  }
  const Rat lk = lambda_of(p.k);
  const Rat& l = p.lambda;
  if (p.k % 2 == 0) {
    return (ShapeConstants::dip() + ShapeConstants::rise() * l) * p.a -
           ShapeConstants::curvature() * l * l * lk * p.a * p.a;
  }
  return p.a - ShapeConstants::curvature() * lk * (Rat(2) * l * l - Rat(2) * l + Rat(1)) * p.a * p.a;
}

Rat coefficient_bound_sq(const BoundParams& p) {
  const Rat b = refined_moment_bound(p);
  return prefactor(p.alpha, p.k) * b * b;
}

Rat coarse_coefficient_bound_sq(const BoundParams& p) {
  return prefactor(p.alpha, p.k) * p.a * p.a;
}

Rat implied_coefficient_sq(const Rat& alpha, int k, const Rat& moment) {
  return prefactor(alpha, k) * moment * moment;
}

LowDegreeBounds low_degree_bounds(const MomentSet& ms) {
  LowDegreeBounds b;
  const Rat& a = ms.a;
  const Rat& ap = ms.a_plus;
  const Rat& am = ms.a_minus;
  const Rat& l = ms.lambda;
  b.a2_sq = ap * ap * (Rat(1) - Rat(2) * ap / (a + Rat(1)));
  b.a3 = max(a - Rat(7, 3) * a * a / (a + Rat(1)) * (Rat(2) * l * l - Rat(2) * l + Rat(1)), a / Rat(6));
  const Rat& a11 = ms.half_moment(1, 1, 1);
  b.a4 = a11 - Rat(3) * a11 * a11 + am / Rat(9);
  if (a < Rat(1, 8)) {
    const Rat a1 = a + Rat(1);
    b.a5 = a - Rat(6) * (ap * ap + am * am) / a1 + Rat(33) * (ap * ap * ap + am * am * am) / (Rat(4) * a1 * a1);
  }
  return b;
}

HalfLineCheck half_line_check(const DensityMeasure& g, int k) {
  if (k < 6) throw VerificationError(ErrorKind::kHypothesisViolated, "half-line bounds need k >= 6");
  g.validate();
  const RatPoly& f = scaled_derivative(k);
  HalfLineCheck c;
  Rat ap, am;
  for (const auto& at : g.atoms()) {
    const Rat base = one_minus_sq(at.x);
    const Rat val = base * f(at.x);
    const Rat wr = side_share(at, 1);
    const Rat wl = side_share(at, -1);
    c.right += wr * val;
    c.left += wl * val;
    ap += wr * base;
    am += wl * base;
  }
  const Rat lk = lambda_of(k);
  if (ap + am > Rat(5) / lk) {
    throw VerificationError(ErrorKind::kHypothesisViolated, "a exceeds 5/lambda_k");
  }
  const Rat dip = ShapeConstants::dip();
  const Rat cur = ShapeConstants::curvature();
  c.right_lo = -dip * ap;
  c.right_hi = ap - cur * lk * ap * ap;
  if (k % 2 == 1) {
    c.left_lo = -dip * am;
    c.left_hi = am - cur * lk * am * am;
  } else {
    c.left_lo = -(am - cur * lk * am * am);
    c.left_hi = dip * am;
  }
  c.pass = c.right_lo <= c.right && c.right <= c.right_hi && c.left_lo <= c.left && c.left <= c.left_hi;
  return c;
}

DensityGenerator::DensityGenerator(std::uint64_t seed, bool adversarial)
    : rng_(seed), adversarial_(adversarial) {}

std::uint64_t DensityGenerator::below(std::uint64_t n) {
  // Rejection sampling keeps the stream identical across standard libraries.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t v;
  do v = rng_(); while (v >= limit);
  return v % n;
}

Rat DensityGenerator::position(DensityFamily family, int sign) {
  switch (family) {
    case DensityFamily::kSpread: {
      const long d = 2 + static_cast<long>(below(63));
      const long j = 1 + static_cast<long>(below(static_cast<std::uint64_t>(d - 1)));
      return Rat(sign * j, d);
    }
    case DensityFamily::kNearEnds: {
      const long j = 1 + static_cast<long>(below(64));
      return Rat(sign) * (Rat(1) - Rat(j, 4096));
    }
    case DensityFamily::kNearCenter: {
      const long j = static_cast<long>(below(9));
      return Rat(sign * j, 64);
    }
  }
  return Rat(0);
}

DensityMeasure DensityGenerator::next() {
  if (!adversarial_) return next(DensityFamily::kSpread);
  const std::uint64_t pick = below(10);
  if (pick < 7) return next(DensityFamily::kSpread);
  return next(pick < 9 ? DensityFamily::kNearEnds : DensityFamily::kNearCenter);
}

DensityMeasure DensityGenerator::next(DensityFamily family) {
  for (;;) {
    const int m = 2 + static_cast<int>(below(11));
    std::vector<Atom> atoms;
    std::vector<long> raw;
    long total = 0;
    for (int i = 0; i < m - 2; ++i) {
      raw.push_back(1 + static_cast<long>(below(1000)));
      total += raw.back();
    }
    const long rest = 1 + static_cast<long>(below(3000));
    total += rest;
    Rat mean;
    for (int i = 0; i < m - 2; ++i) {
      const int sign = below(2) == 0 ? 1 : -1;
      Atom at{position(family, sign), Rat(raw[static_cast<size_t>(i)], total)};
      mean += at.w * at.x;
      atoms.push_back(at);
    }
    // The last two atoms sit on opposite sides and absorb the remaining
    // mass while cancelling the mean exactly.
    const Rat remaining(rest, total);
    Rat p = position(family, 1);
    Rat q = position(family, -1);
    if (p.is_zero() || q.is_zero()) continue;
    const Rat wp = (-mean - q * remaining) / (p - q);
    const Rat wq = remaining - wp;
    if (wp.sign() <= 0 || wq.sign() <= 0) continue;
    atoms.push_back({p, wp});
    atoms.push_back({q, wq});
    return DensityMeasure(std::move(atoms));
  }
}

PropertySummary run_property_suite(std::uint64_t seed, std::size_t count, bool adversarial,
                                   std::size_t keep_per_check) {
  PropertySummary s;
  s.seed = seed;
  DensityGenerator gen(seed, adversarial);
  auto record = [&](const std::string& check, bool ok, int k, const DensityMeasure& g,
                    const Rat& value, const Rat& bound) {
    ++s.checks[check];
    if (ok) return;
    std::size_t& n = s.violation_counts[check];
    if (n++ < keep_per_check) s.violations.push_back({check, k, g, value, bound});
  };
  constexpr int kMaxIndex = 12;
  constexpr int kMaxHalfLineDegree = 60;
  for (std::size_t i = 0; i < count; ++i) {
    const DensityMeasure g = gen.next();
    ++s.densities;
    MomentSet ms;
    try {
      ms = moments(g);
    } catch (const VerificationError&) {
      record("moment inequalities", false, 0, g, Rat(0), Rat(0));
      continue;
    }
    record("moment inequalities", true, 0, g, Rat(0), Rat(0));

    std::vector<Rat> am(kMaxHalfLineDegree + 1);
    for (int k = 2; k <= kMaxHalfLineDegree; ++k) {
      if (k > 5 && ms.a > Rat(5) / lambda_of(k)) break;
      am[static_cast<size_t>(k)] = derivative_moment(g, k);
    }

    int n = 0;
    for (int cand = kMaxIndex; cand >= 3; --cand) {
      if (ms.a <= Rat(5) / lambda_of(cand)) {
        n = cand;
        break;
      }
    }
    for (int k = 2; k <= n; ++k) {
      const BoundParams p{Rat(1, 2), k, n, ms.a, ms.lambda};
      const Rat bound = refined_moment_bound(p);
      const Rat& ak = am[static_cast<size_t>(k)];
      record("refined moment bound", abs(ak) <= bound, k, g, abs(ak), bound);
      for (const Rat& alpha : {Rat(1, 2), Rat(3, 4), Rat(99, 100)}) {
        const Rat implied = implied_coefficient_sq(alpha, k, ak);
        const Rat cap = coefficient_bound_sq({alpha, k, n, ms.a, ms.lambda});
        record("coefficient bound", implied <= cap, k, g, implied, cap);
      }
    }

    const LowDegreeBounds lb = low_degree_bounds(ms);
    record("degree-2 bound", am[2] * am[2] <= lb.a2_sq, 2, g, am[2] * am[2], lb.a2_sq);
    record("degree-3 bound", abs(am[3]) <= lb.a3, 3, g, abs(am[3]), lb.a3);
    record("degree-4 bound", abs(am[4]) <= lb.a4, 4, g, abs(am[4]), lb.a4);
    if (lb.a5) record("degree-5 bound", abs(am[5]) <= *lb.a5, 5, g, abs(am[5]), *lb.a5);

    for (int k = 6; k <= kMaxHalfLineDegree; ++k) {
      if (ms.a > Rat(5) / lambda_of(k)) break;
      const HalfLineCheck c = half_line_check(g, k);
      record("half-line bounds", c.pass, k, g, c.right, c.right_hi);
    }
  }
  return s;
}

}  // namespace gegencert
