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

#include "gegencert/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gegencert/asymptotics.hpp"
#include "gegencert/errors.hpp"

namespace gegencert {

namespace {

constexpr int kExactLimit = 50;

const Rat& lower_target() {
  static const Rat v(-81, 1000);
  return v;
}
const Rat& point_lo() {
  static const Rat v(81, 1000);
  return v;
}
const Rat& point_hi() {
  static const Rat v(11, 100);
  return v;
}

Interval range_interval(const RatRange& r) {
  return Interval(enclose_rat(r.lo).lo(), enclose_rat(r.hi).hi());
}

Rat point_location(int k) { return Rat(1) - Rat(10) / lambda_of(k); }

// 1 - (lambda_k/10)(1 - 11/100)(1 - x)
RatPoly chord(int k) {
  const Rat slope = lambda_of(k) / Rat(10) * (Rat(1) - point_hi());
  return RatPoly(std::vector<Rat>{Rat(1) - slope, slope});
}

Interval scale_constant() { return Interval(8.0) * sqrt_two_over_pi(); }

double cos_shift_lower(const Interval& x, const Interval& shift, PhiForm form) {
  if (form == PhiForm::kTangentShift) {
    const Interval pi = pi_interval();
    const Interval half_pi = pi / Interval(2.0);
    const Interval three_half_pi = Interval(3.0) * half_pi;
    const bool convex_window = x.lo() >= half_pi.hi() && x.hi() <= three_half_pi.lo();
    const bool before_mirror =
        (Interval(2.0) * Interval(x.hi()) + Interval(shift.hi())).hi() <= (Interval(3.0) * pi).lo();
    if (convex_window && before_mirror) return (cos(x) - shift * sin(x)).lo();
  }
  return (cos(x) - Interval(shift.hi())).lo();
}

double remainder_on_cell(int k, const Interval& l) {
  const double half_k2 = 0.5 * static_cast<double>(k) * static_cast<double>(k);
  const bool below = (l * l).hi() <= half_k2 && l.hi() < k;
  const bool above = (Interval(l.lo()) * Interval(l.lo())).lo() > half_k2;
  if (below) return remainder_small_l(k, l).hi();
  if (above) return remainder_large_l(k).hi();
  return std::max(remainder_large_l(k).hi(), remainder_small_l(k, l).hi());
}

LemmaVerdict make(LemmaId id, int k, Method m) {
  LemmaVerdict v;
  v.lemma = id;
  v.k = k;
  v.method = m;
  return v;
}

bool all_parts(const LemmaVerdict& v) {
  return std::all_of(v.parts.begin(), v.parts.end(), [](const PartResult& p) { return p.pass; });
}

RootEnclosure largest_root(const RatPoly& p) {
  auto roots = isolate_real_roots(p, Rat(-1), Rat(1));
  if (roots.empty()) throw std::logic_error("largest_root: no root in [-1, 1]");
  return roots.back();
}

}  // namespace

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kMinimum: return "derivative-minimum";
    case LemmaId::kPlateau: return "plateau-chord";
    case LemmaId::kPointValue: return "point-value";
    case LemmaId::kTailZero: return "tail-zero-bound";
    case LemmaId::kZeroBound: return "zero-bound";
    case LemmaId::kExtremaChain: return "extrema-chain";
    case LemmaId::kTailPositivity: return "tail-positivity";
  }
  return "?";
}

std::string to_string(Method m) {
  return m == Method::kExactRoots ? "exact_roots" : "asymptotic";
}

Interval min_location_l(int k) {
  const Rat x = Rat(1) - Rat(91, 10) / Rat(static_cast<long>(k) * k);
  return Interval(static_cast<double>(k)) * sqrt(enclose_rat(Rat(1) - x * x));
}

Interval zero_bound_closed_form(int n, HalfInt nu) {
  if (n < 2) throw std::invalid_argument("zero_bound_closed_form: n must be >= 2");
  const Rat v = nu.value();
  const Rat ratio = Rat(n - 1) * (Rat(n - 2) + Rat(2) * v) /
                    ((Rat(n - 2) + v) * (Rat(n - 1) + v));
  return sqrt(enclose_rat(ratio)) * cos(pi_interval() / Interval(static_cast<double>(n + 1)));
}

std::vector<CaseSplitBranch> minimum_branches(int k) {
  using R = RemainderSource;
  const Interval root18 = sqrt(Interval(18.0));
  const double kd = k;
  return {
      {Interval(root18.lo(), 5.0), PhiForm::kPlainShift, {R::kInner}},
      {Interval(5.0, 5.6), PhiForm::kPlainShift, {R::kInner}},
      {Interval(5.6, 6.8), PhiForm::kTangentShift, {R::kInner}},
      {Interval(6.8, kd), PhiForm::kPlainShift, {R::kInner, R::kOuter}},
  };
}

double phi_lower(int k, const Interval& l, PhiForm form) {
  const Interval kk(static_cast<double>(k));
  const Interval ratio = l / kk;
  const Interval defect = (pi_interval() / Interval(2.0) - Interval(1.0)) * pow(ratio, 3);
  const Interval quarter = pi_interval() / Interval(4.0);
  auto shift = [&](double m) {
    const Interval base = Interval(m) * ratio;
    const Interval top = (kk + Interval(m)) * defect + base;
    return Interval(base.lo(), top.hi());
  };
  const double t0 = cos_shift_lower(l - Interval(5.0) * quarter, shift(1.5), form);
  const double t1 = cos_shift_lower(l - Interval(3.0) * quarter, shift(2.5), form);
  const Interval coef = enclose_rat(Rat(15, 8)) * kk / (kk + Interval(2.5));
  const Interval phi = Interval(t0) / half_power(l, 5) + coef * Interval(t1) / half_power(l, 7);
  return phi.lo();
}

LemmaVerdict verify_minimum_direct(int k) {
  if (k < 6 || k > kExactLimit) throw std::invalid_argument("verify_minimum_direct: need 6 <= k <= 50");
  LemmaVerdict v = make(LemmaId::kMinimum, k, Method::kExactRoots);
  const RatRange m = certified_min_on_interval(scaled_derivative(k), Rat(0), Rat(1), Rat(1, 10000));
  v.witness = range_interval(m);
  v.pass = m.lo >= lower_target();
  v.parts.push_back({"min >= -0.081", v.pass});
  v.detail = "min in [" + m.lo.decimal(10) + ", " + m.hi.decimal(10) + "]";
  return v;
}

LemmaVerdict verify_minimum_asymptotic(int k) {
  if (k < 6) throw std::invalid_argument("verify_minimum_asymptotic: need k >= 6");
  LemmaVerdict v = make(LemmaId::kMinimum, k, Method::kAsymptotic);

  const Interval l_min = min_location_l(k);
  const auto branches = minimum_branches(k);
  if (l_min.lo() < branches.front().l_range.lo()) {
    throw VerificationError(ErrorKind::kBranchGap,
                            "l_min " + l_min.str() + " below the first branch at k = " + std::to_string(k));
  }
  for (size_t i = 0; i + 1 < branches.size(); ++i) {
    if (branches[i].l_range.hi() < branches[i + 1].l_range.lo()) {
      throw VerificationError(ErrorKind::kBranchGap, "gap between branches at k = " + std::to_string(k));
    }
  }

  const Rat zero_cut = Rat(1) - Rat(91, 10) / Rat(static_cast<long>(k) * k);
  const bool zero_ok = zero_bound_closed_form(k - 2, HalfInt(7)).hi() <= enclose_rat(zero_cut).lo();
  v.parts.push_back({"zero bound locates minimum", zero_ok});
  const bool amp5 = amplitude_factor(k).hi() < 1.0;
  const bool amp9 = (half_power(Interval(static_cast<double>(k)), 9) * gamma_ratio({k, 9})).hi() < 1.0;
  v.parts.push_back({"Gamma factors < 1", amp5 && amp9});

  const Interval scale = scale_constant();
  const double target = -0.081;
  double worst = INFINITY;
  std::ostringstream note;
  const char* names[] = {"l in [sqrt18, 5]", "l in [5, 5.6]", "l in [5.6, 6.8]", "l in [6.8, k]"};
  for (size_t b = 0; b < branches.size(); ++b) {
    const auto& br = branches[b];
    double start = std::max(br.l_range.lo(), b == 0 ? l_min.lo() : br.l_range.lo());
    const double stop = br.l_range.hi();
    bool branch_ok = true;
    double branch_worst = INFINITY;
    std::vector<std::pair<Interval, int>> stack;
    // Initial cells grow with l; the bound flattens for large l.
    for (double a = start; a < stop;) {
      const double w = std::max(0.05, a / 40.0);
      const double b_end = std::min(stop, a + w);
      stack.push_back({Interval(a, b_end), 0});
      a = b_end;
    }
    std::reverse(stack.begin(), stack.end());
    while (!stack.empty() && branch_ok) {
      auto [cell, depth] = stack.back();
      stack.pop_back();
      const double phi = std::min(phi_lower(k, cell, br.phi_lower), 0.0);
      const double r = remainder_on_cell(k, cell);
      const double bound = (scale * (Interval(phi) - Interval(r))).lo();
      if (bound > target) {
        branch_worst = std::min(branch_worst, bound);
        continue;
      }
      if (depth >= 30) {
        branch_ok = false;
        note << names[b] << " fails on l-cell " << cell.str() << " (bound " << bound << "); ";
        break;
      }
      const double mid = cell.mid();
      stack.push_back({Interval(mid, cell.hi()), depth + 1});
      stack.push_back({Interval(cell.lo(), mid), depth + 1});
    }
    v.parts.push_back({names[b], branch_ok});
    worst = std::min(worst, branch_worst);
  }
  v.pass = all_parts(v);
  v.witness = Interval(std::isfinite(worst) ? worst : target, 0.0);
  note << "worst cell bound " << worst;
  v.detail = note.str();
  return v;
}

LemmaVerdict verify_minimum(int k) {
  return k <= kExactLimit ? verify_minimum_direct(k) : verify_minimum_asymptotic(k);
}

LemmaVerdict verify_tail_zero_bound(int k) {
  if (k < 6) throw std::invalid_argument("verify_tail_zero_bound: need k >= 6");
  const bool exact = k <= kExactLimit;
  LemmaVerdict v = make(LemmaId::kTailZero, k, exact ? Method::kExactRoots : Method::kAsymptotic);
  const Rat bound = Rat(1) - Rat(91, 10) / Rat(static_cast<long>(k) * k);
  v.witness = zero_bound_closed_form(k - 2, HalfInt(7));
  v.parts.push_back({"closed form", v.witness.hi() <= enclose_rat(bound).lo()});
  if (exact) {
    const RatPoly& p = gegenbauer(HalfInt(7), k - 2);
    v.root = refine_root(p, largest_root(p), Rat(1, 1000000));
    v.parts.push_back({"largest zero", count_real_roots(p, bound, Rat(1)) == 0});
  }
  v.pass = all_parts(v);
  return v;
}

LemmaVerdict verify_zero_bound(int n, HalfInt nu) {
  LemmaVerdict v = make(LemmaId::kZeroBound, n, n <= 60 ? Method::kExactRoots : Method::kAsymptotic);
  v.witness = zero_bound_closed_form(n, nu);
  if (n == 2) {
    // Equality case: both sides square to 1/(2(nu+1)); compare squares exactly.
    const RatPoly& p = gegenbauer(nu, n);
    const Rat v0 = nu.value();
    const Rat bound_sq = Rat(2) / (Rat(4) * (Rat(1) + v0));
    v.root = largest_root(p);
    v.pass = -p.coeff(0) / p.coeff(2) <= bound_sq;
    v.parts.push_back({"largest zero below closed form", v.pass});
  } else if (n <= 60) {
    const RatPoly& p = gegenbauer(nu, n);
    const RootEnclosure r = largest_root(p);
    const Rat cut(mpq_class(v.witness.lo()));
    v.root = r;
    v.pass = count_real_roots(p, cut, Rat(1)) == 0;
    v.parts.push_back({"largest zero below closed form", v.pass});
  } else {
    v.pass = v.witness.hi() < 1.0;
    v.parts.push_back({"closed form below 1", v.pass});
  }
  return v;
}

LemmaVerdict verify_point_bound(int k) {
  if (k < 6) throw std::invalid_argument("verify_point_bound: need k >= 6");
  if (k <= kExactLimit) {
    LemmaVerdict v = make(LemmaId::kPointValue, k, Method::kExactRoots);
    const Rat value = scaled_derivative(k)(point_location(k));
    v.witness = enclose_rat(value);
    v.pass = point_lo() <= value && value <= point_hi();
    v.parts.push_back({"value in [0.081, 0.11]", v.pass});
    v.detail = "value " + value.decimal(12);
    return v;
  }
  LemmaVerdict v = make(LemmaId::kPointValue, k, Method::kAsymptotic);
  const Rat half_gap = Rat(5) / lambda_of(k);
  const Interval zeta = Interval(2.0) * asin(sqrt(enclose_rat(half_gap)));
  v.witness = scaled_derivative_asymptotic(k, zeta);
  v.parts.push_back({"enclosure in [0.081, 0.11]",
                     v.witness.lo() >= enclose_rat(point_lo()).hi() &&
                         v.witness.hi() <= enclose_rat(point_hi()).lo()});

  const Interval kk(static_cast<double>(k));
  const Interval root5 = sqrt(Interval(5.0));
  const Interval upper = Interval(2.0) * root5 / kk;
  const Interval lower = upper - Interval(3.0) * root5 / (kk * kk);
  v.parts.push_back({"angle window", lower.hi() < zeta.lo() && zeta.hi() < upper.lo()});

  const Interval tail_rem = enclose_rat(Rat(105, 128)) * gamma_ratio({k, 9}) / half_power(lower, 9) /
                       enclose_rat(point_location(k));
  v.parts.push_back({"remainder <= 0.001", tail_rem.hi() <= 0.001});

  const Interval pi = pi_interval();
  const Interval p0 = (Interval(k + 1.5) * zeta - Interval(1.25) * pi) / pi;
  const Interval p1 = (Interval(k + 1.5) * zeta - Interval(0.75) * pi) / pi;
  std::ostringstream note;
  note << "phase windows / pi: " << p0.str() << ", " << p1.str();
  v.detail = note.str();
  v.pass = all_parts(v);
  return v;
}

LemmaVerdict verify_plateau(int k, const LemmaVerdict* minimum) {
  if (k < 6) throw std::invalid_argument("verify_plateau: need k >= 6");
  const bool exact = k <= kExactLimit;
  LemmaVerdict point = verify_point_bound(k);
  LemmaVerdict v = make(LemmaId::kPlateau, k, point.method);
  v.witness = point.witness;
  v.parts.push_back({"(a) point bound", point.pass});
  const Rat xs = point_location(k);
  const RatPoly& f = scaled_derivative(k);

  if (exact) {
    v.parts.push_back({"(b) plateau", certify_upper_bound(f, Rat(0), xs, point_hi())});
    if (count_real_roots(gegenbauer(HalfInt(7), k - 2), xs, Rat(1)) != 0) {
      throw VerificationError(ErrorKind::kConvexityPremiseFailed,
                              "largest critical point right of 1 - 10/lambda_k at k = " + std::to_string(k));
    }
    v.parts.push_back({"(c) chord", certify_upper_bound(f - chord(k), xs, Rat(1), Rat(0))});
  } else {
    LemmaVerdict own;
    if (minimum == nullptr || minimum->k != k) {
      own = verify_minimum(k);
      minimum = &own;
    }
    const double plateau = std::max(-minimum->witness.lo(), point.witness.hi());
    v.parts.push_back({"(b) plateau",
                       minimum->pass && point.pass && plateau <= enclose_rat(point_hi()).lo()});
    if (zero_bound_closed_form(k - 3, HalfInt(9)).hi() > enclose_rat(xs).lo()) {
      throw VerificationError(ErrorKind::kConvexityPremiseFailed,
                              "convexity premise fails at k = " + std::to_string(k));
    }
    // Convex on [x*, 1] with value <= 0.11 at x* and 1 at x = 1.
    v.parts.push_back({"(c) chord", point.pass});
  }
  v.pass = all_parts(v);
  v.detail = point.detail;
  return v;
}

LemmaVerdict verify_extrema_structure(int k) {
  if (k < 2 || k > 30) throw std::invalid_argument("verify_extrema_structure: need 2 <= k <= 30");
  LemmaVerdict v = make(LemmaId::kExtremaChain, k, Method::kExactRoots);
  const RatPoly& p = gegenbauer(HalfInt(5), k);
  const RatPoly& q = gegenbauer(HalfInt(7), k - 1);

  std::vector<RootEnclosure> crit = isolate_real_roots(q, Rat(-1), Rat(1), SquarefreeMode::kStrict);
  const bool same_critical =
      poly_derivative(p) == q * Rat(5) && static_cast<int>(crit.size()) == k - 1 &&
      !q(Rat(-1)).is_zero() && !q(Rat(1)).is_zero();
  v.parts.push_back({"(a) critical points", same_critical});

  // |p| at 1 and at the critical points, walking inward from x = 1.
  std::reverse(crit.begin(), crit.end());
  const int last = k / 2;
  auto abs_range = [&](const RootEnclosure& e) {
    RatRange r = e.exact() ? RatRange{p(e.lo), p(e.lo)} : taylor_range(p, e.lo, e.hi);
    if (r.lo.sign() >= 0) return r;
    if (r.hi.sign() <= 0) return RatRange{-r.hi, -r.lo};
    return RatRange{Rat(0), max(-r.lo, r.hi)};
  };
  bool ordered = same_critical;
  Rat width(1, 1000);
  for (int round = 0; round < 40 && ordered; ++round) {
    std::vector<RatRange> vals{{abs(p(Rat(1))), abs(p(Rat(1)))}};
    for (int j = 1; j <= last; ++j) vals.push_back(abs_range(crit[static_cast<size_t>(j - 1)]));
    bool separated = true;
    for (size_t j = 0; j + 1 < vals.size(); ++j) separated &= vals[j].lo > vals[j + 1].hi;
    if (separated) {
      if (vals.size() > 1) v.witness = range_interval(vals[1]);
      break;
    }
    if (round == 39) ordered = false;
    width /= Rat(16);
    for (int j = 0; j < last; ++j) {
      crit[static_cast<size_t>(j)] = refine_root(q, crit[static_cast<size_t>(j)], width);
    }
  }
  v.parts.push_back({"(b) maxima decrease inward", ordered});

  const RootEnclosure z = refine_root(p, largest_root(p), Rat(1, 1000000));
  v.root = z;
  bool positive = true;
  RatPoly d = p;
  for (int j = 1; j <= k && positive; ++j) {
    d = poly_derivative(d);
    positive = d(z.lo).sign() > 0;
  }
  v.parts.push_back({"(c) derivatives positive right of largest zero", positive});
  v.pass = all_parts(v);
  return v;
}

std::vector<FigureRow> figure_data(int k, const Rat& x_lo, const Rat& x_hi, int samples) {
  if (samples < 2) throw std::invalid_argument("figure_data: samples must be >= 2");
  if (!(x_lo < x_hi)) throw std::invalid_argument("figure_data: empty range");
  const RatPoly& f = scaled_derivative(k);
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<size_t>(samples));
  const Rat step = (x_hi - x_lo) / Rat(samples - 1);
  for (int i = 0; i < samples; ++i) {
    Rat x = i == samples - 1 ? x_hi : x_lo + step * Rat(i);
    rows.push_back({x, f(x)});
  }
  return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::string out = "x,value\n";
  for (const auto& r : rows) out += r.x.decimal(12) + "," + r.value.decimal(12) + "\n";
  return out;
}

}  // namespace gegencert
