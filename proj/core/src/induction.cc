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

#include "gegencert/induction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "gegencert/errors.hpp"
#include "gegencert/gegenbauer.hpp"
#include "gegencert/roots.hpp"
#include "parallel.hpp"

namespace gegencert {

namespace {

Rat dec(const char* s) { return Rat::parse(s); }

const Rat& c_dip() {
  static const Rat v = dec("0.081");
  return v;
}
const Rat& c_rise() {
  static const Rat v = dec("0.919");
  return v;
}
const Rat& c_curv() {
  static const Rat v = dec("0.089");
  return v;
}
const Rat& c_curv2() {
  static const Rat v = dec("0.178");
  return v;
}
const Rat& c_half_cut() {
  static const Rat v = dec("0.445");
  return v;
}

void check_alpha(const Rat& alpha) {
  if (alpha < Rat(1, 2) || alpha >= Rat(1)) {
    throw VerificationError(ErrorKind::kAlphaOutOfRange,
                            "alpha " + alpha.str() + " outside [1/2, 1)");
  }
}

// lambda_j for the weighted sums: j = 2m (odd i) or 2m+1 (even i).
int sum_index(int i, int m) { return i % 2 == 1 ? 2 * m : 2 * m + 1; }

Interval rat_iv(const Rat& r) { return enclose_rat(r); }

CheckOutcome outcome(bool pass, Interval value, std::string detail = {}) {
  return {pass ? CheckStatus::kPass : CheckStatus::kFail, value, std::move(detail)};
}

Interval range_iv(const RatRange& r) {
  return hull(rat_iv(r.lo), rat_iv(r.hi));
}

// Decides max p < 0 on [lo, hi]; kInconclusive when neither a violation
// nor a certificate is reached.
CheckOutcome certify_negative(const RatPoly& p, const Rat& lo, const Rat& hi) {
  RatRange r = certified_max_on_interval(p, lo, hi, Rat(1, 1000000));
  if (certify_upper_bound(p, lo, hi, Rat(0), true)) return outcome(true, range_iv(r));
  if (r.lo >= Rat(0)) return outcome(false, range_iv(r), "maximum is nonnegative");
  return {CheckStatus::kInconclusive, range_iv(r), "maximum straddles zero"};
}

}  // namespace

Interval AlphaCell::interval() const {
  return hull(enclose_rat(lo), enclose_rat(hi));
}

std::string AlphaCell::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

std::vector<AlphaCell> alpha_cells(const Rat& lo, const Rat& hi, int cells) {
  check_alpha(lo);
  check_alpha(hi);
  if (hi < lo || cells < 1) {
    throw VerificationError(ErrorKind::kAlphaOutOfRange, "empty alpha range");
  }
  std::vector<AlphaCell> out;
  Rat step = (hi - lo) / Rat(cells);
  for (int i = 0; i < cells; ++i) {
    AlphaCell c;
    c.lo = lo + step * Rat(i);
    c.hi = i + 1 == cells ? hi : lo + step * Rat(i + 1);
    out.push_back(c);
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

Rat beta_lower(const Rat& alpha) {
  check_alpha(alpha);
  Rat u = Rat(1) / alpha;
  return Rat(16, 13) * (Rat(1) - u / Rat(3)) * (Rat(5) - u);
}

Interval gap_from_beta(const AlphaCell& cell) {
  check_alpha(cell.lo);
  check_alpha(cell.hi);
  // alpha * beta_lower = (16/13)(5 alpha - 8/3 + 1/(3 alpha)) increases on
  // [1/2, 1), so the gap bound is extremal at the cell endpoints.
  auto gap = [](const Rat& al) {
    return Rat(4, 5) * (Rat(1) - al * beta_lower(al));
  };
  return hull(enclose_rat(gap(cell.hi)), enclose_rat(gap(cell.lo)));
}

Rat weighted_sum_direct(int i, int n, const Rat& alpha) {
  if (i < 1 || i > 6 || n < 0) throw std::invalid_argument("weighted_sum_direct: bad index");
  Rat u = Rat(1) / alpha;
  Rat top = lambda_of(2 * n + 2);
  int p = (i - 1) / 2;
  Rat s;
  for (int m = 1; m <= n; ++m) {
    int j = sum_index(i, m);
    Rat lj = lambda_of(j);
    s += (top - lj + Rat(4, 15) * u) * Rat(2 * j + 3) * pow(lj, p);
  }
  return s;
}

Rat weighted_sum_closed(int i, int n, const Rat& alpha) {
  Rat u = Rat(1) / alpha;
  Rat x(n);
  auto poly = [&](std::initializer_list<Rat> c) {
    // c holds coefficients from degree 1 upwards
    Rat s, xp = x;
    for (const Rat& v : c) {
      s += v * xp;
      xp *= x;
    }
    return s;
  };
  switch (i) {
    case 1:
      return poly({Rat(4, 3) * u + Rat(35), Rat(8, 15) * u + Rat(59), Rat(28), Rat(4)});
    case 2:
      return poly({Rat(28, 15) * u + Rat(7), Rat(8, 15) * u + Rat(51), Rat(28), Rat(4)});
    case 3:
      return poly({Rat(4) * u + Rat(140), Rat(124, 15) * u + Rat(1198, 3),
                   Rat(16, 3) * u + Rat(434), Rat(16, 15) * u + Rat(676, 3), Rat(56),
                   Rat(16, 3)});
    case 4:
      return poly({Rat(84, 5) * u + Rat(168), Rat(268, 15) * u + Rat(1810, 3),
                   Rat(112, 15) * u + Rat(546), Rat(16, 15) * u + Rat(724, 3), Rat(56),
                   Rat(16, 3)});
    case 5:
      return poly({Rat(8, 3) * u + Rat(140), Rat(1448, 45) * u + Rat(4138, 3),
                   Rat(208, 3) * u + Rat(10528, 3), Rat(2624, 45) * u + Rat(4062),
                   Rat(64, 3) * u + Rat(7504, 3), Rat(128, 45) * u + Rat(848), Rat(448, 3),
                   Rat(32, 3)});
    case 6:
      return poly({Rat(616, 5) * u + Rat(1932), Rat(11384, 45) * u + Rat(20962, 3),
                   Rat(1232, 5) * u + Rat(27496, 3), Rat(5504, 45) * u + Rat(6830),
                   Rat(448, 15) * u + Rat(9520, 3), Rat(128, 45) * u + Rat(912), Rat(448, 3),
                   Rat(32, 3)});
    default:
      throw std::invalid_argument("weighted_sum_closed: bad index");
  }
}

Rat spectral_sum(const Rat& lambda, const Rat& a, const Rat& alpha, int n) {
  Rat u = Rat(1) / alpha;
  Rat top = lambda_of(n + 1);
  Rat c = c_dip() + c_rise() * lambda;
  Rat q = Rat(2) * lambda * lambda - Rat(2) * lambda + Rat(1);
  Rat s;
  for (int k = 2; k <= n; ++k) {
    Rat lk = lambda_of(k);
    Rat ratio = k % 2 == 0 ? c - c_curv() * lambda * lambda * lk * a
                           : Rat(1) - c_curv() * lk * q * a;
    s += (top - lk + Rat(4, 15) * u) * Rat(2 * k + 3) * ratio * ratio;
  }
  return s;
}

Rat spectral_sum_from_sums(const Rat& lambda, const Rat& a, const Rat& alpha, int m) {
  Rat c = c_dip() + c_rise() * lambda;
  Rat q = Rat(2) * lambda * lambda - Rat(2) * lambda + Rat(1);
  Rat l2 = lambda * lambda;
  Rat d2 = c_curv() * c_curv();
  return c * c * weighted_sum_closed(1, m, alpha) + weighted_sum_closed(2, m, alpha) -
         c_curv2() * l2 * c * a * weighted_sum_closed(3, m, alpha) -
         c_curv2() * q * a * weighted_sum_closed(4, m, alpha) +
         d2 * l2 * l2 * a * a * weighted_sum_closed(5, m, alpha) +
         d2 * q * q * a * a * weighted_sum_closed(6, m, alpha);
}

StepTables::StepTables(int n) : n_(n), next_(lambda_of(n + 1)) {
  if (n < 2) throw std::invalid_argument("StepTables: n >= 2 required");
  a_lo_ = Rat(5) / next_;
  a_hi_ = Rat(5) / lambda_of(n);
  // w_k = (lambda_{n+1} - lambda_k)(2k+3) + u (4/15)(2k+3); integer base
  // parts are accumulated in mpz, the u parts share the denominator 15.
  mpz_class base[2][3], slope[2][3];
  mpz_class top = next_.num();
  for (int k = 2; k <= n; ++k) {
    mpz_class lk = static_cast<long>(k) * (k + 3);
    mpz_class wt = 2L * k + 3;
    mpz_class b = (top - lk) * wt;
    mpz_class s = 4 * wt;
    int par = k % 2;
    for (int p = 0; p < 3; ++p) {
      base[par][p] += b;
      slope[par][p] += s;
      b *= lk;
      s *= lk;
    }
  }
  for (int par = 0; par < 2; ++par) {
    for (int p = 0; p < 3; ++p) {
      base_[par][p] = Rat(base[par][p], mpz_class(1));
      slope_[par][p] = Rat(slope[par][p], mpz_class(15));
    }
  }
}

Rat StepTables::weight_sum(bool odd, int p, const Rat& u) const {
  return base_[odd][p] + slope_[odd][p] * u;
}

Interval StepTables::weight_sum(bool odd, int p, const Interval& u) const {
  return enclose_rat(base_[odd][p]) + enclose_rat(slope_[odd][p]) * u;
}

Rat StepTables::spectral_value(const Rat& lambda, const Rat& a, const Rat& u) const {
  Rat c = c_dip() + c_rise() * lambda;
  Rat q = Rat(2) * lambda * lambda - Rat(2) * lambda + Rat(1);
  Rat l2 = lambda * lambda;
  Rat d2 = c_curv() * c_curv();
  return c * c * weight_sum(false, 0, u) - c_curv2() * c * l2 * a * weight_sum(false, 1, u) +
         d2 * l2 * l2 * a * a * weight_sum(false, 2, u) + weight_sum(true, 0, u) -
         c_curv2() * q * a * weight_sum(true, 1, u) + d2 * q * q * a * a * weight_sum(true, 2, u);
}

Rat StepTables::majorant_sum(const Rat& u) const {
  Rat s0 = weight_sum(false, 0, u) + weight_sum(true, 0, u);
  Rat s1 = weight_sum(false, 1, u) + weight_sum(true, 1, u);
  Rat s2 = weight_sum(false, 2, u) + weight_sum(true, 2, u);
  Rat r = c_half_cut() / next_;
  return s0 - Rat(2) * r * s1 + r * r * s2;
}

namespace {

// f_n(lambda) - f_n(1) at fixed (a, u) as a polynomial in lambda, scaled to
// integer coefficients.
std::vector<mpz_class> grid_polynomial(const StepTables& t, const Rat& a, const Rat& u) {
  RatPoly lam = RatPoly::identity();
  RatPoly c = RatPoly::constant(c_dip()) + lam * c_rise();
  RatPoly l2 = lam * lam;
  RatPoly q = l2 * Rat(2) - lam * Rat(2) + RatPoly::constant(Rat(1));
  Rat d2 = c_curv() * c_curv();
  RatPoly f = c * c * t.weight_sum(false, 0, u) -
              c * l2 * (c_curv2() * a * t.weight_sum(false, 1, u)) +
              l2 * l2 * (d2 * a * a * t.weight_sum(false, 2, u)) +
              RatPoly::constant(t.weight_sum(true, 0, u)) -
              q * (c_curv2() * a * t.weight_sum(true, 1, u)) +
              q * q * (d2 * a * a * t.weight_sum(true, 2, u));
  f -= RatPoly::constant(f(Rat(1)));
  mpz_class den = 1;
  for (const Rat& v : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.den().get_mpz_t());
  std::vector<mpz_class> out;
  for (const Rat& v : f.coeffs()) out.push_back(v.num() * (den / v.den()));
  return out;
}

Interval derivative_enclosure(const StepTables& t, const Interval& lam, const Interval& a,
                              const Interval& u) {
  static const Interval k1838 = enclose_rat(dec("1.838"));
  static const Interval k0178 = enclose_rat(c_curv2());
  static const Interval k0162 = enclose_rat(dec("0.162"));
  static const Interval k2757 = enclose_rat(dec("2.757"));
  static const Interval kSq = enclose_rat(c_curv2() * c_curv2());
  static const Interval kDip = enclose_rat(c_dip());
  static const Interval kRise = enclose_rat(c_rise());
  Interval c = kDip + kRise * lam;
  Interval l2 = lam * lam;
  Interval l3 = l2 * lam;
  Interval cubic = Interval(4.0) * l3 - Interval(6.0) * l2 + Interval(4.0) * lam - Interval(1.0);
  Interval a2 = a * a;
  return k1838 * c * t.weight_sum(false, 0, u) -
         k0178 * a * (k0162 * lam + k2757 * l2) * t.weight_sum(false, 1, u) +
         kSq * l3 * a2 * t.weight_sum(false, 2, u) -
         k0178 * (Interval(4.0) * lam - Interval(2.0)) * a * t.weight_sum(true, 1, u) +
         kSq * cubic * a2 * t.weight_sum(true, 2, u);
}

}  // namespace

CheckOutcome verify_f_monotone(const StepTables& t, const AlphaCell& cell) {
  constexpr long kGrid = 200;
  constexpr int kMaxSplits = 8;
  // (i) exact comparison on the grid at the corners of the (a, u) box.
  for (const Rat& a : {t.a_lo(), t.a_hi()}) {
    for (const Rat& u : {cell.u_lo(), cell.u_hi()}) {
      std::vector<mpz_class> d = grid_polynomial(t, a, u);
      int deg = static_cast<int>(d.size()) - 1;
      for (long j = kGrid / 2; j <= kGrid; ++j) {
        // kGrid^deg * D(j / kGrid) by homogeneous Horner.
        mpz_class acc = d[deg];
        mpz_class pw = 1;
        for (int i = deg - 1; i >= 0; --i) {
          pw *= kGrid;
          acc = acc * j + d[i] * pw;
        }
        if (sgn(acc) > 0) {
          std::ostringstream os;
          os << "f_n(" << Rat(j, kGrid).str() << ") > f_n(1) at a = " << a.str()
             << ", 1/alpha = " << u.str();
          return outcome(false, Interval(0.0), os.str());
        }
      }
    }
  }
  // (ii) derivative enclosure over each grid cell, bisecting lambda and a
  // where the enclosure is too wide.
  Interval u = hull(enclose_rat(cell.u_lo()), enclose_rat(cell.u_hi()));
  struct Box {
    Rat l_lo, l_hi, a_lo, a_hi;
    int depth;
  };
  double worst = 0.0;
  bool first = true;
  for (long j = kGrid / 2; j < kGrid; ++j) {
    std::vector<Box> stack{{Rat(j, kGrid), Rat(j + 1, kGrid), t.a_lo(), t.a_hi(), 0}};
    while (!stack.empty()) {
      Box bx = stack.back();
      stack.pop_back();
      Interval lam = hull(enclose_rat(bx.l_lo), enclose_rat(bx.l_hi));
      Interval a = hull(enclose_rat(bx.a_lo), enclose_rat(bx.a_hi));
      Interval d = derivative_enclosure(t, lam, a, u);
      if (d.certainly_positive()) {
        // Normalized by n^4 so that records stay comparable across steps.
        double scaled = d.lo() / std::pow(static_cast<double>(t.n()), 4);
        worst = first ? scaled : std::min(worst, scaled);
        first = false;
        continue;
      }
      if (bx.depth >= kMaxSplits) {
        std::ostringstream os;
        os << "derivative not certified positive on lambda in " << lam.str() << ", a in "
           << a.str();
        return outcome(false, d, os.str());
      }
      Rat lm = (bx.l_lo + bx.l_hi) / Rat(2);
      Rat am = (bx.a_lo + bx.a_hi) / Rat(2);
      for (int q = 0; q < 4; ++q) {
        stack.push_back({q & 1 ? lm : bx.l_lo, q & 1 ? bx.l_hi : lm, q & 2 ? am : bx.a_lo,
                         q & 2 ? bx.a_hi : am, bx.depth + 1});
      }
    }
  }
  return outcome(true, Interval(worst));
}

CheckOutcome verify_f_monotone(int n, const AlphaCell& cell) {
  return verify_f_monotone(StepTables(n), cell);
}

Rat quartic_majorant_final(int n, const Rat& shift) {
  Rat x(n);
  Rat top = lambda_of(n + 1);
  return dec("0.37") * pow(x, 4) + dec("3.7") * pow(x, 3) + dec("5.74") * x * x -
         dec("17.62") * x + dec("15.2") + shift / top + Rat(56) / (top * top);
}

Rat quartic_majorant_intermediate(int n, const Rat& u) {
  Rat x(n);
  Rat top = lambda_of(n + 1);
  return dec("0.37") * pow(x, 4) + dec("0.37") * pow(x, 3) +
         (dec("0.166") * u + dec("5.4")) * x * x + (dec("0.75") * u - dec("19.12")) * x -
         (dec("1.35") * u - dec("17.8")) - (dec("5.75") * u - Rat(101)) / top -
         (dec("0.46") * u - dec("7.05")) * Rat(2 * n * n + 10 * n + 17) / (top * top);
}

MajorantOutcome quartic_majorant_check(const StepTables& t, const AlphaCell& cell) {
  // Both sides are affine in u, so the cell endpoints decide.
  Rat fin = quartic_majorant_final(t.n());
  Rat worst_final, worst_mid;
  bool first = true;
  for (const Rat& u : {cell.u_lo(), cell.u_hi()}) {
    Rat s = t.majorant_sum(u);
    Rat gf = s - fin;
    Rat gm = s - quartic_majorant_intermediate(t.n(), u);
    if (first || gf > worst_final) worst_final = gf;
    if (first || gm > worst_mid) worst_mid = gm;
    first = false;
  }
  MajorantOutcome out;
  out.final_line = outcome(worst_final <= Rat(0), enclose_rat(worst_final),
                           worst_final <= Rat(0) ? "" : "sum exceeds the quartic majorant");
  out.intermediate_line =
      outcome(worst_mid <= Rat(0), enclose_rat(worst_mid),
              worst_mid <= Rat(0) ? "" : "sum exceeds the alpha-dependent majorant");
  return out;
}

MajorantOutcome quartic_majorant_check(int n, const AlphaCell& cell) {
  return quartic_majorant_check(StepTables(n), cell);
}

namespace {

struct GapParts {
  // In u: X = 3 lambda' - 12 + 32u/5, P = -8u^2/3 + 136u/3 - 60.
  RatPoly x, p;
  Rat shape;     // (1 - 89/(20 lambda'))^2
  Rat majorant;  // final quartic line with 101.4
};

GapParts gap_parts(int n) {
  Rat top = lambda_of(n + 1);
  GapParts g;
  g.x = RatPoly({Rat(3) * top - Rat(12), Rat(32, 5)});
  g.p = RatPoly({Rat(-60), Rat(136, 3), Rat(-8, 3)});
  Rat s = Rat(1) - Rat(89, 20) / top;
  g.shape = s * s;
  g.majorant = quartic_majorant_final(n, dec("101.4"));
  return g;
}

}  // namespace

SpectralGapInequality gap_quadratic(const Interval& alpha, int n) {
  GapParts g = gap_parts(n);
  Interval u = Interval(1.0) / alpha;
  Interval u2 = u * u;
  auto ev = [&](const RatPoly& p) {
    Interval s(0.0);
    for (int i = p.degree(); i >= 0; --i) s = s * u + enclose_rat(p.coeff(i));
    return s;
  };
  Interval x = ev(g.x), p = ev(g.p);
  SpectralGapInequality h;
  h.alpha = alpha;
  h.n = n;
  h.c2 = enclose_rat(Rat(5, 6)) * u2 * x + enclose_rat(Rat(28, 15) * g.shape) * u2 +
         enclose_rat(g.majorant / Rat(2)) * u2;
  h.c1 = -(enclose_rat(Rat(2, 3)) * u * p + enclose_rat(Rat(2, 3)) * u2 * x);
  h.c0 = enclose_rat(Rat(8, 15)) * u * p;
  if (!h.c2.certainly_positive()) {
    throw VerificationError(ErrorKind::kConvexityLost,
                            "leading coefficient not positive at n = " + std::to_string(n));
  }
  return h;
}

RatPoly gap_quadratic_in_u(int n, const Rat& a, bool corrected) {
  GapParts g = gap_parts(n);
  RatPoly u = RatPoly::identity();
  RatPoly u2 = u * u;
  RatPoly c2 = u2 * g.x * Rat(5, 6) + (corrected ? u2 * u : u2) * (Rat(28, 15) * g.shape) +
               u2 * (g.majorant / Rat(2));
  RatPoly c1 = -(u * g.p * Rat(2, 3) + u2 * g.x * Rat(2, 3));
  RatPoly c0 = u * g.p * Rat(8, 15);
  return c2 * (a * a) + c1 * a + c0;
}

RatPoly gap_leading_in_u(int n) {
  Rat top = lambda_of(n + 1);
  Rat x(n);
  RatPoly u = RatPoly::identity();
  RatPoly u2 = u * u;
  GapParts g = gap_parts(n);
  return u2 * (Rat(37, 8) * pow(x, 4) / (top * top) - Rat(10)) + u * g.p * Rat(8, 15);
}

namespace {

CheckOutcome h_negativity_cell(int n, const AlphaCell& cell, bool corrected) {
  CheckOutcome worst;
  bool first = true;
  for (const Rat& a : {Rat(5) / lambda_of(n + 1), Rat(5) / lambda_of(n)}) {
    CheckOutcome o = certify_negative(gap_quadratic_in_u(n, a, corrected), cell.u_lo(), cell.u_hi());
    if (!o.pass()) {
      o.detail += " at a = " + a.str();
      return o;
    }
    if (first || o.value.hi() > worst.value.hi()) worst = o;
    first = false;
  }
  return worst;
}

}  // namespace

CheckOutcome verify_h_negativity(int n, const AlphaCell& cell, bool corrected) {
  if (n < 3) throw std::invalid_argument("verify_h_negativity: n >= 3 required");
  CheckOutcome o = h_negativity_cell(n, cell, corrected);
  if (o.status != CheckStatus::kInconclusive) return o;
  Rat mid = (cell.lo + cell.hi) / Rat(2);
  CheckOutcome left = h_negativity_cell(n, AlphaCell{cell.lo, mid}, corrected);
  CheckOutcome right = h_negativity_cell(n, AlphaCell{mid, cell.hi}, corrected);
  if (!left.pass()) return left;
  if (!right.pass()) return right;
  return outcome(true, hull(left.value, right.value), "after one subdivision");
}

CheckOutcome verify_leading_term(int n, const AlphaCell& cell) {
  RatPoly p = gap_leading_in_u(n) + RatPoly::constant(Rat(1, 6));
  CheckOutcome o = certify_negative(p, cell.u_lo(), cell.u_hi());
  o.value = o.value - enclose_rat(Rat(1, 6));
  return o;
}

namespace {

// Upper bound of RHS - LHS of the n = 3 inequality on an (a, alpha) box.
Interval base_gap(const Interval& a, const Interval& alpha) {
  Interval u = Interval(1.0) / alpha;
  Interval rest = Interval(4.0) - Interval(5.0) * a;
  Interval lhs = a * rest * (Interval(72.0) + enclose_rat(Rat(32, 5)) * u);
  // (4u/15)(-8 + 556 alpha - 1020 alpha^2) with u alpha = 1 cancelled.
  Interval first = enclose_rat(Rat(4, 15)) * rest *
                   (Interval(556.0) - Interval(8.0) * u - Interval(1020.0) * alpha);
  Interval a2 = a * a;
  Interval second_sq = a2 * (Interval(1.0) - a) / (Interval(1.0) + a);
  Interval third = max(a - enclose_rat(Rat(7, 6)) * a2 / (a + Interval(1.0)), a / Interval(6.0));
  Interval third_sq = third * third;
  Interval w = enclose_rat(Rat(4, 15)) * u;
  Interval sums = enclose_rat(Rat(8 * 21, 15)) * u * second_sq +
                  (Interval(18.0) + w) * Interval(21.0) * second_sq +
                  (Interval(10.0) + w) * Interval(27.0) * third_sq;
  return first + sums - lhs;
}

}  // namespace

CheckOutcome base_case_n3(const AlphaCell& cell) {
  check_alpha(cell.lo);
  check_alpha(cell.hi);
  struct Box {
    Rat a_lo, a_hi, al_lo, al_hi;
    int depth;
  };
  std::vector<Box> stack{{Rat(1, 8), Rat(31, 100), cell.lo, cell.hi, 0}};
  double worst = -1e300;
  long boxes = 0;
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    ++boxes;
    Interval a = hull(enclose_rat(b.a_lo), enclose_rat(b.a_hi));
    Interval al = hull(enclose_rat(b.al_lo), enclose_rat(b.al_hi));
    Interval g = base_gap(a, al);
    if (g.certainly_negative()) {
      worst = std::max(worst, g.hi());
      continue;
    }
    if (b.depth >= 40) {
      std::ostringstream os;
      os << "not separated on a in [" << b.a_lo.str() << ", " << b.a_hi.str() << "]";
      Interval point = base_gap(enclose_rat(b.a_lo), enclose_rat(b.al_lo));
      if (point.lo() >= 0.0) return outcome(false, g, os.str());
      return {CheckStatus::kInconclusive, g, os.str()};
    }
    Rat am = (b.a_lo + b.a_hi) / Rat(2);
    if (b.al_hi - b.al_lo > (b.a_hi - b.a_lo) * Rat(4)) {
      Rat m = (b.al_lo + b.al_hi) / Rat(2);
      stack.push_back({b.a_lo, b.a_hi, b.al_lo, m, b.depth + 1});
      stack.push_back({b.a_lo, b.a_hi, m, b.al_hi, b.depth + 1});
    } else {
      stack.push_back({b.a_lo, am, b.al_lo, b.al_hi, b.depth + 1});
      stack.push_back({am, b.a_hi, b.al_lo, b.al_hi, b.depth + 1});
    }
  }
  return outcome(true, Interval(worst), std::to_string(boxes) + " boxes");
}

namespace {

void log_step(std::vector<StepRecord>* log, const char* check, int n, const CheckOutcome& o) {
  if (log) log->push_back({check, n, o});
}

// Runs step n for one cell. Returns the first failing outcome, if any.
bool run_step(const StepTables& t, const AlphaCell& cell, std::vector<StepRecord>* log,
              InductionState& st) {
  int n = t.n();
  auto fail = [&](const CheckOutcome& o, const char* what) {
    st.holds = false;
    st.failed_at = n;
    st.failure = o.status;
    st.diagnostics = std::string(what) + ": " + o.detail;
    return false;
  };
  if (st.a_bound <= t.a_lo()) {
    // The hypothesis range lies above what earlier levels already exclude.
    CheckOutcome v = outcome(true, enclose_rat(st.a_bound),
                             "vacuous: a < " + st.a_bound.str() + " already certified");
    log_step(log, "vacuous step", n, v);
    return true;
  }
  CheckOutcome mono = verify_f_monotone(t, cell);
  log_step(log, "spectral sum monotone", n, mono);
  if (!mono.pass()) return fail(mono, "spectral sum monotone");
  MajorantOutcome maj = quartic_majorant_check(t, cell);
  log_step(log, "quartic majorant", n, maj.final_line);
  log_step(log, "quartic majorant (alpha-dependent line)", n, maj.intermediate_line);
  if (!maj.final_line.pass()) return fail(maj.final_line, "quartic majorant");
  CheckOutcome conv;
  try {
    SpectralGapInequality h = gap_quadratic(cell.interval(), n);
    conv = outcome(true, h.c2);
  } catch (const VerificationError& e) {
    conv = outcome(false, Interval(0.0), e.what());
  }
  log_step(log, "gap quadratic convex", n, conv);
  if (!conv.pass()) return fail(conv, "gap quadratic convex");
  CheckOutcome neg = verify_h_negativity(n, cell);
  log_step(log, "gap quadratic negative", n, neg);
  CheckOutcome corr = verify_h_negativity(n, cell, true);
  log_step(log, "gap quadratic negative (u^3 coefficient)", n, corr);
  if (!neg.pass()) return fail(neg, "gap quadratic negative");
  CheckOutcome lead = verify_leading_term(n, cell);
  log_step(log, "leading term", n, lead);
  st.n = n + 1;
  st.a_bound = Rat(5) / lambda_of(n + 1);
  return true;
}

InductionState start_state(const AlphaCell& cell, std::vector<StepRecord>* log) {
  InductionState st;
  st.alpha = cell;
  CheckOutcome gap;
  Interval g = gap_from_beta(cell);
  gap = outcome(g.hi() < 0.31, g);
  log_step(log, "gap from beta", 3, gap);
  CheckOutcome base = base_case_n3(cell);
  log_step(log, "base case", 3, base);
  if (!gap.pass() || !base.pass()) {
    st.failed_at = 3;
    st.failure = !gap.pass() ? gap.status : base.status;
    st.diagnostics = !gap.pass() ? "gap from beta exceeds 0.31" : "base case: " + base.detail;
    return st;
  }
  // The base case excludes [1/8, 31/100] and 1/8 = 5/lambda_5.
  st.holds = true;
  st.n = 5;
  st.a_bound = Rat(1, 8);
  return st;
}

}  // namespace

InductionState run_induction(const AlphaCell& cell, int n_max, std::vector<StepRecord>* log) {
  StepSink sink;
  if (log) sink = [log](std::size_t, const StepRecord& r) { log->push_back(r); };
  return run_induction_cells({cell}, n_max, sink).front();
}

std::vector<InductionState> run_induction_cells(const std::vector<AlphaCell>& cells, int n_max,
                                                const StepSink& sink, int threads) {
  if (n_max < 3) throw std::invalid_argument("run_induction: n_max >= 3 required");
  std::vector<std::vector<StepRecord>> pending(cells.size());
  auto flush = [&] {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (sink) {
        for (const StepRecord& r : pending[i]) sink(i, r);
      }
      pending[i].clear();
    }
  };
  std::vector<InductionState> states(cells.size());
  std::vector<StepRecord>* none = nullptr;
  detail::parallel_for(cells.size(), threads, [&](std::size_t i) {
    states[i] = start_state(cells[i], sink ? &pending[i] : none);
  });
  flush();
  for (int n = 3; n < n_max; ++n) {
    bool any = std::any_of(states.begin(), states.end(), [](const auto& s) { return s.holds; });
    if (!any) break;
    StepTables t(n);
    detail::parallel_for(cells.size(), threads, [&](std::size_t i) {
      if (states[i].holds) run_step(t, cells[i], sink ? &pending[i] : none, states[i]);
    });
    flush();
  }
  return states;
}

}  // namespace gegencert
