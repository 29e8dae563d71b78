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


// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gegencert/gegencert.hpp"

namespace {

using namespace gegencert;  // NOLINT(build/namespaces)

// Criteria that fail on a falsified statement; see README "Known failures".
const std::set<int> kDocumentedFailures = {8};

struct Outcome {
  bool pass = true;
  std::string detail;
};

Rat exact(double d) { return Rat(mpq_class(d)); }

bool contains(const Interval& iv, const Rat& x) {
  return exact(iv.lo()) <= x && x <= exact(iv.hi());
}

Outcome exact_identities() {
  int bad = 0;
  for (int k = 0; k <= 100; ++k) {
    if (!check_ode(k)) ++bad;
    if (k >= 1) {
      for (int twice : {3, 5, 7}) {
        if (!check_derivative_identity(HalfInt(twice), k)) ++bad;
      }
    }
  }
  for (int k = 0; k <= 40; ++k) {
    for (int l = 0; l <= 40; ++l) {
      Rat expected = k == l ? Rat(8) / Rat((2 * k + 3) * (k + 1) * (k + 2)) : Rat(0);
      if (weighted_inner_product(zonal_profile(k), zonal_profile(l)) != expected) ++bad;
      if (!check_orthogonality(k, l)) ++bad;
    }
  }
  return {bad == 0, std::to_string(bad) + " identity failures, k <= 100, orthogonality k, l <= 40"};
}

Outcome minimum_bound() {
  int bad = 0;
  double worst = 0.0;
  for (int k = 6; k <= 50; ++k) {
    LemmaVerdict v = verify_minimum_direct(k);
    if (!v.pass || v.witness.lo() < -0.081) ++bad;
    worst = std::min(worst, v.witness.lo());
  }
  double worst_asym = 0.0;
  for (int k = 51; k <= 500; ++k) {
    LemmaVerdict v = verify_minimum_asymptotic(k);
    if (!v.pass) ++bad;
    worst_asym = std::min(worst_asym, v.witness.lo());
  }
  std::ostringstream out;
  out << bad << " failures; exact min >= " << worst << " (6..50), asymptotic cell bound >= "
      << worst_asym << " (51..500)";
  return {bad == 0, out.str()};
}

Outcome plateau_bound() {
  int bad = 0;
  for (int k = 6; k <= 50; ++k) {
    Rat v = scaled_derivative(k)(Rat(1) - Rat(10) / lambda_of(k));
    if (v < Rat(81, 1000) || v > Rat(11, 100)) ++bad;
  }
  for (int k = 6; k <= 500; ++k) {
    if (!verify_plateau(k).pass) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " failures; point value exact 6..50, full verdict 6..500"};
}

Outcome asymptotic_containment() {
  const Rat xs[] = {Rat(9, 10), Rat(7, 10), Rat(1, 2), Rat(3, 10), Rat(1, 10),
                    Rat(-1, 10), Rat(-3, 10), Rat(-1, 2), Rat(-7, 10), Rat(-9, 10)};
  int points = 0, misses = 0;
  for (int i = 0; i < 20; ++i) {
    const int k = 51 + 13 * i;
    for (const Rat& x : xs) {
      ++points;
      Interval e = expansion_enclosure({k, acos(enclose_rat(x)), 2});
      if (!contains(e, gegenbauer_value(HalfInt(5), k - 1, x))) ++misses;
    }
  }
  int dominance = 0, cells = 0;
  for (int k = 51; k <= 300; ++k) {
    for (int i = 0; i <= 40; ++i) {
      const double l = std::sqrt(18.0) + (k - std::sqrt(18.0)) * i / 40.0;
      Interval ratio = Interval(l) / Interval(static_cast<double>(k));
      if (ratio.hi() > 1.0) ratio = Interval(ratio.lo(), 1.0);
      const Interval zeta = asin(ratio);
      const Interval coarse = coarse_remainder(k, zeta);
      const Interval simple =
          l <= k / std::sqrt(2.0) ? remainder_small_l(k, Interval(l)) : remainder_large_l(k);
      ++cells;
      if (!(scaled_derivative_remainder(k, zeta).hi() <= coarse.lo())) ++dominance;
      if (!(coarse.hi() <= simple.lo())) ++dominance;
    }
  }
  std::ostringstream out;
  out << misses << "/" << points << " containment misses, " << dominance << " dominance violations over "
      << cells << " (k, l) cells";
  return {misses == 0 && dominance == 0, out.str()};
}

Outcome sum_identities() {
  const Rat alphas[] = {Rat(1, 2), Rat(2, 3), Rat(3, 4), Rat(9, 10), Rat(99, 100)};
  int bad = 0, checks = 0;
  for (const Rat& alpha : alphas) {
    for (int i = 1; i <= 6; ++i) {
      for (int n = 0; n <= 100; ++n) {
        ++checks;
        if (weighted_sum_closed(i, n, alpha) != weighted_sum_direct(i, n, alpha)) ++bad;
      }
    }
    for (int m = 1; m <= 20; ++m) {
      const Rat a = Rat(5) / lambda_of(2 * m + 1);
      for (int j = 0; j <= 8; ++j) {
        const Rat lambda = Rat(1, 2) + Rat(j, 16);
        ++checks;
        if (spectral_sum_from_sums(lambda, a, alpha, m) != spectral_sum(lambda, a, alpha, 2 * m + 1)) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(bad) + "/" + std::to_string(checks) + " exact mismatches"};
}

Outcome induction() {
  const auto cells = alpha_cells(Rat(1, 2), Rat(995, 1000), 50);
  int bad_base = 0, bad_h = 0, bad_lead = 0;
  double worst_h = -INFINITY, worst_lead = -INFINITY;
  for (const auto& c : cells) {
    if (!base_case_n3(c).pass()) ++bad_base;
  }
  for (int n = 3; n <= 2000; ++n) {
    for (const auto& c : cells) {
      CheckOutcome h = verify_h_negativity(n, c);
      if (!h.pass()) ++bad_h;
      worst_h = std::max(worst_h, h.value.hi());
      CheckOutcome lead = verify_leading_term(n, c);
      if (!lead.pass() || !(lead.value.hi() < -1.0 / 6.0)) ++bad_lead;
      worst_lead = std::max(worst_lead, lead.value.hi());
    }
  }
  int not_holding = 0;
  Rat loosest;
  for (const auto& st : run_induction_cells(cells, 2001)) {
    if (!st.holds) ++not_holding;
    loosest = max(loosest, st.a_bound);
  }
  std::ostringstream out;
  out << "base case " << bad_base << " fail; h_n " << bad_h << " fail (max " << worst_h
      << "); leading term " << bad_lead << " fail (max " << worst_lead << "); " << not_holding
      << " cells not holding, a < " << loosest.str();
  return {bad_base == 0 && bad_h == 0 && bad_lead == 0 && not_holding == 0, out.str()};
}

Outcome beta_bounds() {
  int bad = 0;
  double worst_gap = -INFINITY;
  for (const auto& c : alpha_cells(Rat(1, 2), Rat(999999, 1000000), 1000)) {
    if (beta_lower(c.lo) < Rat(16, 13) || beta_lower(c.hi) < Rat(16, 13)) ++bad;
    // beta_lower - 16/13 = (16/39)(2 - u)(6 - u)
    const Interval u(enclose_rat(c.u_lo()).lo(), enclose_rat(c.u_hi()).hi());
    const Interval excess = (Interval(2.0) - u) * (Interval(6.0) - u);
    if (excess.lo() < 0.0) ++bad;
    const Interval gap = gap_from_beta(c);
    if (!(gap.hi() < 0.31)) ++bad;
    worst_gap = std::max(worst_gap, gap.hi());
  }
  std::ostringstream out;
  out << bad << " violations over 1000 alpha cells; largest induced a " << worst_gap;
  return {bad == 0, out.str()};
}

Outcome falsification_search() {
  PropertySummary s = run_property_suite(42, 10000, true);
  std::ostringstream out;
  out << s.densities << " densities";
  for (const auto& [check, count] : s.violation_counts) out << "; " << check << ": " << count << " violations";
  if (!s.violations.empty()) {
    const Violation& v = s.violations.front();
    out << "; first " << v.check << " k = " << v.k << ", g = " << v.g.serialize() << ", |A_k| = "
        << v.value.decimal(6) << " > " << v.bound.decimal(6);
  }
  return {s.clean(), out.str()};
}

Outcome figures() {
  RunConfig cfg;
  cfg.command = Command::kFigures;
  cfg.samples = 501;
  SuiteResult r = run_figures(cfg);
  bool ok = r.exit_code == 0 && r.files.size() == 2 && r.files[0].name == "figure_k10.csv" &&
            r.files[1].name == "figure_k30.csv";
  auto low = figure_data(10, Rat(0), Rat(1), 501);
  Rat dip = low.front().value;
  for (const auto& row : low) dip = min(dip, row.value);
  ok = ok && low.back().value == Rat(1) && dip < Rat(-6, 100) && dip > Rat(-81, 1000);
  auto tail = figure_data(30, Rat(4, 5), Rat(1), 501);
  const Rat plateau_end = Rat(1) - Rat(10) / lambda_of(30);
  for (std::size_t i = 1; i < tail.size(); ++i) {
    if (tail[i].x > plateau_end && !(tail[i].value > tail[i - 1].value)) ok = false;
    if (tail[i].x <= plateau_end && tail[i].value > Rat(11, 100)) ok = false;
  }
  ok = ok && tail.back().value == Rat(1);

  const RatPoly& p = scaled_derivative(10);
  Rat scan = p(Rat(0));
  for (int i = 1; i <= 10000; ++i) scan = min(scan, p(Rat(i, 10000)));
  LemmaVerdict v = verify_minimum(10);
  const bool inside = contains(v.witness, scan);
  std::ostringstream out;
  out << "dense-scan min " << scan.decimal(10) << " in certified " << v.witness.str();
  return {ok && inside && v.pass, out.str()};
}

Outcome determinism() {
  std::vector<RunConfig> configs;
  RunConfig g;
  g.command = Command::kVerifyGegenbauer;
  g.k_max = 30;
  configs.push_back(g);
  RunConfig l;
  l.command = Command::kVerifyLemmas;
  l.k_max = 60;
  configs.push_back(l);
  RunConfig ind;
  ind.command = Command::kVerifyInduction;
  ind.n_max = 40;
  ind.alpha_cells = 8;
  configs.push_back(ind);
  RunConfig prop;
  prop.command = Command::kPropertyTests;
  prop.densities = 500;
  configs.push_back(prop);
  RunConfig fig;
  fig.command = Command::kFigures;
  configs.push_back(fig);
  int differ = 0, runs = 0;
  for (RunConfig cfg : configs) {
    for (Format f : {Format::kJson, Format::kText}) {
      cfg.format = f;
      cfg.threads = 1;
      SuiteResult a = run_command(cfg);
      SuiteResult b = run_command(cfg);
      cfg.threads = 2;
      SuiteResult c = run_command(cfg);
      runs += 3;
      const std::string ref = a.report.render();
      if (ref != b.report.render() || ref != c.report.render()) ++differ;
      for (std::size_t i = 0; i < a.files.size(); ++i) {
        if (a.files[i].content != b.files[i].content || a.files[i].content != c.files[i].content) ++differ;
      }
    }
  }
  return {differ == 0, std::to_string(differ) + " differing outputs across " + std::to_string(runs) +
                           " runs (threads 1 and 2)"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no runtime target
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "exact identities", 120, exact_identities},
      {2, "derivative minimum", 600, minimum_bound},
      {3, "plateau and chord", 0, plateau_bound},
      {4, "asymptotic containment", 0, asymptotic_containment},
      {5, "weighted sum identities", 0, sum_identities},
      {6, "induction", 900, induction},
      {7, "beta and mass bounds", 0, beta_bounds},
      {8, "falsification search", 0, falsification_search},
      {9, "figure data", 0, figures},
      {10, "determinism", 0, determinism},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over runtime target";
    }
    const bool documented = kDocumentedFailures.count(c.id) > 0;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << " ["
              << timing << "] " << o.detail;
    if (!o.pass && documented) std::cout << " (documented failure)";
    if (o.pass && documented) std::cout << " (documented failure now passes; update the list)";
    std::cout << std::endl;
    if (o.pass == documented) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
