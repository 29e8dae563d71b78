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

#include "gegencert/suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gegencert/errors.hpp"
#include "gegencert/estimates.hpp"
#include "gegencert/gegenbauer.hpp"
#include "gegencert/induction.hpp"
#include "gegencert/lemmas.hpp"
#include "parallel.hpp"

namespace gegencert {

namespace {

constexpr int kOrthogonalityLimit = 40;
constexpr int kDerivativeMaxLimit = 40;
constexpr int kExtremaLimit = 30;
constexpr int kPointValueLimit = 50;

Status from_error(const VerificationError& e) {
  return e.kind() == ErrorKind::kInconclusive ? Status::kInconclusive : Status::kFail;
}

Record make(std::string check, long long index, bool pass, std::string detail = {}) {
  Record r;
  r.check = std::move(check);
  r.index = index;
  r.status = pass ? Status::kPass : Status::kFail;
  r.detail = std::move(detail);
  return r;
}

Record from_verdict(const LemmaVerdict& v) {
  Record r = make(to_string(v.lemma), v.k, v.pass);
  r.lo = endpoint(v.witness.lo());
  r.hi = endpoint(v.witness.hi());
  std::string d = to_string(v.method);
  for (const PartResult& p : v.parts) {
    if (!p.pass) d += "; failed: " + p.name;
  }
  if (!v.detail.empty()) d += "; " + v.detail;
  r.detail = d;
  return r;
}

// Runs `check` and turns a VerificationError into a failing record.
template <class F>
Record guarded(const std::string& name, long long index, F check) {
  try {
    return check();
  } catch (const VerificationError& e) {
    Record r = make(name, index, false, e.what());
    r.status = from_error(e);
    return r;
  }
}

// Per-index record lists assembled in index order.
template <class F>
std::vector<Record> sweep(int first, int last, int threads, F per_index) {
  if (last < first) return {};
  std::vector<std::vector<Record>> slots(static_cast<std::size_t>(last - first + 1));
  detail::parallel_for(slots.size(), threads, [&](std::size_t i) {
    slots[i] = per_index(first + static_cast<int>(i));
  });
  std::vector<Record> out;
  for (auto& s : slots) {
    for (auto& r : s) out.push_back(std::move(r));
  }
  return out;
}

SuiteResult finish(Report report, std::vector<OutputFile> files = {}) {
  int code = report.exit_code();
  return {std::move(report), std::move(files), code};
}

Record interval_record(const std::string& check, long long index, const std::string& cell,
                       const CheckOutcome& o) {
  Record r;
  r.check = check;
  r.index = index;
  r.alpha_cell = cell;
  r.status = o.status == CheckStatus::kPass   ? Status::kPass
             : o.status == CheckStatus::kFail ? Status::kFail
                                              : Status::kInconclusive;
  r.lo = endpoint(o.value.lo());
  r.hi = endpoint(o.value.hi());
  r.detail = o.detail;
  return r;
}

}  // namespace

std::string report_file_name(const RunConfig& cfg) {
  return to_string(cfg.command) + (cfg.format == Format::kJson ? ".json" : ".txt");
}

SuiteResult run_gegenbauer_suite(const RunConfig& cfg) {
  cfg.validate();
  Report report(cfg);
  auto records = sweep(0, cfg.k_max, cfg.threads, [](int k) {
    std::vector<Record> out;
    out.push_back(make("normalization", k, zonal_profile(k)(Rat(1)) == Rat(1)));
    out.push_back(make("ode", k, check_ode(k)));
    if (k >= 1) {
      bool ok = true;
      for (int twice : {3, 5, 7}) ok = ok && check_derivative_identity(HalfInt(twice), k);
      out.push_back(make("derivative identity", k, ok, "nu = 3/2, 5/2, 7/2"));
      out.push_back(make("scaled derivative", k, scaled_derivative(k) == scaled_derivative_from_profile(k)));
    }
    if (k <= kOrthogonalityLimit) {
      bool ok = true;
      for (int l = 0; l <= k; ++l) ok = ok && check_orthogonality(k, l);
      Record r = make("orthogonality", k, ok, "against all l <= k");
      r.lo = r.hi = endpoint(orthogonality_constant(k));
      out.push_back(r);
    }
    if (k >= 1 && k <= kDerivativeMaxLimit) {
      out.push_back(guarded("derivative maximum", k, [k] {
        Record r = make("derivative maximum", k, true);
        r.hi = endpoint(derivative_max_bound(k));
        return r;
      }));
    }
    return out;
  });
  for (auto& r : records) report.add(std::move(r));
  return finish(std::move(report));
}

SuiteResult run_lemma_suite(const RunConfig& cfg) {
  cfg.validate();
  Report report(cfg);
  auto records = sweep(2, cfg.k_max, cfg.threads, [](int k) {
    std::vector<Record> out;
    if (k <= kExtremaLimit) {
      out.push_back(guarded("extrema-chain", k, [k] { return from_verdict(verify_extrema_structure(k)); }));
    }
    if (k < 6) return out;
    LemmaVerdict minimum;
    bool have_minimum = false;
    out.push_back(guarded("derivative-minimum", k, [&] {
      minimum = verify_minimum(k);
      have_minimum = true;
      return from_verdict(minimum);
    }));
    if (k <= kPointValueLimit) {
      out.push_back(guarded("point-value", k, [k] { return from_verdict(verify_point_bound(k)); }));
    }
    out.push_back(guarded("tail-zero-bound", k, [k] { return from_verdict(verify_tail_zero_bound(k)); }));
    out.push_back(guarded("plateau-chord", k, [&] {
      return from_verdict(verify_plateau(k, have_minimum ? &minimum : nullptr));
    }));
    return out;
  });
  for (auto& r : records) report.add(std::move(r));
  return finish(std::move(report));
}

SuiteResult run_induction_suite(const RunConfig& cfg) {
  cfg.validate();
  Report report(cfg);
  std::vector<AlphaCell> cells =
      alpha_cells(parse_alpha(cfg.alpha_lo), parse_alpha(cfg.alpha_hi), cfg.alpha_cells);
  std::vector<std::string> names;
  for (const AlphaCell& c : cells) names.push_back(c.str());

  // Reported-only checks are summarized per cell after the sweep.
  struct Tally {
    int attempted = 0, failed = 0, first_fail = 0;
    double worst = 0.0;
  };
  std::vector<std::map<std::string, Tally>> tallies(cells.size());
  // The gating checks of one step collapse into a single record.
  std::vector<Record> open(cells.size());
  std::vector<bool> has_open(cells.size(), false);
  auto close = [&](std::size_t i) {
    if (has_open[i]) report.add(std::move(open[i]));
    has_open[i] = false;
  };
  auto sink = [&](std::size_t i, const StepRecord& s) {
    const std::string& check = s.check;
    if (check == "gap from beta" || check == "base case") {
      report.add(interval_record(check, s.n, names[i], s.outcome));
      return;
    }
    bool reported_only = check == "quartic majorant (alpha-dependent line)" ||
                         check == "gap quadratic negative (u^3 coefficient)" ||
                         check == "leading term";
    if (reported_only) {
      Tally& t = tallies[i][check];
      ++t.attempted;
      double v = s.outcome.value.hi();
      if (t.attempted == 1 || v > t.worst) t.worst = v;
      if (!s.outcome.pass() && t.failed++ == 0) t.first_fail = s.n;
      return;
    }
    if (!has_open[i] || open[i].index != s.n) {
      close(i);
      open[i] = interval_record("induction step", s.n, names[i], s.outcome);
      open[i].detail.clear();
      has_open[i] = true;
    }
    Record& r = open[i];
    if (!s.outcome.pass()) {
      Record now = interval_record("induction step", s.n, names[i], s.outcome);
      r.status = now.status;
      r.detail = check + ": " + s.outcome.detail;
    }
    if (check == "gap quadratic negative" || check == "vacuous step") {
      r.lo = endpoint(s.outcome.value.lo());
      r.hi = endpoint(s.outcome.value.hi());
      if (check == "vacuous step") r.detail = s.outcome.detail;
    }
  };
  // Steps arrive in (n, cell) order; an n change closes every open record.
  int current_n = -1;
  auto ordered_sink = [&](std::size_t i, const StepRecord& s) {
    if (s.n != current_n && s.check != "gap from beta" && s.check != "base case") {
      for (std::size_t j = 0; j < cells.size(); ++j) close(j);
      current_n = s.n;
    }
    sink(i, s);
  };
  std::vector<InductionState> states = run_induction_cells(cells, cfg.n_max, ordered_sink, cfg.threads);
  for (std::size_t j = 0; j < cells.size(); ++j) close(j);

  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& [check, t] : tallies[i]) {
      Record r;
      r.check = check;
      r.index = t.failed ? t.first_fail : t.attempted;
      r.alpha_cell = names[i];
      // The leading term is a stated bound and gates; the other two are
      // alternative forms kept for comparison.
      r.status = check == "leading term" ? (t.failed ? Status::kFail : Status::kPass) : Status::kInfo;
      r.hi = endpoint(t.worst);
      std::ostringstream os;
      os << t.failed << " of " << t.attempted << " steps fail";
      if (t.failed) os << ", first at n = " << t.first_fail;
      r.detail = os.str();
      report.add(r);
    }
    const InductionState& st = states[i];
    Record r;
    r.check = "a bound";
    r.index = st.holds ? st.n : st.failed_at;
    r.alpha_cell = names[i];
    r.status = st.holds ? Status::kPass
               : st.failure == CheckStatus::kInconclusive ? Status::kInconclusive
                                                          : Status::kFail;
    if (st.holds) r.hi = endpoint(st.a_bound);
    r.detail = st.holds ? "a < " + st.a_bound.str() : st.diagnostics;
    report.add(r);
  }
  return finish(std::move(report));
}

SuiteResult run_property_tests(const RunConfig& cfg) {
  cfg.validate();
  Report report(cfg);
  PropertySummary s = run_property_suite(cfg.seed, static_cast<std::size_t>(cfg.densities), cfg.adversarial);
  Record corpus = make("corpus", static_cast<long long>(s.densities), true);
  corpus.status = Status::kInfo;
  corpus.detail = "seed " + std::to_string(s.seed) + (cfg.adversarial ? ", adversarial" : "");
  report.add(corpus);
  for (const auto& [check, attempted] : s.checks) {
    auto it = s.violation_counts.find(check);
    std::size_t bad = it == s.violation_counts.end() ? 0 : it->second;
    Record r = make(check, static_cast<long long>(bad), bad == 0,
                    std::to_string(attempted) + " instances, " + std::to_string(bad) + " violations");
    for (const Violation& v : s.violations) {
      if (v.check != check) continue;
      r.lo = endpoint(v.value);
      r.hi = endpoint(v.bound);
      r.detail += "; k = " + std::to_string(v.k) + ", g = " + v.g.serialize();
      break;
    }
    report.add(r);
  }
  return finish(std::move(report));
}

SuiteResult run_figures(const RunConfig& cfg) {
  cfg.validate();
  Report report(cfg);
  std::vector<FigureSpec> specs{{10, "0", "1"}, {30, "0.8", "1"}};
  specs.insert(specs.end(), cfg.figures.begin(), cfg.figures.end());
  std::vector<OutputFile> files;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const FigureSpec& f = specs[i];
    auto rows = figure_data(f.k, Rat::parse(f.x_lo), Rat::parse(f.x_hi), cfg.samples);
    std::string name = "figure_k" + std::to_string(f.k) + (i < 2 ? "" : "_" + std::to_string(i)) + ".csv";
    files.push_back({name, figure_csv(rows)});
    auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                        [](const auto& a, const auto& b) { return a.value < b.value; });
    Record r = make("figure", f.k, true, name + " on [" + f.x_lo + ", " + f.x_hi + "]");
    r.status = Status::kInfo;
    r.lo = endpoint(lo->value);
    r.hi = endpoint(hi->value);
    report.add(r);
  }
  return finish(std::move(report), std::move(files));
}

SuiteResult run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::kVerifyGegenbauer:
      return run_gegenbauer_suite(cfg);
    case Command::kVerifyLemmas:
      return run_lemma_suite(cfg);
    case Command::kVerifyInduction:
      return run_induction_suite(cfg);
    case Command::kPropertyTests:
      return run_property_tests(cfg);
    case Command::kFigures:
      return run_figures(cfg);
  }
  throw ConfigError("unknown command");
}

}  // namespace gegencert
