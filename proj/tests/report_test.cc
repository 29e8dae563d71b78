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

#include <algorithm>
#include <sstream>
#include <string>

#include "gegencert/report.hpp"
#include "gegencert/suites.hpp"
#include "json.hpp"

namespace gegencert {
namespace {

RunConfig config(Command c) {
  RunConfig cfg;
  cfg.command = c;
  return cfg;
}

TEST(ParseAlpha, Range) {
  EXPECT_EQ(parse_alpha("0.5"), Rat(1, 2));
  EXPECT_EQ(parse_alpha("0.517"), Rat(517, 1000));
  EXPECT_EQ(parse_alpha("99/100"), Rat(99, 100));
  EXPECT_THROW(parse_alpha("1.0"), ConfigError);
  EXPECT_THROW(parse_alpha("0.49"), ConfigError);
  EXPECT_THROW(parse_alpha("abc"), ConfigError);
}

TEST(RunConfig, Validation) {
  RunConfig lemmas = config(Command::kVerifyLemmas);
  lemmas.k_max = 5;
  EXPECT_THROW(lemmas.validate(), ConfigError);
  lemmas.k_max = 6;
  EXPECT_NO_THROW(lemmas.validate());

  RunConfig gegen = config(Command::kVerifyGegenbauer);
  gegen.k_max = 5;
  EXPECT_NO_THROW(gegen.validate());
  gegen.alpha_lo = "x";
  EXPECT_THROW(gegen.validate(), ConfigError);

  RunConfig ind = config(Command::kVerifyInduction);
  ind.n_max = 2;
  EXPECT_THROW(ind.validate(), ConfigError);
  ind.n_max = 3;
  ind.alpha_hi = "1.0";
  EXPECT_THROW(ind.validate(), ConfigError);
  ind.alpha_hi = "0.4";
  EXPECT_THROW(ind.validate(), ConfigError);

  RunConfig fig = config(Command::kFigures);
  fig.samples = 1;
  EXPECT_THROW(fig.validate(), ConfigError);
  fig.samples = 2;
  fig.figures.push_back({10, "0.9", "0.1"});
  EXPECT_THROW(fig.validate(), ConfigError);
}

TEST(RunConfig, HashCoversContentOnly) {
  RunConfig a = config(Command::kVerifyInduction);
  RunConfig b = a;
  b.output_dir = "/elsewhere";
  b.threads = 4;
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  EXPECT_EQ(a.hash().find_first_not_of("0123456789abcdef"), std::string::npos);
  b.seed = 43;
  EXPECT_NE(a.hash(), b.hash());
  b = a;
  b.alpha_hi = "0.98";
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Endpoint, Rendering) {
  Endpoint e = endpoint(Rat(1, 3));
  EXPECT_EQ(e.exact, "1/3");
  EXPECT_EQ(e.decimal, "0.33333333333333333");
  Endpoint d = endpoint(0.5);
  EXPECT_EQ(d.exact, "1/2");
  EXPECT_EQ(endpoint(Rat(5, 40600)).exact, "1/8120");
}

TEST(Report, ExitCodes) {
  Report r(config(Command::kVerifyGegenbauer));
  EXPECT_EQ(r.exit_code(), 0);
  r.add({"a", 1, "-", Status::kInfo, std::nullopt, std::nullopt, ""});
  EXPECT_EQ(r.exit_code(), 0);
  r.add({"b", 2, "-", Status::kInconclusive, std::nullopt, std::nullopt, ""});
  EXPECT_EQ(r.exit_code(), 3);
  r.add({"c", 3, "-", Status::kFail, std::nullopt, std::nullopt, ""});
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.count(Status::kFail), 1u);
}

TEST(Report, TextLayout) {
  RunConfig cfg = config(Command::kVerifyGegenbauer);
  cfg.format = Format::kText;
  Report r(cfg);
  r.add({"ode", 4, "-", Status::kPass, endpoint(Rat(1, 3)), endpoint(Rat(1, 2)), "ok"});
  std::istringstream in(r.text());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# gegencert ", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# config:", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line, "# config-hash: " + cfg.hash());
  std::getline(in, line);
  EXPECT_EQ(line.rfind("check\t", 0), 0u);
  std::getline(in, line);
  EXPECT_NE(line.find("ode\t4\t-\tpass\t"), std::string::npos);
  EXPECT_NE(line.find("0.33333333333333333 (1/3)"), std::string::npos);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# summary: 1 pass", 0), 0u);
}

TEST(Report, JsonLayout) {
  Report r(config(Command::kVerifyLemmas));
  r.add({"derivative-minimum", 6, "-", Status::kPass, endpoint(-0.0809), endpoint(-0.0808), ""});
  r.add({"point-value", 6, "-", Status::kFail, std::nullopt, std::nullopt, "x"});
  auto doc = nlohmann::json::parse(r.json());
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[0]["check"], "config");
  EXPECT_EQ(doc[0]["config_hash"], r.config().hash());
  for (const char* key : {"check", "index", "alpha_cell", "status", "lo", "hi"}) {
    EXPECT_TRUE(doc[1].contains(key)) << key;
  }
  EXPECT_EQ(doc[1]["status"], "pass");
  EXPECT_EQ(doc[2]["status"], "fail");
  EXPECT_TRUE(doc[2]["lo"].is_null());
}

TEST(Suites, GegenbauerSmall) {
  RunConfig cfg = config(Command::kVerifyGegenbauer);
  cfg.k_max = 5;
  SuiteResult r = run_command(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_GT(r.report.count(Status::kPass), 0u);
  EXPECT_EQ(report_file_name(cfg), "verify-gegenbauer.json");
}

TEST(Suites, EnumeratesEveryInductionCell) {
  RunConfig cfg = config(Command::kVerifyInduction);
  cfg.n_max = 6;
  cfg.alpha_cells = 3;
  SuiteResult r = run_command(cfg);
  EXPECT_EQ(r.exit_code, 0);
  std::size_t steps = 0, bounds = 0;
  for (const auto& rec : r.report.records()) {
    if (rec.check == "induction step") ++steps;
    if (rec.check == "a bound") {
      ++bounds;
      ASSERT_TRUE(rec.hi.has_value());
      EXPECT_EQ(rec.hi->exact, (Rat(5) / Rat(54)).str());
    }
  }
  EXPECT_EQ(steps, 3u * 3u);
  EXPECT_EQ(bounds, 3u);
}

TEST(Suites, PropertyViolationSerializesDensity) {
  RunConfig cfg = config(Command::kPropertyTests);
  cfg.densities = 3000;
  SuiteResult r = run_command(cfg);
  EXPECT_EQ(r.exit_code, 1);
  bool found = false;
  for (const auto& rec : r.report.records()) {
    if (rec.status != Status::kFail) continue;
    found = true;
    EXPECT_EQ(rec.check, "degree-4 bound");
    EXPECT_NE(rec.detail.find("g = "), std::string::npos);
  }
  EXPECT_TRUE(found);
}

TEST(Suites, Figures) {
  RunConfig cfg = config(Command::kFigures);
  cfg.samples = 2;
  cfg.figures.push_back({6, "0", "1/2"});
  SuiteResult r = run_command(cfg);
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_EQ(r.files.size(), 3u);
  EXPECT_EQ(r.files[0].name, "figure_k10.csv");
  EXPECT_EQ(r.files[1].name, "figure_k30.csv");
  EXPECT_EQ(std::count(r.files[0].content.begin(), r.files[0].content.end(), '\n'), 3);
  EXPECT_EQ(r.files[1].content.rfind("x,value\n0.8", 0), 0u);
}

TEST(Suites, DeterministicAcrossRunsAndThreads) {
  RunConfig cfg = config(Command::kVerifyInduction);
  cfg.n_max = 12;
  cfg.alpha_cells = 5;
  const std::string first = run_command(cfg).report.render();
  EXPECT_EQ(first, run_command(cfg).report.render());
  cfg.threads = 3;
  EXPECT_EQ(first, run_command(cfg).report.render());
  cfg.format = Format::kText;
  EXPECT_EQ(run_command(cfg).report.render(), run_command(cfg).report.render());
}

}  // namespace
}  // namespace gegencert
