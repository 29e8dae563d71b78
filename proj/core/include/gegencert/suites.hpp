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
#ifndef GEGENCERT_SUITES_HPP_
#define GEGENCERT_SUITES_HPP_

#include <string>
#include <vector>

#include "gegencert/report.hpp"

namespace gegencert {

struct OutputFile {
  std::string name;  // relative to the output directory
  std::string content;
};

struct SuiteResult {
  Report report;
  std::vector<OutputFile> files;
  int exit_code = 0;
};

// Each runner validates the config (ConfigError) and fills one record per
// attempted check. Records come out in a fixed order for any thread count.
SuiteResult run_gegenbauer_suite(const RunConfig& cfg);
SuiteResult run_lemma_suite(const RunConfig& cfg);
SuiteResult run_induction_suite(const RunConfig& cfg);
SuiteResult run_property_tests(const RunConfig& cfg);
SuiteResult run_figures(const RunConfig& cfg);

SuiteResult run_command(const RunConfig& cfg);

// Report file name for the command and format.
std::string report_file_name(const RunConfig& cfg);

}  // namespace gegencert

#endif  // GEGENCERT_SUITES_HPP_
