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
#ifndef GEGENCERT_REPORT_HPP_
#define GEGENCERT_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gegencert/rational.hpp"

namespace gegencert {

enum class Command { kVerifyGegenbauer, kVerifyLemmas, kVerifyInduction, kPropertyTests, kFigures };
enum class Format { kJson, kText };

std::string to_string(Command c);
std::string to_string(Format f);

// Malformed or out-of-range configuration; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FigureSpec {
  int k = 10;
  std::string x_lo = "0";
  std::string x_hi = "1";
};

struct RunConfig {
  Command command = Command::kVerifyGegenbauer;
  int k_max = 100;
  int n_max = 200;
  std::string alpha_lo = "0.5";
  std::string alpha_hi = "0.99";
  int alpha_cells = 50;
  std::uint64_t seed = 42;
  int densities = 10000;
  bool adversarial = true;
  int samples = 201;
  std::vector<FigureSpec> figures;  // in addition to the two defaults
  std::string output_dir = ".";
  Format format = Format::kJson;
  int threads = 1;

  // Throws ConfigError for the active command's invariants.
  void validate() const;
  // Every field that can change report content, in a fixed order. Output
  // directory and thread count are excluded.
  std::string canonical() const;
  // FNV-1a 64 of canonical(), 16 hex digits.
  std::string hash() const;
};

Rat parse_alpha(const std::string& text);

// Exact "p/q" plus a 17-significant-digit decimal.
struct Endpoint {
  std::string decimal;
  std::string exact;
};

Endpoint endpoint(const Rat& r);
Endpoint endpoint(double d);

enum class Status { kPass, kFail, kInconclusive, kInfo };
std::string to_string(Status s);

struct Record {
  std::string check;
  long long index = 0;
  std::string alpha_cell = "-";
  Status status = Status::kPass;
  std::optional<Endpoint> lo, hi;
  std::string detail;
};

class Report {
 public:
  explicit Report(RunConfig cfg) : cfg_(std::move(cfg)) {}

  const RunConfig& config() const { return cfg_; }
  const std::vector<Record>& records() const { return records_; }
  void add(Record r) { records_.push_back(std::move(r)); }

  std::size_t count(Status s) const;
  // 0 pass, 1 failure, 3 inconclusive only.
  int exit_code() const;

  std::string text() const;
  std::string json() const;
  std::string render() const { return cfg_.format == Format::kJson ? json() : text(); }

 private:
  RunConfig cfg_;
  std::vector<Record> records_;
};

}  // namespace gegencert

#endif  // GEGENCERT_REPORT_HPP_
