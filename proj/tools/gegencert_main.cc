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

// Command-line front end: runs one verification suite and writes its report
// (plus CSV tables for `figures`) into the output directory.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 configuration error,
// 3 inconclusive without failures.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gegencert/errors.hpp"
#include "gegencert/suites.hpp"

namespace {

constexpr int kConfigError = 2;

gegencert::FigureSpec parse_figure(const std::string& text) {
  // k:lo:hi
  auto a = text.find(':');
  auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw gegencert::ConfigError("figure spec must be k:lo:hi, got " + text);
  gegencert::FigureSpec f;
  try {
    f.k = std::stoi(text.substr(0, a));
  } catch (const std::exception&) {
    throw gegencert::ConfigError("bad figure degree in " + text);
  }
  f.x_lo = text.substr(a + 1, b - a - 1);
  f.x_hi = text.substr(b + 1);
  return f;
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  using gegencert::Command;
  gegencert::RunConfig cfg;
  CLI::App app{"Certified checks for the scaled Gegenbauer derivative bounds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> k_max, n_max;
  std::string format = "json";
  std::vector<std::string> figures;
  bool no_adversarial = false;
  app.add_option("--k-max", k_max, "Largest degree (default 100, verify-lemmas 500)")
      ->envname("GEGENCERT_K_MAX");
  app.add_option("--n-max", n_max, "Induction horizon (default 200)")->envname("GEGENCERT_N_MAX");
  app.add_option("--alpha-lo", cfg.alpha_lo, "Lower end of the alpha range")
      ->envname("GEGENCERT_ALPHA_LO")
      ->capture_default_str();
  app.add_option("--alpha-hi", cfg.alpha_hi, "Upper end of the alpha range")
      ->envname("GEGENCERT_ALPHA_HI")
      ->capture_default_str();
  app.add_option("--alpha-cells", cfg.alpha_cells, "Number of alpha cells")
      ->envname("GEGENCERT_ALPHA_CELLS")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for the density corpus")
      ->envname("GEGENCERT_SEED")
      ->capture_default_str();
  app.add_option("--densities", cfg.densities, "Corpus size for property-tests")
      ->envname("GEGENCERT_DENSITIES")
      ->capture_default_str();
  app.add_flag("--no-adversarial", no_adversarial, "Drop the near-endpoint density families");
  app.add_option("--samples", cfg.samples, "Samples per figure table")
      ->envname("GEGENCERT_SAMPLES")
      ->capture_default_str();
  app.add_option("--figure", figures, "Extra figure as k:lo:hi");
  app.add_option("--out", cfg.output_dir, "Output directory")
      ->envname("GEGENCERT_OUT")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("GEGENCERT_FORMAT")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps")
      ->envname("GEGENCERT_THREADS")
      ->capture_default_str();

  const std::pair<const char*, Command> commands[] = {
      {"verify-gegenbauer", Command::kVerifyGegenbauer},
      {"verify-lemmas", Command::kVerifyLemmas},
      {"verify-induction", Command::kVerifyInduction},
      {"property-tests", Command::kPropertyTests},
      {"figures", Command::kFigures},
  };
  const char* help[] = {
      "Exact identities, normalization and orthogonality up to --k-max",
      "Minimum, point value and plateau bounds for 6 <= k <= --k-max",
      "Induction over alpha cells through --n-max",
      "Seeded falsification search over admissible densities",
      "CSV tables of the scaled derivative",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    app.add_subcommand(commands[i].first, help[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  for (const auto& [name, command] : commands) {
    if (app.got_subcommand(name)) cfg.command = command;
  }
  cfg.format = format == "text" ? gegencert::Format::kText : gegencert::Format::kJson;
  cfg.adversarial = !no_adversarial;
  cfg.k_max = k_max.value_or(cfg.command == Command::kVerifyLemmas ? 500 : 100);
  cfg.n_max = n_max.value_or(200);

  gegencert::SuiteResult result{gegencert::Report(cfg), {}, 0};
  try {
    for (const std::string& f : figures) cfg.figures.push_back(parse_figure(f));
    result = gegencert::run_command(cfg);
  } catch (const gegencert::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const gegencert::VerificationError& e) {
    std::cerr << "verification error (" << gegencert::to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == gegencert::ErrorKind::kInconclusive ? 3 : 1;
  }

  std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path report_path = dir / gegencert::report_file_name(cfg);
  bool ok = write_file(report_path, result.report.render());
  for (const auto& f : result.files) ok = write_file(dir / f.name, f.content) && ok;
  if (!ok) {
    std::cerr << "cannot write to " << dir << "\n";
    return kConfigError;
  }

  const auto& rep = result.report;
  for (const auto& r : rep.records()) {
    if (r.status == gegencert::Status::kFail || r.status == gegencert::Status::kInconclusive) {
      std::cerr << "first " << gegencert::to_string(r.status) << ": " << r.check << " index " << r.index
                << " cell " << r.alpha_cell << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
      break;
    }
  }
  std::cout << gegencert::to_string(cfg.command) << ": " << rep.count(gegencert::Status::kPass)
            << " pass, " << rep.count(gegencert::Status::kFail) << " fail, "
            << rep.count(gegencert::Status::kInconclusive) << " inconclusive; report "
            << report_path.string() << "\n";
  return result.exit_code;
}
