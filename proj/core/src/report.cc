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

#include "gegencert/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#ifndef GEGENCERT_VERSION
#define GEGENCERT_VERSION "unknown"
#endif

namespace gegencert {

std::string to_string(Command c) {
  switch (c) {
    case Command::kVerifyGegenbauer:
      return "verify-gegenbauer";
    case Command::kVerifyLemmas:
      return "verify-lemmas";
    case Command::kVerifyInduction:
      return "verify-induction";
    case Command::kPropertyTests:
      return "property-tests";
    case Command::kFigures:
      return "figures";
  }
  return "?";
}

std::string to_string(Format f) { return f == Format::kJson ? "json" : "text"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kInconclusive:
      return "inconclusive";
    case Status::kInfo:
      return "info";
  }
  return "?";
}

Rat parse_alpha(const std::string& text) {
  Rat a;
  try {
    a = Rat::parse(text);
  } catch (const std::exception&) {
    throw ConfigError("malformed alpha '" + text + "'");
  }
  if (a < Rat(1, 2) || a >= Rat(1)) {
    throw ConfigError("alpha " + text + " outside [1/2, 1)");
  }
  return a;
}

namespace {

Rat parse_coordinate(const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const std::exception&) {
    throw ConfigError("malformed coordinate '" + text + "'");
  }
}

}  // namespace

void RunConfig::validate() const {
  Rat lo = parse_alpha(alpha_lo);
  Rat hi = parse_alpha(alpha_hi);
  if (hi < lo) throw ConfigError("alpha_lo exceeds alpha_hi");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  switch (command) {
    case Command::kVerifyGegenbauer:
      if (k_max < 0) throw ConfigError("k_max must be >= 0");
      break;
    case Command::kVerifyLemmas:
      if (k_max < 6) throw ConfigError("k_max must be >= 6");
      break;
    case Command::kVerifyInduction:
      if (n_max < 3) throw ConfigError("n_max must be >= 3");
      if (alpha_cells < 1) throw ConfigError("alpha_cells must be >= 1");
      break;
    case Command::kPropertyTests:
      if (densities < 1) throw ConfigError("densities must be >= 1");
      break;
    case Command::kFigures:
      if (samples < 2) throw ConfigError("samples must be >= 2");
      for (const FigureSpec& f : figures) {
        Rat x0 = parse_coordinate(f.x_lo), x1 = parse_coordinate(f.x_hi);
        if (f.k < 1 || x0 < Rat(-1) || x1 > Rat(1) || !(x0 < x1)) {
          throw ConfigError("invalid figure range k=" + std::to_string(f.k) + " [" + f.x_lo +
                            ", " + f.x_hi + "]");
        }
      }
      break;
  }
}

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os << "command=" << to_string(command) << ";k_max=" << k_max << ";n_max=" << n_max
     << ";alpha_lo=" << alpha_lo << ";alpha_hi=" << alpha_hi << ";alpha_cells=" << alpha_cells
     << ";seed=" << seed << ";densities=" << densities << ";adversarial=" << adversarial
     << ";samples=" << samples << ";figures=";
  for (size_t i = 0; i < figures.size(); ++i) {
    os << (i ? "," : "") << figures[i].k << ":" << figures[i].x_lo << ":" << figures[i].x_hi;
  }
  os << ";format=" << to_string(format);
  return os.str();
}

std::string RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Endpoint endpoint(const Rat& r) { return {r.decimal(17), r.str()}; }

Endpoint endpoint(double d) {
  if (std::isnan(d)) return {"nan", ""};
  if (std::isinf(d)) return {d > 0 ? "inf" : "-inf", ""};
  return endpoint(Rat(mpq_class(d)));
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const Record& r : records_) n += r.status == s;
  return n;
}

int Report::exit_code() const {
  if (count(Status::kFail)) return 1;
  if (count(Status::kInconclusive)) return 3;
  return 0;
}

namespace {

std::string render_endpoint(const std::optional<Endpoint>& e) {
  if (!e) return "-";
  return e->exact.empty() ? e->decimal : e->decimal + " (" + e->exact + ")";
}

nlohmann::ordered_json endpoint_json(const std::optional<Endpoint>& e) {
  if (!e) return nullptr;
  return {{"decimal", e->decimal}, {"exact", e->exact}};
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  os << "# gegencert " << GEGENCERT_VERSION << " report\n"
     << "# config: " << cfg_.canonical() << "\n"
     << "# config-hash: " << cfg_.hash() << "\n"
     << "check\tindex\talpha_cell\tstatus\tlo\thi\tdetail\n";
  for (const Record& r : records_) {
    os << r.check << '\t' << r.index << '\t' << r.alpha_cell << '\t' << to_string(r.status)
       << '\t' << render_endpoint(r.lo) << '\t' << render_endpoint(r.hi) << '\t'
       << (r.detail.empty() ? "-" : r.detail) << '\n';
  }
  os << "# summary: " << count(Status::kPass) << " pass, " << count(Status::kFail) << " fail, "
     << count(Status::kInconclusive) << " inconclusive, exit " << exit_code() << "\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  out.push_back({{"check", "config"},
                 {"index", 0},
                 {"alpha_cell", "-"},
                 {"status", "info"},
                 {"lo", nullptr},
                 {"hi", nullptr},
                 {"tool", std::string("gegencert ") + GEGENCERT_VERSION},
                 {"config", cfg_.canonical()},
                 {"config_hash", cfg_.hash()}});
  for (const Record& r : records_) {
    nlohmann::ordered_json j = {{"check", r.check},
                                {"index", r.index},
                                {"alpha_cell", r.alpha_cell},
                                {"status", to_string(r.status)},
                                {"lo", endpoint_json(r.lo)},
                                {"hi", endpoint_json(r.hi)}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    out.push_back(std::move(j));
  }
  // One element per line keeps large sweeps diffable.
  std::string text = "[\n";
  for (size_t i = 0; i < out.size(); ++i) {
    text += out[i].dump();
    text += i + 1 < out.size() ? ",\n" : "\n";
  }
  return text + "]\n";
}

}  // namespace gegencert
